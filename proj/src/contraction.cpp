#include "potts/contraction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "potts/zeta.hpp"

namespace potts {
namespace {

struct Contracted {
  ModelSpec model;
  std::vector<IndexList> lists;
  Coupling front;
  std::map<int, int> site_map;
};

SiteSet validated_block(const ModelSpec& model, const SiteSet& block) {
  SiteSet b = make_site_set(block);
  if (b.size() < 2) throw std::invalid_argument("contraction block needs at least 2 sites");
  if (b.front() < 1 || b.back() > model.n())
    throw std::invalid_argument("contraction block " + to_string(b) + " is not a subset of 1.." +
                                std::to_string(model.n()));
  return b;
}

// Infinite couplings are carried along; callers decide whether that is legal.
Contracted contract_block(const ModelSpec& model, const std::vector<IndexList>& lists,
                          const SiteSet& block) {
  const int b1 = block.front();
  auto in_block = [&](int s) { return std::binary_search(block.begin(), block.end(), s); };

  std::map<int, int> site_map;
  int next = 0;
  for (int s = 1; s <= model.n(); ++s)
    if (!in_block(s) || s == b1) site_map[s] = ++next;
  for (int s : block) site_map[s] = site_map[b1];
  const int contracted_n = next;

  auto relabel = [&](const std::vector<int>& sites) {
    std::vector<int> out;
    out.reserve(sites.size());
    for (int s : sites) out.push_back(site_map.at(s));
    return out;
  };

  InteractionTable table;
  Coupling front;
  for (const auto& [sites, x] : model.interactions()) {
    SiteSet outside;
    std::copy_if(sites.begin(), sites.end(), std::back_inserter(outside),
                 [&](int s) { return !in_block(s); });
    if (outside.size() == sites.size()) {
      table.multiply_into(relabel(sites), x);
    } else if (outside.empty()) {
      front = front * x;
    } else {
      outside.push_back(b1);
      table.multiply_into(make_site_set(relabel(outside)), x);
    }
  }

  std::vector<IndexList> out_lists;
  out_lists.reserve(lists.size());
  for (const auto& list : lists) out_lists.emplace_back(relabel(list.entries()));

  return {ModelSpec(contracted_n, model.q(), std::move(table)), std::move(out_lists), front,
          std::move(site_map)};
}

}  // namespace

ContractionResult contract(const ModelSpec& model, const IndexList& list, const SiteSet& block) {
  model.require_finite();
  list.require_within(model.n());
  const SiteSet b = validated_block(model, block);
  Contracted c = contract_block(model, {list}, b);
  return {std::move(c.model), std::move(c.lists.front()), c.front.value(), std::move(c.site_map)};
}

ContractionCheck verify_contraction_identity(const ModelSpec& model, const IndexList& list,
                                             const SiteSet& block) {
  ContractionResult c = contract(model, list, block);
  Rational lhs = zeta(model, list, delta_event(make_site_set(block), true)).value;
  Rational rhs = c.front_factor * zeta(c.contracted_model, c.contracted_list).value;
  const bool equal = lhs == rhs;
  return {std::move(lhs), std::move(rhs), equal};
}

InfiniteResolution resolve_infinite_couplings(const ModelSpec& model,
                                              const std::vector<IndexList>& lists) {
  for (const auto& list : lists) list.require_within(model.n());

  std::vector<int> parent(model.n() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int s) {
    while (parent[s] != s) s = parent[s] = parent[parent[s]];
    return s;
  };
  for (const auto& [sites, x] : model.interactions()) {
    if (!x.is_infinite()) continue;
    for (int s : sites) {
      const int a = find(sites.front());
      const int b = find(s);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::map<int, SiteSet> clusters;
  for (int s = 1; s <= model.n(); ++s) clusters[find(s)].push_back(s);

  InfiniteResolution out{model, lists, {}, false};
  for (int s = 1; s <= model.n(); ++s) out.site_map[s] = s;

  for (const auto& [root, members] : clusters) {
    if (members.size() < 2) continue;
    // Earlier contractions have relabeled the sites; map the cluster through.
    SiteSet current;
    for (int s : members) current.push_back(out.site_map.at(s));
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
    if (current.size() < 2) continue;

    // The cluster's infinite couplings always land in the dropped front
    // factor; flag only finite weight dropped along with them.
    for (const auto& [sites, x] : out.model.interactions()) {
      const bool inside = std::all_of(sites.begin(), sites.end(), [&](int s) {
        return std::binary_search(current.begin(), current.end(), s);
      });
      if (inside && !x.is_infinite() && x.is_active()) out.front_factor_discarded = true;
    }
    Contracted c = contract_block(out.model, out.lists, current);
    for (auto& [old_site, new_site] : out.site_map) new_site = c.site_map.at(new_site);
    out.model = std::move(c.model);
    out.lists = std::move(c.lists);
  }
  return out;
}

}  // namespace potts
