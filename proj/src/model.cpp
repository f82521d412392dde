#include "potts/model.hpp"

#include <algorithm>

namespace potts {

SiteSet make_site_set(std::vector<int> sites) {
  std::sort(sites.begin(), sites.end());
  if (std::adjacent_find(sites.begin(), sites.end()) != sites.end())
    throw ModelError("site set " + to_string(sites) + " repeats a site");
  return sites;
}

std::string to_string(const SiteSet& sites) {
  std::string out = "{";
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sites[i]);
  }
  return out + "}";
}

const Rational& Coupling::value() const {
  if (infinite_) throw InfiniteCouplingError("coupling is infinite");
  return value_;
}

bool Coupling::is_active() const { return infinite_ || value_ > 1; }

Coupling operator*(const Coupling& a, const Coupling& b) {
  if (a.infinite_ || b.infinite_) return Coupling::infinite();
  return Coupling(Rational(a.value_ * b.value_));
}

std::string to_string(const Coupling& coupling) {
  return coupling.is_infinite() ? "inf" : to_string(coupling.value());
}

void InteractionTable::validate(const SiteSet& sites, const Coupling& x) {
  if (sites.size() < 2)
    throw ModelError("interaction " + to_string(sites) + " needs at least 2 sites");
  if (sites.front() < 1) throw ModelError("interaction " + to_string(sites) + " has a site < 1");
  if (!std::is_sorted(sites.begin(), sites.end()) ||
      std::adjacent_find(sites.begin(), sites.end()) != sites.end())
    throw ModelError("interaction " + to_string(sites) + " is not a sorted set");
  if (!x.is_infinite() && x.value() < 1)
    throw ModelError("coupling " + to_string(x) + " on " + to_string(sites) +
                     " is below 1 (couplings must be ferromagnetic)");
}

void InteractionTable::insert(SiteSet sites, Coupling x) {
  validate(sites, x);
  if (contains(sites)) throw ModelError("duplicate interaction " + to_string(sites));
  table_.emplace(std::move(sites), std::move(x));
}

void InteractionTable::multiply_into(SiteSet sites, const Coupling& x) {
  validate(sites, x);
  auto [it, inserted] = table_.try_emplace(std::move(sites), x);
  if (!inserted) it->second = it->second * x;
}

const Coupling* InteractionTable::find(const SiteSet& sites) const {
  auto it = table_.find(sites);
  return it == table_.end() ? nullptr : &it->second;
}

int InteractionTable::active_count() const {
  return static_cast<int>(
      std::count_if(table_.begin(), table_.end(), [](const auto& kv) { return kv.second.is_active(); }));
}

bool InteractionTable::has_infinite() const {
  return std::any_of(table_.begin(), table_.end(),
                     [](const auto& kv) { return kv.second.is_infinite(); });
}

ModelSpec::ModelSpec(int n, int q, InteractionTable interactions)
    : n_(n), domain_(q), interactions_(std::move(interactions)) {
  if (n < 1) throw ModelError("site count n must be >= 1, got " + std::to_string(n));
  for (const auto& [sites, x] : interactions_)
    if (sites.back() > n)
      throw ModelError("interaction " + to_string(sites) + " refers to a site beyond n=" +
                       std::to_string(n));
}

std::uint64_t ModelSpec::configuration_count() const {
  std::uint64_t total = 1;
  const auto q = static_cast<std::uint64_t>(domain_.q());
  for (int i = 0; i < n_; ++i) {
    if (total > (std::uint64_t{1} << 62) / q)
      throw std::overflow_error("configuration space q^n too large to enumerate");
    total *= q;
  }
  return total;
}

ModelSpec ModelSpec::with_coupling(SiteSet sites, Coupling x) const {
  InteractionTable table = interactions_;
  table.insert(std::move(sites), std::move(x));
  return ModelSpec(n_, q(), std::move(table));
}

void ModelSpec::require_finite() const {
  for (const auto& [sites, x] : interactions_)
    if (x.is_infinite())
      throw InfiniteCouplingError("interaction " + to_string(sites) +
                                  " is infinite; resolve it by contraction first");
}

std::string ModelSpec::describe() const {
  std::string out = "n=" + std::to_string(n_) + " q=" + std::to_string(q()) + " x={";
  bool first = true;
  for (const auto& [sites, x] : interactions_) {
    if (!first) out += ' ';
    first = false;
    out += to_string(sites) + ':' + to_string(x);
  }
  return out + "}";
}

ModelSpec build_model(int n, int q, const std::vector<CouplingInput>& couplings) {
  if (n < 1) throw ModelError("site count n must be >= 1, got " + std::to_string(n));
  if (q < 2) throw ModelError("spin count q must be >= 2, got " + std::to_string(q));
  InteractionTable table;
  for (const auto& c : couplings) {
    SiteSet sites = make_site_set(c.sites);
    for (int s : sites)
      if (s < 1 || s > n)
        throw ModelError("site " + std::to_string(s) + " outside 1.." + std::to_string(n));
    table.insert(std::move(sites), c.x);
  }
  return ModelSpec(n, q, std::move(table));
}

}  // namespace potts
