#include "potts/cli/random_instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace potts::cli {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<SiteSet> subsets_by_size(int n, int min_size, int max_size) {
  std::vector<SiteSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < min_size || size > max_size) continue;
    SiteSet sites;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sites.push_back(i + 1);
    out.push_back(std::move(sites));
  }
  // Order by size then lexicographically so draws do not depend on bit layout.
  std::sort(out.begin(), out.end(), [](const SiteSet& a, const SiteSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::uint64_t config_count(int n, int q) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(q)) return UINT64_MAX;
    total *= static_cast<std::uint64_t>(q);
  }
  return total;
}

}  // namespace

int InstanceRng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range in InstanceRng::uniform");
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do draw = engine_();
  while (draw >= limit);
  return lo + static_cast<int>(draw % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

Rational random_coupling(InstanceRng& rng, int x_max) {
  if (x_max < 1) throw std::invalid_argument("x_max must be >= 1");
  const int d = rng.uniform(1, 16);
  const int p = rng.uniform(0, (x_max - 1) * d);
  Rational x(p, d);
  x.canonicalize();
  return x + 1;
}

SiteSet random_subset(InstanceRng& rng, int n, int min_size, int max_size) {
  const auto all = subsets_by_size(n, min_size, std::min(max_size, n));
  if (all.empty()) throw std::invalid_argument("no subsets of the requested size");
  return all[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))];
}

ModelSpec random_model(InstanceRng& rng, const InstanceParams& params) {
  if (params.n_max < 2 || params.q_set.empty())
    throw std::invalid_argument("instance parameters need n_max >= 2 and a non-empty q set");
  for (int q : params.q_set)
    if (q < 2) throw std::invalid_argument("q values must be >= 2");
  const bool feasible = std::any_of(params.q_set.begin(), params.q_set.end(), [&](int q) {
    return config_count(2, q) <= params.max_configs;
  });
  if (!feasible) throw std::invalid_argument("no (n, q) in range fits within max_configs");

  int n = 0;
  int q = 0;
  do {
    n = rng.uniform(2, params.n_max);
    q = params.q_set[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(params.q_set.size()) - 1))];
  } while (config_count(n, q) > params.max_configs);

  auto candidates = subsets_by_size(n, 2, std::min(params.max_subset, n));
  const int count = rng.uniform(0, std::min<int>(params.max_interactions, static_cast<int>(candidates.size())));
  InteractionTable table;
  for (int i = 0; i < count; ++i) {
    const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(candidates.size()) - 1));
    table.insert(candidates[pick], Coupling(random_coupling(rng, params.x_max)));
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return ModelSpec(n, q, std::move(table));
}

IndexList random_list(InstanceRng& rng, int n, int max_len) {
  const int len = rng.uniform(0, max_len);
  std::vector<int> sites;
  for (int i = 0; i < len; ++i) sites.push_back(rng.uniform(1, n));
  return IndexList(std::move(sites));
}

IndexList random_even_length_list(InstanceRng& rng, int n, int max_len) {
  const int len = 2 * rng.uniform(0, max_len / 2);
  std::vector<int> sites;
  for (int i = 0; i < len; ++i) sites.push_back(rng.uniform(1, n));
  return IndexList(std::move(sites));
}

IndexList random_even_group_list(InstanceRng& rng, int n, int max_len) {
  const int pairs = rng.uniform(0, max_len / 2);
  std::vector<int> sites;
  for (int i = 0; i < pairs; ++i) {
    const int s = rng.uniform(1, n);
    sites.push_back(s);
    sites.push_back(s);
  }
  // Interleave deterministically so repeated sites are not always adjacent.
  for (std::size_t i = sites.size(); i > 1; --i)
    std::swap(sites[i - 1], sites[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
  return IndexList(std::move(sites));
}

}  // namespace potts::cli
