#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "potts/index_list.hpp"
#include "potts/model.hpp"

namespace potts::cli {

// Ranges for randomly generated verification instances.
struct InstanceParams {
  int n_max = 6;
  std::vector<int> q_set{2, 3, 4, 5};
  int x_max = 10;
  int max_interactions = 6;
  int max_list_len = 6;
  std::uint64_t max_configs = 4096;
  int max_subset = 4;
};

// mt19937_64 plus bounded draws by rejection, so a seed produces the same
// instances on every platform.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [lo, hi].
  int uniform(int lo, int hi);
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Independent per-(stream, index) seed derived with splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// x = 1 + p/d with d uniform in 1..16 and p uniform in 0..(x_max-1)*d.
Rational random_coupling(InstanceRng& rng, int x_max);

// Uniform among all subsets of 1..n with size in [min_size, max_size].
SiteSet random_subset(InstanceRng& rng, int n, int min_size, int max_size);

// n in 2..n_max, q from q_set (resampled until q^n <= max_configs), then up
// to max_interactions distinct subsets of size 2..min(max_subset, n).
ModelSpec random_model(InstanceRng& rng, const InstanceParams& params);

// Length uniform in 0..max_len, entries drawn with replacement.
IndexList random_list(InstanceRng& rng, int n, int max_len);
// Even length in 0..max_len.
IndexList random_even_length_list(InstanceRng& rng, int n, int max_len);
// Every site appears an even number of times; length <= max_len.
IndexList random_even_group_list(InstanceRng& rng, int n, int max_len);

}  // namespace potts::cli
