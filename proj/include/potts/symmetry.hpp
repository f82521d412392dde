#pragma once

#include <random>
#include <vector>

#include "potts/index_list.hpp"
#include "potts/model.hpp"
#include "potts/spin.hpp"

namespace potts {

// A bijection on the labels 1..q. Since interaction deltas see only spin
// equality, relabeling every site by the same permutation preserves Z_gamma.
class SpinPermutation {
 public:
  // image[k-1] = pi(k). Throws std::invalid_argument unless a bijection on 1..q.
  explicit SpinPermutation(std::vector<int> image);

  static SpinPermutation identity(int q);
  // k -> q+1-k: negates every centered spin.
  static SpinPermutation reversal(int q);
  static SpinPermutation random(int q, std::mt19937_64& rng);

  int q() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int label) const;
  const std::vector<int>& image() const noexcept { return image_; }

  SpinPermutation inverse() const;
  // (a * b)(k) = a(b(k))
  friend SpinPermutation operator*(const SpinPermutation& a, const SpinPermutation& b);
  friend bool operator==(const SpinPermutation&, const SpinPermutation&) = default;

 private:
  std::vector<int> image_;
};

// T_pi: entrywise relabeling.
Configuration apply_permutation(const Configuration& config, const SpinPermutation& pi);

// P(sigma_site = j) for j = 1..q.
std::vector<Rational> marginal_distribution(const ModelSpec& model, int site);

struct GroupDecomposition {
  std::vector<int> odd_sites;   // theta groups
  std::vector<int> even_sites;  // epsilon groups
};

GroupDecomposition decompose_list(const IndexList& list);

}  // namespace potts
