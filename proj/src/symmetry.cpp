#include "potts/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "potts/gibbs.hpp"

namespace potts {

SpinPermutation::SpinPermutation(std::vector<int> image) : image_(std::move(image)) {
  const int q = static_cast<int>(image_.size());
  std::vector<bool> seen(q + 1, false);
  for (int v : image_) {
    if (v < 1 || v > q || seen[v]) throw std::invalid_argument("not a permutation of 1..q");
    seen[v] = true;
  }
}

SpinPermutation SpinPermutation::identity(int q) {
  std::vector<int> image(q);
  std::iota(image.begin(), image.end(), 1);
  return SpinPermutation(std::move(image));
}

SpinPermutation SpinPermutation::reversal(int q) {
  std::vector<int> image(q);
  for (int k = 1; k <= q; ++k) image[k - 1] = q + 1 - k;
  return SpinPermutation(std::move(image));
}

SpinPermutation SpinPermutation::random(int q, std::mt19937_64& rng) {
  std::vector<int> image(q);
  std::iota(image.begin(), image.end(), 1);
  // Fisher-Yates with an explicit bounded draw so results do not depend on the
  // standard library's distribution implementation.
  for (int i = q - 1; i > 0; --i) {
    const auto bound = static_cast<std::uint64_t>(i + 1);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do draw = rng();
    while (draw >= limit);
    std::swap(image[i], image[static_cast<int>(draw % bound)]);
  }
  return SpinPermutation(std::move(image));
}

int SpinPermutation::operator()(int label) const {
  if (label < 1 || label > q()) throw std::out_of_range("label outside 1..q");
  return image_[label - 1];
}

SpinPermutation SpinPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int k = 1; k <= q(); ++k) inv[image_[k - 1] - 1] = k;
  return SpinPermutation(std::move(inv));
}

SpinPermutation operator*(const SpinPermutation& a, const SpinPermutation& b) {
  if (a.q() != b.q()) throw std::invalid_argument("composing permutations of different q");
  std::vector<int> image(a.image_.size());
  for (int k = 1; k <= a.q(); ++k) image[k - 1] = a(b(k));
  return SpinPermutation(std::move(image));
}

Configuration apply_permutation(const Configuration& config, const SpinPermutation& pi) {
  if (pi.q() != config.q()) throw std::invalid_argument("permutation q does not match configuration");
  std::vector<int> labels = config.labels();
  for (int& k : labels) k = pi(k);
  return Configuration::from_labels(config.q(), labels);
}

std::vector<Rational> marginal_distribution(const ModelSpec& model, int site) {
  model.require_finite();
  if (site < 1 || site > model.n()) throw std::out_of_range("site outside 1..n");
  ConfigurationSpace space(model);
  std::vector<Rational> mass(model.q(), Rational(0));
  Rational z = 0;
  for (std::uint64_t rank = 0; rank < space.size(); ++rank) {
    const Configuration config = space.at(rank);
    const Rational w = config_weight(config, model);
    mass[config.label(site) - 1] += w;
    z += w;
  }
  for (auto& m : mass) m /= z;
  return mass;
}

GroupDecomposition decompose_list(const IndexList& list) {
  return {list.odd_sites(), list.even_sites()};
}

}  // namespace potts
