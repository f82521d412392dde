#pragma once

#include <span>
#include <vector>

#include "potts/rational.hpp"

namespace potts {

// The centered value set of a q-state spin. Values are kept doubled,
// u_k = 2k - (q+1) for labels k = 1..q, so both parities of q stay integral;
// the centered spin itself is u/2.
class SpinDomain {
 public:
  explicit SpinDomain(int q);

  int q() const noexcept { return q_; }
  const std::vector<int>& doubled_values() const noexcept { return doubled_; }

  // k is an uncentered label in 1..q.
  int doubled(int k) const;
  Rational value(int k) const;

  // Inverse of doubled(); throws if u is not a legal doubled value.
  int label_of(int u) const;
  bool contains(int u) const noexcept;

  friend bool operator==(const SpinDomain&, const SpinDomain&) = default;

 private:
  int q_;
  std::vector<int> doubled_;
};

// Centered value sigma' = k - (q+1)/2.
Rational spin_value(const SpinDomain& domain, int k);

// One spin per site, stored doubled. Sites are 1-based in this interface.
class Configuration {
 public:
  Configuration(int q, std::vector<int> doubled_spins);

  // Builds from uncentered labels in 1..q, e.g. (1,1,3,2).
  static Configuration from_labels(int q, std::span<const int> labels);
  static Configuration from_labels(int q, std::initializer_list<int> labels);

  int q() const noexcept { return q_; }
  int size() const noexcept { return static_cast<int>(doubled_.size()); }
  std::span<const int> doubled_spins() const noexcept { return doubled_; }

  int doubled(int site) const;
  int label(int site) const;
  Rational spin(int site) const;

  std::vector<int> labels() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int q_;
  std::vector<int> doubled_;
};

}  // namespace potts
