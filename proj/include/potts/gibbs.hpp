#pragma once

#include <cstdint>
#include <functional>

#include "potts/model.hpp"
#include "potts/spin.hpp"

namespace potts {

// Mixed-radix indexing of all q^n configurations. Site n is the fastest
// digit, so rank 1 differs from rank 0 only at site n.
class ConfigurationSpace {
 public:
  ConfigurationSpace(int n, int q);
  explicit ConfigurationSpace(const ModelSpec& model) : ConfigurationSpace(model.n(), model.q()) {}

  std::uint64_t size() const noexcept { return size_; }
  int n() const noexcept { return n_; }
  int q() const noexcept { return q_; }

  Configuration at(std::uint64_t rank) const;
  std::uint64_t rank_of(const Configuration& config) const;

 private:
  int n_;
  int q_;
  std::uint64_t size_;
};

// Generalized Kronecker delta: true iff every site of A carries the same spin.
bool generalized_delta(const Configuration& config, const SiteSet& sites);

// Z_gamma: the product of x_A over interactions whose delta is satisfied.
Rational config_weight(const Configuration& config, const ModelSpec& model);

Rational partition_function(const ModelSpec& model);

Rational gibbs_probability(const Configuration& config, const ModelSpec& model);

// <f> = sum_gamma f(gamma) Z_gamma / Z, evaluated in one pass.
Rational thermal_average(const std::function<Rational(const Configuration&)>& f,
                         const ModelSpec& model);

}  // namespace potts
