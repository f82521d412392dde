#include "potts/gibbs.hpp"

#include <stdexcept>

namespace potts {

ConfigurationSpace::ConfigurationSpace(int n, int q) : n_(n), q_(q), size_(1) {
  if (n < 1 || q < 2) throw std::invalid_argument("configuration space needs n >= 1, q >= 2");
  for (int i = 0; i < n; ++i) {
    if (size_ > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(q))
      throw std::overflow_error("configuration space q^n too large to enumerate");
    size_ *= static_cast<std::uint64_t>(q);
  }
}

Configuration ConfigurationSpace::at(std::uint64_t rank) const {
  if (rank >= size_) throw std::out_of_range("configuration rank out of range");
  std::vector<int> doubled(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    const int digit = static_cast<int>(rank % static_cast<std::uint64_t>(q_));
    rank /= static_cast<std::uint64_t>(q_);
    doubled[i] = 2 * digit + 1 - q_;
  }
  return Configuration(q_, std::move(doubled));
}

std::uint64_t ConfigurationSpace::rank_of(const Configuration& config) const {
  if (config.size() != n_ || config.q() != q_)
    throw std::invalid_argument("configuration does not belong to this space");
  std::uint64_t rank = 0;
  for (int site = 1; site <= n_; ++site)
    rank = rank * static_cast<std::uint64_t>(q_) + static_cast<std::uint64_t>(config.label(site) - 1);
  return rank;
}

bool generalized_delta(const Configuration& config, const SiteSet& sites) {
  if (sites.empty()) return true;
  const int first = config.doubled(sites.front());
  for (int site : sites)
    if (config.doubled(site) != first) return false;
  return true;
}

Rational config_weight(const Configuration& config, const ModelSpec& model) {
  model.require_finite();
  if (config.size() != model.n() || config.q() != model.q())
    throw std::invalid_argument("configuration shape does not match the model");
  Rational weight = 1;
  for (const auto& [sites, x] : model.interactions())
    if (generalized_delta(config, sites)) weight *= x.value();
  return weight;
}

Rational partition_function(const ModelSpec& model) {
  model.require_finite();
  ConfigurationSpace space(model);
  Rational z = 0;
  for (std::uint64_t rank = 0; rank < space.size(); ++rank) z += config_weight(space.at(rank), model);
  return z;
}

Rational gibbs_probability(const Configuration& config, const ModelSpec& model) {
  return config_weight(config, model) / partition_function(model);
}

Rational thermal_average(const std::function<Rational(const Configuration&)>& f,
                         const ModelSpec& model) {
  model.require_finite();
  ConfigurationSpace space(model);
  Rational z = 0;
  Rational weighted = 0;
  for (std::uint64_t rank = 0; rank < space.size(); ++rank) {
    const Configuration config = space.at(rank);
    const Rational w = config_weight(config, model);
    z += w;
    weighted += f(config) * w;
  }
  return weighted / z;
}

}  // namespace potts
