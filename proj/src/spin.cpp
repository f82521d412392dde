#include "potts/spin.hpp"

#include <stdexcept>
#include <string>

namespace potts {

SpinDomain::SpinDomain(int q) : q_(q) {
  if (q < 2) throw std::invalid_argument("spin count q must be >= 2, got " + std::to_string(q));
  doubled_.reserve(q);
  for (int k = 1; k <= q; ++k) doubled_.push_back(2 * k - (q + 1));
}

int SpinDomain::doubled(int k) const {
  if (k < 1 || k > q_)
    throw std::out_of_range("spin label " + std::to_string(k) + " outside 1.." + std::to_string(q_));
  return doubled_[k - 1];
}

Rational SpinDomain::value(int k) const { return ratio(doubled(k), 2); }

bool SpinDomain::contains(int u) const noexcept {
  return u >= -(q_ - 1) && u <= q_ - 1 && ((u + q_ + 1) % 2 == 0);
}

int SpinDomain::label_of(int u) const {
  if (!contains(u))
    throw std::out_of_range("doubled spin " + std::to_string(u) + " is not legal for q=" +
                            std::to_string(q_));
  return (u + q_ + 1) / 2;
}

Rational spin_value(const SpinDomain& domain, int k) { return domain.value(k); }

Configuration::Configuration(int q, std::vector<int> doubled_spins)
    : q_(q), doubled_(std::move(doubled_spins)) {
  SpinDomain domain(q);
  for (int u : doubled_)
    if (!domain.contains(u))
      throw std::invalid_argument("doubled spin " + std::to_string(u) + " is not legal for q=" +
                                  std::to_string(q));
}

Configuration Configuration::from_labels(int q, std::span<const int> labels) {
  SpinDomain domain(q);
  std::vector<int> doubled;
  doubled.reserve(labels.size());
  for (int k : labels) doubled.push_back(domain.doubled(k));
  return Configuration(q, std::move(doubled));
}

Configuration Configuration::from_labels(int q, std::initializer_list<int> labels) {
  return from_labels(q, std::span<const int>(labels.begin(), labels.size()));
}

int Configuration::doubled(int site) const {
  if (site < 1 || site > size())
    throw std::out_of_range("site " + std::to_string(site) + " outside 1.." +
                            std::to_string(size()));
  return doubled_[site - 1];
}

int Configuration::label(int site) const { return (doubled(site) + q_ + 1) / 2; }

Rational Configuration::spin(int site) const { return ratio(doubled(site), 2); }

std::vector<int> Configuration::labels() const {
  std::vector<int> out;
  out.reserve(doubled_.size());
  for (int u : doubled_) out.push_back((u + q_ + 1) / 2);
  return out;
}

}  // namespace potts
