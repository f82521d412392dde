#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "potts/rational.hpp"
#include "potts/spin.hpp"

namespace potts {

// Thrown for invalid model input: out-of-range sites, undersized interaction
// sets, couplings below 1, duplicate keys.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration is asked to weigh an infinite coupling. Such
// couplings must first go through resolve_infinite_couplings().
class InfiniteCouplingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Sorted, duplicate-free, 1-based site indices.
using SiteSet = std::vector<int>;

SiteSet make_site_set(std::vector<int> sites);
std::string to_string(const SiteSet& sites);

// x_A = exp(J_A) in [1, inf]. The engine never sees J itself.
class Coupling {
 public:
  Coupling() : value_(1) {}
  explicit Coupling(Rational x) : value_(std::move(x)) {}

  static Coupling infinite() {
    Coupling c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const noexcept { return infinite_; }
  // Throws InfiniteCouplingError for the infinite coupling.
  const Rational& value() const;
  // x > 1, or infinite.
  bool is_active() const;

  friend Coupling operator*(const Coupling& a, const Coupling& b);
  friend bool operator==(const Coupling& a, const Coupling& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  Rational value_;
  bool infinite_ = false;
};

std::string to_string(const Coupling& coupling);  // "p/q" or "inf"

class InteractionTable {
 public:
  using Map = std::map<SiteSet, Coupling>;

  // Throws ModelError on |A| < 2, a site < 1, x < 1 or a duplicate key.
  void insert(SiteSet sites, Coupling x);
  // Like insert, but an existing entry is multiplied rather than rejected.
  void multiply_into(SiteSet sites, const Coupling& x);
  void erase(const SiteSet& sites) { table_.erase(sites); }

  bool contains(const SiteSet& sites) const { return table_.count(sites) != 0; }
  const Coupling* find(const SiteSet& sites) const;

  std::size_t size() const noexcept { return table_.size(); }
  bool empty() const noexcept { return table_.empty(); }
  Map::const_iterator begin() const noexcept { return table_.begin(); }
  Map::const_iterator end() const noexcept { return table_.end(); }

  // Number of entries with x > 1 (infinite counts).
  int active_count() const;
  bool has_infinite() const;

  friend bool operator==(const InteractionTable&, const InteractionTable&) = default;

 private:
  static void validate(const SiteSet& sites, const Coupling& x);
  Map table_;
};

class ModelSpec {
 public:
  ModelSpec(int n, int q, InteractionTable interactions);

  int n() const noexcept { return n_; }
  int q() const noexcept { return domain_.q(); }
  const SpinDomain& domain() const noexcept { return domain_; }
  const InteractionTable& interactions() const noexcept { return interactions_; }

  int s() const { return interactions_.active_count(); }
  bool has_infinite() const { return interactions_.has_infinite(); }

  // q^n. Throws std::overflow_error if it does not fit in 63 bits.
  std::uint64_t configuration_count() const;

  // A copy with one more interaction; throws ModelError on a duplicate key.
  ModelSpec with_coupling(SiteSet sites, Coupling x) const;

  // Throws InfiniteCouplingError if any coupling is infinite.
  void require_finite() const;

  // Compact single-line description used in reports and failure witnesses.
  std::string describe() const;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;

 private:
  int n_;
  SpinDomain domain_;
  InteractionTable interactions_;
};

struct CouplingInput {
  std::vector<int> sites;
  Coupling x;
};

// Validates and assembles a model. Sites are 1-based.
ModelSpec build_model(int n, int q, const std::vector<CouplingInput>& couplings);

}  // namespace potts
