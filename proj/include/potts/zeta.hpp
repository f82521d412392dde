#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "potts/index_list.hpp"
#include "potts/model.hpp"
#include "potts/spin.hpp"

namespace potts {

enum class Sign { positive, negative, zero };

const char* to_string(Sign sign);

// sigma^R: product of centered spins with multiplicity; sigma^[] = 1.
Rational sigma_R(const Configuration& config, const IndexList& list);

Sign classify(const Configuration& config, const IndexList& list);

struct DeltaConstraint {
  SiteSet sites;
  bool equal;  // required value of the generalized delta
};

// A conjunction of an optional sign condition on sigma^L and any number of
// delta conditions. The default-constructed predicate is all of Omega.
// Unions are formed by summing over disjoint predicates.
class EventPredicate {
 public:
  struct SignConstraint {
    IndexList list;
    Sign sign;
  };

  static EventPredicate everything() { return {}; }

  EventPredicate& require_sign(IndexList list, Sign sign);
  EventPredicate& require_delta(SiteSet sites, bool equal);

  const std::optional<SignConstraint>& sign_constraint() const noexcept { return sign_; }
  const std::vector<DeltaConstraint>& delta_constraints() const noexcept { return deltas_; }

  // Straight evaluation against one configuration.
  bool matches(const Configuration& config) const;

 private:
  std::optional<SignConstraint> sign_;
  std::vector<DeltaConstraint> deltas_;
};

// B^(1) (all spins on B equal) and B^(0).
EventPredicate delta_event(SiteSet sites, bool equal);

enum class EnumerationPath {
  incremental,  // odometer with per-site interaction updates
  naive,        // recompute every delta and weight per configuration
};

struct EngineOptions {
  EnumerationPath path = EnumerationPath::incremental;
  unsigned workers = 1;
  // Number of contiguous rank ranges; 0 means one per worker.
  unsigned chunks = 0;
};

struct ZetaResult {
  Rational value;
  std::uint64_t configs_visited = 0;
  std::uint64_t configs_matching = 0;
};

// One enumeration pass accumulating, over the configurations of the event,
// the weight sum and zeta(L, event) for every supplied list.
struct EventSums {
  Rational weight_sum;
  std::vector<Rational> zetas;
  std::uint64_t configs_visited = 0;
  std::uint64_t configs_matching = 0;
};

EventSums event_sums(const ModelSpec& model, std::span<const IndexList> lists,
                     const EventPredicate& event, const EngineOptions& options = {});

// zeta(R, A) = sum over gamma in A of sigma^R(gamma) Z_gamma.
ZetaResult zeta(const ModelSpec& model, const IndexList& list,
                const EventPredicate& event = EventPredicate::everything(),
                const EngineOptions& options = {});

// <sigma^R> = zeta(R, Omega) / Z.
Rational expectation(const ModelSpec& model, const IndexList& list,
                     const EngineOptions& options = {});

// sum over j in F^c of j^m, exact.
Rational power_sum(int q, int m);

// zeta(R, Omega) at s = 0 without enumeration:
// q^{n - |R'|} * prod_{i in R'} power_sum(q, mult_i), or 0 if R has an odd group.
// Throws std::invalid_argument if the model has an active coupling.
Rational zeta_closed_form_s0(const ModelSpec& model, const IndexList& list);

}  // namespace potts
