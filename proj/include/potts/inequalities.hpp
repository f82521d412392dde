#pragma once

#include <optional>
#include <string>
#include <vector>

#include "potts/index_list.hpp"
#include "potts/model.hpp"
#include "potts/zeta.hpp"

namespace potts {

enum class ReportKind { theorem1, theorem2, xi, quadratic, contraction };

const char* to_string(ReportKind kind);

struct NamedValue {
  std::string name;
  Rational value;
};

// Outcome of one exact check. All comparisons are against zero or between
// rationals; there is no tolerance. A failure carries the instance that
// produced it.
struct InequalityReport {
  ReportKind kind;
  std::string inputs;
  std::vector<NamedValue> values;
  bool satisfied = true;
  std::optional<std::string> witness;

  const Rational& value(const std::string& name) const;
};

// <sigma^R> >= 0, and = 0 when |R| is odd.
InequalityReport check_theorem1(const ModelSpec& model, const IndexList& r,
                                const EngineOptions& options = {});

// Z * zeta(RS) - zeta(R) * zeta(S), the quantity the inequality is proved on.
Rational scaled_covariance(const ModelSpec& model, const IndexList& r, const IndexList& s,
                           const EngineOptions& options = {});

// <sigma^R sigma^S> - <sigma^R><sigma^S>.
Rational covariance(const ModelSpec& model, const IndexList& r, const IndexList& s,
                    const EngineOptions& options = {});

InequalityReport check_theorem2(const ModelSpec& model, const IndexList& r, const IndexList& s,
                                const EngineOptions& options = {});

// xi_q(a, b) = q * P(a+b) - P(a) * P(b) with P(m) = power_sum(q, m).
// a and b must be even and positive.
Rational xi(int q, int a, int b);

// xi_{q+2} - xi_q = 2 sum_j (((q+1)/2)^a - j^a)(((q+1)/2)^b - j^b), every
// summand strictly positive, and both xi values non-negative.
InequalityReport xi_recursion_check(int q, int a, int b);

// Scaled covariance at s = 0 for lists without odd groups, assembled from
// power sums and the per-site xi factors on the shared support:
//   q^{|N-R'|+|N-S'|} * prod_{R' xor S'} P * [prod_{R' & S'} (xi_i + P_a P_b) - prod P_a P_b]
Rational scaled_covariance_s0_factorized(const ModelSpec& model, const IndexList& r,
                                         const IndexList& s);

// Z * zeta(RS) - zeta(R) * zeta(S) of base + {B: x}, written as U x^2 + V x + W
// with every coefficient computed on the base model split over B^(1)/B^(0).
struct QuadraticDecomposition {
  Rational U;
  Rational V;
  Rational W;
  Rational x;
  Rational Z1;
  Rational Z0;
  // Scaled covariance of the augmented model, enumerated directly.
  Rational augmented;

  Rational evaluate(const Rational& at) const { return U * at * at + V * at + W; }
  bool identity_holds() const { return evaluate(x) == augmented; }
};

QuadraticDecomposition quadratic_decomposition(const ModelSpec& base, const SiteSet& block,
                                               const Rational& x, const IndexList& r,
                                               const IndexList& s,
                                               const EngineOptions& options = {});

// U >= 0, 2U + V >= 0, U + V + W >= 0 and the polynomial identity at x.
InequalityReport check_quadratic(const ModelSpec& base, const SiteSet& block,
                                 const QuadraticDecomposition& qd, const IndexList& r,
                                 const IndexList& s);

InequalityReport check_contraction(const ModelSpec& model, const IndexList& r,
                                   const SiteSet& block);

}  // namespace potts
