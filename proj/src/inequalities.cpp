#include "potts/inequalities.hpp"

#include <algorithm>
#include <stdexcept>

#include "potts/contraction.hpp"

namespace potts {

const char* to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::theorem1: return "theorem1";
    case ReportKind::theorem2: return "theorem2";
    case ReportKind::xi: return "xi";
    case ReportKind::quadratic: return "quadratic";
    case ReportKind::contraction: return "contraction";
  }
  return "?";
}

const Rational& InequalityReport::value(const std::string& name) const {
  for (const auto& v : values)
    if (v.name == name) return v.value;
  throw std::out_of_range("report has no value named '" + name + "'");
}

namespace {

void finish(InequalityReport& report, std::string instance) {
  if (!report.satisfied) report.witness = std::move(instance);
}

struct CorrelationSums {
  Rational z;
  Rational zr;
  Rational zs;
  Rational zrs;
};

CorrelationSums correlation_sums(const ModelSpec& model, const IndexList& r, const IndexList& s,
                                 const EventPredicate& event, const EngineOptions& options) {
  const std::vector<IndexList> lists{r, s, concat(r, s)};
  EventSums sums = event_sums(model, lists, event, options);
  return {std::move(sums.weight_sum), std::move(sums.zetas[0]), std::move(sums.zetas[1]),
          std::move(sums.zetas[2])};
}

Rational q_power(int q, int exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(exponent));
  return Rational(p);
}

}  // namespace

InequalityReport check_theorem1(const ModelSpec& model, const IndexList& r,
                                const EngineOptions& options) {
  InequalityReport report{ReportKind::theorem1, "R=" + r.to_string(), {}, true, std::nullopt};
  const Rational value = expectation(model, r, options);
  report.values.push_back({"expectation", value});
  report.satisfied = value >= 0 && (r.size() % 2 == 0 || value == 0);
  finish(report, model.describe() + " R=" + r.to_string());
  return report;
}

Rational scaled_covariance(const ModelSpec& model, const IndexList& r, const IndexList& s,
                           const EngineOptions& options) {
  const CorrelationSums c = correlation_sums(model, r, s, EventPredicate::everything(), options);
  return c.z * c.zrs - c.zr * c.zs;
}

Rational covariance(const ModelSpec& model, const IndexList& r, const IndexList& s,
                    const EngineOptions& options) {
  const CorrelationSums c = correlation_sums(model, r, s, EventPredicate::everything(), options);
  return (c.z * c.zrs - c.zr * c.zs) / (c.z * c.z);
}

InequalityReport check_theorem2(const ModelSpec& model, const IndexList& r, const IndexList& s,
                                const EngineOptions& options) {
  InequalityReport report{ReportKind::theorem2, "R=" + r.to_string() + " S=" + s.to_string(),
                          {}, true, std::nullopt};
  const CorrelationSums c = correlation_sums(model, r, s, EventPredicate::everything(), options);
  const Rational cov = (c.z * c.zrs - c.zr * c.zs) / (c.z * c.z);
  report.values.push_back({"covariance", cov});

  report.satisfied = cov >= 0;
  const bool r_odd = r.size() % 2 == 1;
  const bool s_odd = s.size() % 2 == 1;
  if (r_odd != s_odd) report.satisfied = report.satisfied && cov == 0;
  if (r_odd && s_odd) {
    const Rational joint = c.zrs / c.z;
    report.values.push_back({"joint_expectation", joint});
    report.satisfied = report.satisfied && cov == joint;
  }
  finish(report, model.describe() + " R=" + r.to_string() + " S=" + s.to_string());
  return report;
}

Rational xi(int q, int a, int b) {
  if (a < 2 || b < 2 || a % 2 != 0 || b % 2 != 0)
    throw std::invalid_argument("xi needs even positive exponents, got a=" + std::to_string(a) +
                                " b=" + std::to_string(b));
  return q * power_sum(q, a + b) - power_sum(q, a) * power_sum(q, b);
}

InequalityReport xi_recursion_check(int q, int a, int b) {
  InequalityReport report{ReportKind::xi,
                          "q=" + std::to_string(q) + " a=" + std::to_string(a) +
                              " b=" + std::to_string(b),
                          {}, true, std::nullopt};
  const Rational lower = xi(q, a, b);
  const Rational upper = xi(q + 2, a, b);

  // Sum over F^c(q) of the gaps to the new outermost value (q+1)/2.
  const Rational top = ratio(q + 1, 2);
  const Rational top_a = power(top, static_cast<unsigned>(a));
  const Rational top_b = power(top, static_cast<unsigned>(b));
  Rational sum = 0;
  bool summands_positive = true;
  const SpinDomain domain(q);
  for (int u : domain.doubled_values()) {
    const Rational j = ratio(u, 2);
    const Rational term = (top_a - power(j, static_cast<unsigned>(a))) *
                          (top_b - power(j, static_cast<unsigned>(b)));
    summands_positive = summands_positive && term > 0;
    sum += term;
  }
  const Rational rhs = 2 * sum;
  const Rational difference = upper - lower;

  report.values = {{"xi_q", lower}, {"xi_q_plus_2", upper}, {"difference", difference},
                   {"recursion_rhs", rhs}};
  report.satisfied = difference == rhs && summands_positive && lower >= 0 && upper >= 0;
  finish(report, report.inputs);
  return report;
}

Rational scaled_covariance_s0_factorized(const ModelSpec& model, const IndexList& r,
                                         const IndexList& s) {
  if (model.s() != 0) throw std::invalid_argument("factorized covariance requires s = 0");
  if (r.has_odd_group() || s.has_odd_group())
    throw std::invalid_argument("factorized covariance requires lists without odd groups");
  r.require_within(model.n());
  s.require_within(model.n());

  const int q = model.q();
  const auto& rc = r.multiplicities();
  const auto& sc = s.multiplicities();
  const int free_exponent =
      (model.n() - static_cast<int>(rc.size())) + (model.n() - static_cast<int>(sc.size()));

  Rational off_shared = 1;
  Rational with_xi = 1;
  Rational products = 1;
  for (auto [site, count] : rc) {
    if (auto it = sc.find(site); it != sc.end()) {
      const Rational pa_pb = power_sum(q, count) * power_sum(q, it->second);
      with_xi *= xi(q, count, it->second) + pa_pb;
      products *= pa_pb;
    } else {
      off_shared *= power_sum(q, count);
    }
  }
  for (auto [site, count] : sc)
    if (!rc.count(site)) off_shared *= power_sum(q, count);

  return q_power(q, free_exponent) * off_shared * (with_xi - products);
}

QuadraticDecomposition quadratic_decomposition(const ModelSpec& base, const SiteSet& block,
                                               const Rational& x, const IndexList& r,
                                               const IndexList& s, const EngineOptions& options) {
  const SiteSet b = make_site_set(block);
  if (base.interactions().contains(b))
    throw ModelError("interaction " + to_string(b) + " already present in the base model");
  if (x < 1) throw ModelError("added coupling " + to_string(x) + " is below 1");
  // with_coupling validates the block against n before any enumeration.
  const ModelSpec augmented_model = base.with_coupling(b, Coupling(x));

  const CorrelationSums all = correlation_sums(base, r, s, EventPredicate::everything(), options);
  const CorrelationSums one = correlation_sums(base, r, s, delta_event(b, true), options);
  const Rational z0 = all.z - one.z;
  const Rational r0 = all.zr - one.zr;
  const Rational s0 = all.zs - one.zs;
  const Rational rs0 = all.zrs - one.zrs;

  QuadraticDecomposition qd;
  qd.U = one.z * one.zrs - one.zr * one.zs;
  qd.V = one.z * rs0 + z0 * one.zrs - r0 * one.zs - one.zr * s0;
  qd.W = z0 * rs0 - r0 * s0;
  qd.x = x;
  qd.Z1 = one.z;
  qd.Z0 = z0;
  qd.augmented = scaled_covariance(augmented_model, r, s, options);
  return qd;
}

InequalityReport check_quadratic(const ModelSpec& base, const SiteSet& block,
                                 const QuadraticDecomposition& qd, const IndexList& r,
                                 const IndexList& s) {
  InequalityReport report{ReportKind::quadratic,
                          "B=" + to_string(block) + " x=" + to_string(qd.x) +
                              " R=" + r.to_string() + " S=" + s.to_string(),
                          {}, true, std::nullopt};
  const Rational two_u_v = 2 * qd.U + qd.V;
  const Rational sum = qd.U + qd.V + qd.W;
  const Rational at_x = qd.evaluate(qd.x);
  report.values = {{"U", qd.U},           {"V", qd.V},        {"W", qd.W},
                   {"2U+V", two_u_v},     {"U+V+W", sum},     {"polynomial_at_x", at_x},
                   {"augmented", qd.augmented}};
  report.satisfied = qd.U >= 0 && two_u_v >= 0 && sum >= 0 && at_x == qd.augmented;
  finish(report, base.describe() + ' ' + report.inputs);
  return report;
}

InequalityReport check_contraction(const ModelSpec& model, const IndexList& r,
                                   const SiteSet& block) {
  InequalityReport report{ReportKind::contraction,
                          "R=" + r.to_string() + " B=" + to_string(block), {}, true,
                          std::nullopt};
  const ContractionCheck check = verify_contraction_identity(model, r, block);
  report.values = {{"lhs", check.lhs}, {"rhs", check.rhs}};
  report.satisfied = check.equal;
  finish(report, model.describe() + ' ' + report.inputs);
  return report;
}

}  // namespace potts
