// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "potts/cli/random_instance.hpp"
#include "potts/cli/sweep.hpp"
#include "potts/contraction.hpp"
#include "potts/gibbs.hpp"
#include "potts/inequalities.hpp"
#include "potts/symmetry.hpp"
#include "potts/zeta.hpp"

using namespace potts;
using cli::InstanceParams;
using cli::InstanceRng;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

InstanceParams fuzz_params() { return InstanceParams{}; }

InstanceRng rng_for(std::uint64_t criterion, std::uint64_t index) {
  return InstanceRng(cli::derive_seed(20240611, criterion, index));
}

Outcome worked_example() {
  Outcome o;
  const auto start = Clock::now();
  InstanceRng rng = rng_for(1, 0);
  for (int i = 0; i < 10; ++i) {
    const Rational x13 = cli::random_coupling(rng, 10);
    const Rational x23 = cli::random_coupling(rng, 10);
    const Rational x123 = cli::random_coupling(rng, 10);
    const ModelSpec m = build_model(3, 3,
                                    {{{1, 2}, Coupling(Rational(1))},
                                     {{1, 3}, Coupling(x13)},
                                     {{2, 3}, Coupling(x23)},
                                     {{1, 2, 3}, Coupling(x123)}});
    const IndexList r{1, 3};
    const Rational lhs = zeta(m, r, delta_event({1, 2}, true)).value;
    o.require(lhs == 2 * (x13 * x23 * x123 - 1), "closed form differs at " + m.describe());
    const ContractionResult c = contract(m, r, {1, 2});
    o.require(lhs == c.front_factor * zeta(c.contracted_model, c.contracted_list).value,
              "contraction differs at " + m.describe());
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (o.ok) o.detail = "10 triples, " + std::to_string(t) + " s";
  return o;
}

Outcome xi_family() {
  Outcome o;
  const auto start = Clock::now();
  for (int a : {2, 4, 6})
    for (int b : {2, 4, 6}) {
      o.require(xi(2, a, b) == 0, "xi_2 nonzero");
      o.require(xi(3, a, b) == 2, "xi_3 differs from 2");
    }
  int checks = 0;
  for (int q = 2; q <= 12; ++q)
    for (int a : {2, 4, 6, 8})
      for (int b : {2, 4, 6, 8}) {
        o.require(xi(q, a, b) >= 0, "negative xi at q=" + std::to_string(q));
        o.require(xi_recursion_check(q, a, b).satisfied, "recursion fails at q=" + std::to_string(q));
        ++checks;
      }
  const double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (o.ok) o.detail = std::to_string(checks) + " (q,a,b) cases, " + std::to_string(t) + " s";
  return o;
}

Outcome theorem1_suite() {
  Outcome o;
  const auto start = Clock::now();
  int odd = 0;
  for (int i = 0; i < 1000; ++i) {
    InstanceRng rng = rng_for(3, i);
    const ModelSpec m = cli::random_model(rng, fuzz_params());
    const IndexList r = cli::random_list(rng, m.n(), 6);
    const InequalityReport rep = check_theorem1(m, r);
    o.require(rep.satisfied, "instance " + std::to_string(i) + ": " + rep.inputs);
    if (r.size() % 2 == 1) {
      ++odd;
      o.require(rep.value("expectation") == 0, "odd |R| nonzero at " + std::to_string(i));
    }
  }
  const double t = seconds_since(start);
  o.require(t < 300.0, "runtime " + std::to_string(t) + " s");
  if (o.ok)
    o.detail = "1000 instances (" + std::to_string(odd) + " odd |R|), " + std::to_string(t) + " s";
  return o;
}

Outcome theorem2_suite() {
  Outcome o;
  int parity = 0;
  for (int i = 0; i < 1000; ++i) {
    InstanceRng rng = rng_for(4, i);
    const ModelSpec m = cli::random_model(rng, fuzz_params());
    const IndexList r = cli::random_list(rng, m.n(), 6);
    const IndexList s = cli::random_list(rng, m.n(), 6);
    const InequalityReport rep = check_theorem2(m, r, s);
    o.require(rep.satisfied, "instance " + std::to_string(i) + ": " + rep.inputs);
    if ((r.size() + s.size()) % 2 == 1) {
      ++parity;
      o.require(rep.value("covariance") == 0, "parity case nonzero at " + std::to_string(i));
    }
  }
  if (o.ok) o.detail = "1000 instances (" + std::to_string(parity) + " parity cases)";
  return o;
}

// |E(M) - E(inf)| for M = 10, 100, 10^4 must not increase, and must
// strictly decrease unless it is already zero.
bool monotone_gap(const ModelSpec& base, const SiteSet& block, const IndexList& r) {
  const InfiniteResolution res =
      resolve_infinite_couplings(base.with_coupling(block, Coupling::infinite()), {r});
  const Rational limit = expectation(res.model, res.lists.front());
  Rational previous = -1;
  for (long m : {10L, 100L, 10000L}) {
    const Rational gap = abs(expectation(base.with_coupling(block, Coupling(Rational(m))), r) - limit);
    if (previous >= 0 && (gap > previous || (previous != 0 && gap == previous))) return false;
    previous = gap;
  }
  return true;
}

Outcome contraction_suite() {
  Outcome o;
  for (int i = 0; i < 300; ++i) {
    InstanceRng rng = rng_for(5, i);
    const ModelSpec m = cli::random_model(rng, fuzz_params());
    const IndexList r = cli::random_list(rng, m.n(), 6);
    const SiteSet b = cli::random_subset(rng, m.n(), 2, m.n());
    o.require(verify_contraction_identity(m, r, b).equal,
              "instance " + std::to_string(i) + ": " + m.describe());
  }
  const ModelSpec example = build_model(3, 3, {{{1, 3}, Coupling(Rational(5))}});
  o.require(monotone_gap(example, {1, 2}, IndexList{2, 3}), "example gap not monotone");
  int gaps = 1;
  for (int i = 0; i < 50; ++i) {
    InstanceRng rng = rng_for(50, i);
    const ModelSpec m = cli::random_model(rng, fuzz_params());
    const SiteSet b = cli::random_subset(rng, m.n(), 2, m.n());
    if (m.interactions().contains(b)) continue;
    const IndexList r = cli::random_list(rng, m.n(), 6);
    o.require(monotone_gap(m, b, r), "gap not monotone at " + m.describe());
    ++gaps;
  }
  if (o.ok) o.detail = "300 identities, " + std::to_string(gaps) + " infinite-limit gaps";
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (int i = 0; i < 200; ++i) {
    InstanceRng rng = rng_for(6, i);
    int n = 0;
    int q = 0;
    do {
      n = rng.uniform(1, 6);
      q = rng.uniform(2, 5);
    } while (ConfigurationSpace(n, q).size() > 4096);
    const ModelSpec m = build_model(n, q, {});
    const IndexList r = cli::random_even_group_list(rng, n, 8);
    o.require(zeta_closed_form_s0(m, r) == zeta(m, r).value, "list " + r.to_string() + " at " + m.describe());
  }
  int disjoint = 0;
  for (int i = 0; i < 100; ++i) {
    InstanceRng rng = rng_for(60, i);
    const int n = rng.uniform(2, 6);
    const int q = rng.uniform(2, 4);
    if (ConfigurationSpace(n, q).size() > 4096) continue;
    const int split = rng.uniform(1, n - 1);
    std::vector<int> re, se;
    for (int k = rng.uniform(1, 3); k > 0; --k) {
      const int site = rng.uniform(1, split);
      re.insert(re.end(), {site, site});
    }
    for (int k = rng.uniform(1, 3); k > 0; --k) {
      const int site = rng.uniform(split + 1, n);
      se.insert(se.end(), {site, site});
    }
    const ModelSpec m = build_model(n, q, {});
    o.require(covariance(m, IndexList(re), IndexList(se)) == 0, "disjoint covariance nonzero");
    ++disjoint;
  }
  if (o.ok) o.detail = "200 lists, " + std::to_string(disjoint) + " disjoint pairs";
  return o;
}

Outcome quadratic_suite() {
  Outcome o;
  for (int i = 0; i < 300; ++i) {
    InstanceRng rng = rng_for(7, i);
    const ModelSpec drawn = cli::random_model(rng, fuzz_params());
    const SiteSet b = cli::random_subset(rng, drawn.n(), 2, drawn.n());
    InteractionTable table = drawn.interactions();
    table.erase(b);
    const ModelSpec base(drawn.n(), drawn.q(), std::move(table));
    const IndexList r = cli::random_list(rng, base.n(), 6);
    const IndexList s = cli::random_list(rng, base.n(), 6);
    for (int k = 0; k < 3; ++k) {
      const Rational x = cli::random_coupling(rng, 10);
      const QuadraticDecomposition qd = quadratic_decomposition(base, b, x, r, s);
      o.require(check_quadratic(base, b, qd, r, s).satisfied,
                "instance " + std::to_string(i) + ": " + base.describe());
    }
  }
  if (o.ok) o.detail = "300 instances x 3 couplings";
  return o;
}

EventPredicate random_event(InstanceRng& rng, int n) {
  EventPredicate e;
  const int kind = rng.uniform(0, 3);
  if (kind & 1) {
    const Sign signs[] = {Sign::positive, Sign::negative, Sign::zero};
    e.require_sign(cli::random_list(rng, n, 4), signs[rng.uniform(0, 2)]);
  }
  if (kind & 2) e.require_delta(cli::random_subset(rng, n, 2, std::min(n, 4)), rng.uniform(0, 1) == 1);
  return e;
}

Outcome engine_equivalence() {
  Outcome o;
  for (int i = 0; i < 100; ++i) {
    InstanceRng rng = rng_for(8, i);
    const ModelSpec m = cli::random_model(rng, fuzz_params());
    const std::vector<IndexList> lists{cli::random_list(rng, m.n(), 6)};
    const EventPredicate e = random_event(rng, m.n());
    const EventSums fast = event_sums(m, lists, e);
    const EventSums slow = event_sums(m, lists, e, {EnumerationPath::naive, 1, 0});
    o.require(fast.zetas == slow.zetas && fast.weight_sum == slow.weight_sum,
              "paths differ at " + m.describe());
    const std::string reference = to_string(fast.zetas[0]) + " " + to_string(fast.weight_sum);
    for (unsigned w : {2u, 8u}) {
      const EventSums par = event_sums(m, lists, e, {EnumerationPath::incremental, w, 0});
      o.require(to_string(par.zetas[0]) + " " + to_string(par.weight_sum) == reference,
                "worker count changes result at " + m.describe());
    }
  }
  std::string outputs[3];
  int k = 0;
  for (unsigned w : {1u, 2u, 8u}) {
    cli::RunConfig c;
    c.seed = 8;
    c.trials = 40;
    c.workers = w;
    std::ostringstream out;
    cli::run_sweep(c, out);
    outputs[k++] = out.str();
  }
  o.require(outputs[0] == outputs[1] && outputs[1] == outputs[2], "sweep report differs by workers");
  if (o.ok) o.detail = "100 triples; sweep output identical for 1, 2, 8 workers";
  return o;
}

Outcome symmetry_suite() {
  Outcome o;
  int models = 0;
  for (int i = 0; i < 100; ++i) {
    InstanceRng rng = rng_for(9, i);
    const ModelSpec m = cli::random_model(rng, fuzz_params());
    std::vector<SpinPermutation> perms{SpinPermutation::identity(m.q()), SpinPermutation::reversal(m.q())};
    for (int k = 0; k < 3; ++k) perms.push_back(SpinPermutation::random(m.q(), rng.engine()));
    const ConfigurationSpace space(m.n(), m.q());
    const Rational z = partition_function(m);
    for (std::uint64_t rank = 0; rank < space.size(); ++rank) {
      const Configuration c = space.at(rank);
      const Rational p = config_weight(c, m) / z;
      for (const auto& pi : perms)
        if (config_weight(apply_permutation(c, pi), m) / z != p) {
          o.require(false, "T_pi changes P at " + m.describe());
          break;
        }
    }
    // Spot check the library's own probability against the table.
    const Configuration first = space.at(0);
    o.require(gibbs_probability(first, m) == config_weight(first, m) / z, "gibbs_probability mismatch");
    for (int site = 1; site <= m.n(); ++site)
      for (const Rational& p : marginal_distribution(m, site))
        o.require(p == Rational(1, m.q()), "non-uniform marginal at " + m.describe());
    ++models;
  }
  if (o.ok) o.detail = std::to_string(models) + " models x 5 permutations, all marginals uniform";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 worked example", worked_example},
      {"AC2 xi family", xi_family},
      {"AC3 theorem 1 fuzz", theorem1_suite},
      {"AC4 theorem 2 fuzz", theorem2_suite},
      {"AC5 contraction identity", contraction_suite},
      {"AC6 s=0 closed forms", closed_forms},
      {"AC7 quadratic decomposition", quadratic_suite},
      {"AC8 engine equivalence", engine_equivalence},
      {"AC9 symmetry", symmetry_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
