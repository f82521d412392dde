#include <doctest.h>

#include "oracle.hpp"
#include "potts/cli/random_instance.hpp"
#include "potts/contraction.hpp"
#include "potts/symmetry.hpp"
#include "potts/zeta.hpp"

using namespace potts;

namespace {

ModelSpec example_model(const Rational& x12) {
  return build_model(3, 3,
                     {{{1, 2}, Coupling(x12)},
                      {{1, 3}, Coupling(Rational(2))},
                      {{2, 3}, Coupling(Rational(3))},
                      {{1, 2, 3}, Coupling(Rational(5))}});
}

const ModelSpec& infinite_example() {
  static const ModelSpec m =
      build_model(3, 3, {{{1, 2}, Coupling::infinite()}, {{1, 3}, Coupling(Rational(5))}});
  return m;
}

}  // namespace

TEST_CASE("contracting the three-site example") {
  const ContractionResult c = contract(example_model(Rational(7)), IndexList{1, 3}, {1, 2});
  CHECK(c.contracted_model.n() == 2);
  CHECK(c.contracted_model.interactions().size() == 1);
  CHECK(c.contracted_model.interactions().find({1, 2})->value() == 30);
  CHECK(c.front_factor == 7);
  CHECK(c.contracted_list == IndexList{1, 2});
  CHECK(c.site_map == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}});
  CHECK(verify_contraction_identity(example_model(Rational(7)), IndexList{1, 3}, {1, 2}).equal);
  CHECK(verify_contraction_identity(example_model(Rational(1)), IndexList{1, 3}, {1, 2}).lhs == 58);
}

TEST_CASE("couplings disjoint from the block are copied") {
  const ModelSpec m = build_model(4, 2,
                                  {{{3, 4}, Coupling(Rational(3))},
                                   {{1, 2}, Coupling(Rational(2))}});
  const ContractionResult c = contract(m, IndexList{1, 2, 3, 4}, {2, 3});
  CHECK(c.contracted_model.n() == 3);
  CHECK(c.contracted_list == IndexList{1, 2, 2, 3});
  CHECK(c.contracted_model.interactions().find({2, 3})->value() == 3);
  CHECK(c.contracted_model.interactions().find({1, 2})->value() == 2);
  CHECK(c.front_factor == 1);

  const ContractionResult d = contract(m, IndexList{}, {1, 2});
  CHECK(d.contracted_model.interactions().find({2, 3})->value() == 3);
  CHECK(d.front_factor == 2);
}

TEST_CASE("contraction errors") {
  const ModelSpec m = example_model(Rational(2));
  CHECK_THROWS_AS(contract(m, IndexList{1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(contract(m, IndexList{1}, {2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(contract(m, IndexList{1}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(contract(m, IndexList{4}, {1, 2}), std::out_of_range);
  CHECK_THROWS_AS(contract(infinite_example(), IndexList{1}, {1, 2}), InfiniteCouplingError);
}

TEST_CASE("contraction identity on random instances") {
  cli::InstanceRng rng(211);
  cli::InstanceParams params;
  params.n_max = 6;
  params.q_set = {2, 3, 4};
  for (int trial = 0; trial < 120; ++trial) {
    const ModelSpec m = cli::random_model(rng, params);
    const IndexList r = cli::random_list(rng, m.n(), 6);
    const SiteSet b = cli::random_subset(rng, m.n(), 2, m.n());
    CAPTURE(m.describe());
    CAPTURE(r.to_string());
    const ContractionCheck check = verify_contraction_identity(m, r, b);
    CHECK(check.equal);
    CHECK(check.lhs == oracle::sums(m, r.entries(), [&](const oracle::Labels& l) {
                         return oracle::all_same(l, b);
                       }).zeta);
    const ContractionResult c = contract(m, r, b);
    CHECK(c.contracted_model.n() == m.n() - static_cast<int>(b.size()) + 1);
    CHECK(c.contracted_list.size() == r.size());
  }
}

TEST_CASE("sigma on B(1) configurations survives the contraction") {
  cli::InstanceRng rng(223);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform(2, 5);
    const int q = rng.uniform(2, 4);
    const ModelSpec m = build_model(n, q, {});
    const IndexList r = cli::random_list(rng, n, 6);
    const SiteSet b = cli::random_subset(rng, n, 2, n);
    const ContractionResult c = contract(m, r, b);
    std::vector<int> labels(n);
    for (int& l : labels) l = rng.uniform(1, q);
    for (int s : b) labels[s - 1] = labels[b.front() - 1];
    std::vector<int> merged(c.contracted_model.n());
    for (const auto& [old_site, new_site] : c.site_map) merged[new_site - 1] = labels[old_site - 1];
    CHECK(sigma_R(Configuration::from_labels(q, labels), r) ==
          sigma_R(Configuration::from_labels(q, merged), c.contracted_list));
  }
}

TEST_CASE("contracting in two steps matches contracting once") {
  cli::InstanceRng rng(227);
  cli::InstanceParams params;
  params.n_max = 6;
  params.q_set = {2, 3};
  for (int trial = 0; trial < 40; ++trial) {
    ModelSpec m = cli::random_model(rng, params);
    if (m.n() < 3) continue;
    const IndexList r = cli::random_list(rng, m.n(), 5);
    const ContractionResult once = contract(m, r, {1, 2, 3});
    const ContractionResult first = contract(m, r, {2, 3});
    const ContractionResult second = contract(first.contracted_model, first.contracted_list, {1, 2});
    CHECK(second.contracted_model == once.contracted_model);
    CHECK(second.contracted_list == once.contracted_list);
    CHECK(first.front_factor * second.front_factor == once.front_factor);
  }
}

TEST_CASE("infinite couplings resolve by contraction") {
  const InfiniteResolution res =
      resolve_infinite_couplings(infinite_example(), {IndexList{2, 3}});
  CHECK(res.model.n() == 2);
  CHECK_FALSE(res.model.has_infinite());
  CHECK(res.model.interactions().find({1, 2})->value() == 5);
  CHECK(res.lists.front() == IndexList{1, 2});
  CHECK(res.site_map == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}});
  CHECK_FALSE(res.front_factor_discarded);
  CHECK(expectation(res.model, res.lists.front()) == Rational(8, 21));
}

TEST_CASE("large finite couplings approach the infinite limit monotonically") {
  const Rational limit(8, 21);
  Rational previous_gap = -1;
  for (long m : {10L, 100L, 10000L}) {
    const ModelSpec finite =
        build_model(3, 3, {{{1, 2}, Coupling(Rational(m))}, {{1, 3}, Coupling(Rational(5))}});
    const Rational e = expectation(finite, IndexList{2, 3});
    const Rational gap = abs(e - limit);
    CHECK(gap > 0);
    CHECK(e < limit);
    if (previous_gap >= 0) CHECK(gap < previous_gap);
    previous_gap = gap;
  }
}

TEST_CASE("chains of infinite couplings collapse transitively") {
  const ModelSpec m = build_model(3, 2,
                                  {{{1, 2}, Coupling::infinite()},
                                   {{2, 3}, Coupling::infinite()},
                                   {{1, 3}, Coupling(Rational(4))}});
  const InfiniteResolution res = resolve_infinite_couplings(m, {IndexList{1, 3}, IndexList{2}});
  CHECK(res.model.n() == 1);
  CHECK(res.model.interactions().size() == 0);
  CHECK(res.lists[0] == IndexList{1, 1});
  CHECK(res.lists[1] == IndexList{1});
  CHECK(res.front_factor_discarded);
  CHECK(expectation(res.model, res.lists[0]) == Rational(1, 4));

  const ModelSpec two = build_model(5, 2,
                                    {{{1, 4}, Coupling::infinite()},
                                     {{2, 5}, Coupling::infinite()},
                                     {{3, 4, 5}, Coupling(Rational(3))}});
  const InfiniteResolution r2 = resolve_infinite_couplings(two, {IndexList{4, 5}});
  CHECK(r2.model.n() == 3);
  CHECK(r2.site_map == std::map<int, int>{{1, 1}, {2, 2}, {3, 3}, {4, 1}, {5, 2}});
  CHECK(r2.lists[0] == IndexList{1, 2});
  CHECK(r2.model.interactions().find({1, 2, 3})->value() == 3);
  CHECK_FALSE(r2.front_factor_discarded);
}

TEST_CASE("models without infinite couplings pass through unchanged") {
  const ModelSpec m = example_model(Rational(2));
  const InfiniteResolution res = resolve_infinite_couplings(m, {IndexList{1, 3}});
  CHECK(res.model == m);
  CHECK(res.lists.front() == IndexList{1, 3});
  CHECK_FALSE(res.front_factor_discarded);
  CHECK_THROWS_AS(resolve_infinite_couplings(m, {IndexList{4}}), std::out_of_range);
}

TEST_CASE("resolved expectations match conditioning on the infinite blocks") {
  cli::InstanceRng rng(229);
  cli::InstanceParams params;
  params.n_max = 5;
  params.q_set = {2, 3};
  for (int trial = 0; trial < 40; ++trial) {
    const ModelSpec base = cli::random_model(rng, params);
    const SiteSet b = cli::random_subset(rng, base.n(), 2, base.n());
    if (base.interactions().contains(b)) continue;
    const ModelSpec with_inf = base.with_coupling(b, Coupling::infinite());
    const IndexList r = cli::random_list(rng, base.n(), 5);
    const InfiniteResolution res = resolve_infinite_couplings(with_inf, {r});
    const auto cond = oracle::sums(base, r.entries(), [&](const oracle::Labels& l) {
      return oracle::all_same(l, b);
    });
    CHECK(expectation(res.model, res.lists.front()) == cond.zeta / cond.z);
  }
}
