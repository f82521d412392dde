#pragma once

#include <map>
#include <vector>

#include "potts/index_list.hpp"
#include "potts/model.hpp"

namespace potts {

// Result of merging the sites of B into b1 = min(B).
//
// Couplings with A disjoint from B are copied. Couplings meeting B are
// regrouped by C_A = A - B: those with C_A nonempty multiply into the key
// C_A + {b1}, and those with A inside B multiply into front_factor, which is
// kept outside the contracted table. Sites are then relabeled to 1..n*.
struct ContractionResult {
  ModelSpec contracted_model;
  IndexList contracted_list;
  Rational front_factor;
  std::map<int, int> site_map;  // old site -> new site, every old site present
};

ContractionResult contract(const ModelSpec& model, const IndexList& list, const SiteSet& block);

struct ContractionCheck {
  Rational lhs;  // zeta(R, B^(1)) on the original model
  Rational rhs;  // front_factor * zeta(R*, Omega) on the contracted model
  bool equal;
};

ContractionCheck verify_contraction_identity(const ModelSpec& model, const IndexList& list,
                                             const SiteSet& block);

struct InfiniteResolution {
  ModelSpec model;
  std::vector<IndexList> lists;
  std::map<int, int> site_map;
  // True when a finite coupling with x > 1 lay entirely inside a merged
  // cluster; its constant factor was dropped. Expectations are unaffected.
  bool front_factor_discarded = false;
};

// Treats every x_A = inf as conditioning on delta_A = 1: sites joined by
// infinite couplings are grouped (transitively) and each group contracted.
InfiniteResolution resolve_infinite_couplings(const ModelSpec& model,
                                              const std::vector<IndexList>& lists);

}  // namespace potts
