#pragma once

// Brute-force reference used only by the tests. It walks uncentered labels
// with site 1 varying fastest, evaluates spins as k - (q+1)/2 directly and
// shares no code with the engine beyond the Rational type and model input.

#include <functional>
#include <vector>

#include "potts/model.hpp"

namespace oracle {

using potts::Rational;
using Labels = std::vector<int>;  // labels[i] is the 1..q label of site i+1

inline void for_each_labels(int n, int q, const std::function<void(const Labels&)>& visit) {
  Labels labels(n, 1);
  while (true) {
    visit(labels);
    int i = 0;
    while (i < n && ++labels[i] > q) labels[i++] = 1;
    if (i == n) return;
  }
}

inline Rational centered(int q, int label) { return potts::ratio(2 * label - q - 1, 2); }

inline bool all_same(const Labels& labels, const std::vector<int>& sites) {
  for (int s : sites)
    if (labels[s - 1] != labels[sites.front() - 1]) return false;
  return true;
}

inline Rational weight(const potts::ModelSpec& model, const Labels& labels) {
  Rational w = 1;
  for (const auto& [sites, x] : model.interactions())
    if (all_same(labels, sites)) w *= x.value();
  return w;
}

inline Rational product(const potts::ModelSpec& model, const Labels& labels,
                        const std::vector<int>& list) {
  Rational p = 1;
  for (int s : list) p *= centered(model.q(), labels[s - 1]);
  return p;
}

struct Sums {
  Rational z = 0;
  Rational zeta = 0;
};

// Sums over configurations accepted by `keep`.
inline Sums sums(const potts::ModelSpec& model, const std::vector<int>& list,
                 const std::function<bool(const Labels&)>& keep = nullptr) {
  Sums out;
  for_each_labels(model.n(), model.q(), [&](const Labels& labels) {
    if (keep && !keep(labels)) return;
    const Rational w = weight(model, labels);
    out.z += w;
    out.zeta += product(model, labels, list) * w;
  });
  return out;
}

inline Rational expectation(const potts::ModelSpec& model, const std::vector<int>& list) {
  const Sums s = sums(model, list);
  return s.zeta / s.z;
}

inline Rational covariance(const potts::ModelSpec& model, const std::vector<int>& r,
                           const std::vector<int>& s) {
  std::vector<int> rs = r;
  rs.insert(rs.end(), s.begin(), s.end());
  return expectation(model, rs) - expectation(model, r) * expectation(model, s);
}

}  // namespace oracle
