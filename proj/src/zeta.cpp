#include "potts/zeta.hpp"

#include <exception>
#include <stdexcept>
#include <thread>

#include "potts/gibbs.hpp"

namespace potts {

const char* to_string(Sign sign) {
  switch (sign) {
    case Sign::positive: return "positive";
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
  }
  return "?";
}

Rational sigma_R(const Configuration& config, const IndexList& list) {
  Integer product = 1;
  for (int site : list.entries()) product *= config.doubled(site);
  return halve(Rational(product), static_cast<unsigned>(list.size()));
}

Sign classify(const Configuration& config, const IndexList& list) {
  bool negative = false;
  for (int site : list.entries()) {
    const int u = config.doubled(site);
    if (u == 0) return Sign::zero;
    if (u < 0) negative = !negative;
  }
  return negative ? Sign::negative : Sign::positive;
}

EventPredicate& EventPredicate::require_sign(IndexList list, Sign sign) {
  sign_ = SignConstraint{std::move(list), sign};
  return *this;
}

EventPredicate& EventPredicate::require_delta(SiteSet sites, bool equal) {
  deltas_.push_back({make_site_set(std::move(sites)), equal});
  return *this;
}

bool EventPredicate::matches(const Configuration& config) const {
  if (sign_ && classify(config, sign_->list) != sign_->sign) return false;
  for (const auto& d : deltas_)
    if (generalized_delta(config, d.sites) != d.equal) return false;
  return true;
}

EventPredicate delta_event(SiteSet sites, bool equal) {
  EventPredicate event;
  event.require_delta(std::move(sites), equal);
  return event;
}

namespace {

// Everything the incremental kernel needs, with 0-based sites and spin digits
// 0..q-1 (digit d carries doubled spin 2d+1-q).
struct CompiledList {
  std::vector<int> sites;
  bool fits_int64 = true;
};

struct CompiledDelta {
  std::vector<int> sites;
  bool equal;
};

struct CompiledProblem {
  int n = 0;
  int q = 0;
  std::vector<std::vector<int>> interaction_sites;
  std::vector<Rational> interaction_x;
  std::vector<std::vector<int>> interactions_at_site;
  std::vector<CompiledList> lists;
  std::vector<CompiledDelta> deltas;
  std::optional<CompiledList> sign_list;
  Sign sign = Sign::positive;
};

std::vector<int> zero_based(const std::vector<int>& sites) {
  std::vector<int> out;
  out.reserve(sites.size());
  for (int s : sites) out.push_back(s - 1);
  return out;
}

CompiledList compile_list(const IndexList& list, int q) {
  CompiledList out{zero_based(list.entries())};
  const std::uint64_t magnitude = static_cast<std::uint64_t>(q - 1);
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < out.sites.size() && out.fits_int64; ++i) {
    if (magnitude != 0 && bound > (std::uint64_t{1} << 62) / magnitude) out.fits_int64 = false;
    bound *= magnitude;
  }
  return out;
}

void require_sites(const std::vector<int>& sites, int n, const char* what) {
  for (int s : sites)
    if (s < 1 || s > n)
      throw std::out_of_range(std::string(what) + " refers to site " + std::to_string(s) +
                              " outside 1.." + std::to_string(n));
}

CompiledProblem compile(const ModelSpec& model, std::span<const IndexList> lists,
                        const EventPredicate& event) {
  CompiledProblem p;
  p.n = model.n();
  p.q = model.q();
  p.interactions_at_site.resize(p.n);
  for (const auto& [sites, x] : model.interactions()) {
    const int id = static_cast<int>(p.interaction_sites.size());
    p.interaction_sites.push_back(zero_based(sites));
    p.interaction_x.push_back(x.value());
    for (int s : sites) p.interactions_at_site[s - 1].push_back(id);
  }
  for (const auto& list : lists) p.lists.push_back(compile_list(list, p.q));
  for (const auto& d : event.delta_constraints()) p.deltas.push_back({zero_based(d.sites), d.equal});
  if (const auto& sc = event.sign_constraint()) {
    p.sign_list = compile_list(sc->list, p.q);
    p.sign = sc->sign;
  }
  return p;
}

bool all_equal(const std::vector<int>& sites, const std::vector<int>& digit) {
  for (std::size_t i = 1; i < sites.size(); ++i)
    if (digit[sites[i]] != digit[sites[0]]) return false;
  return true;
}

EventSums empty_sums(std::size_t lists) {
  EventSums sums;
  sums.weight_sum = 0;
  sums.zetas.assign(lists, Rational(0));
  return sums;
}

// Accumulates ranks [lo, hi), maintaining Z_gamma multiplicatively across
// odometer steps.
EventSums incremental_range(const CompiledProblem& p, std::uint64_t lo, std::uint64_t hi) {
  EventSums sums = empty_sums(p.lists.size());
  if (lo >= hi) return sums;

  std::vector<int> digit(p.n);
  {
    std::uint64_t r = lo;
    for (int i = p.n - 1; i >= 0; --i) {
      digit[i] = static_cast<int>(r % static_cast<std::uint64_t>(p.q));
      r /= static_cast<std::uint64_t>(p.q);
    }
  }
  auto doubled = [&](int site) { return 2 * digit[site] + 1 - p.q; };

  const std::size_t m = p.interaction_sites.size();
  std::vector<char> satisfied(m);
  Rational weight = 1;
  for (std::size_t id = 0; id < m; ++id) {
    satisfied[id] = all_equal(p.interaction_sites[id], digit);
    if (satisfied[id]) weight *= p.interaction_x[id];
  }

  auto refresh = [&](int site) {
    for (int id : p.interactions_at_site[site]) {
      const bool now = all_equal(p.interaction_sites[id], digit);
      if (now == static_cast<bool>(satisfied[id])) continue;
      if (now)
        weight *= p.interaction_x[id];
      else
        weight /= p.interaction_x[id];
      satisfied[id] = now;
    }
  };

  auto in_event = [&] {
    for (const auto& d : p.deltas)
      if (all_equal(d.sites, digit) != d.equal) return false;
    if (p.sign_list) {
      bool negative = false;
      for (int s : p.sign_list->sites) {
        const int u = doubled(s);
        if (u == 0) return p.sign == Sign::zero;
        if (u < 0) negative = !negative;
      }
      return p.sign == (negative ? Sign::negative : Sign::positive);
    }
    return true;
  };

  Rational term;
  Integer big;
  for (std::uint64_t rank = lo;;) {
    ++sums.configs_visited;
    if (in_event()) {
      ++sums.configs_matching;
      sums.weight_sum += weight;
      for (std::size_t l = 0; l < p.lists.size(); ++l) {
        const auto& list = p.lists[l];
        if (list.fits_int64) {
          long product = 1;
          for (int s : list.sites) product *= doubled(s);
          if (product == 0) continue;
          term = weight;
          term *= product;
        } else {
          big = 1;
          for (int s : list.sites) big *= doubled(s);
          if (big == 0) continue;
          term = weight;
          term *= Rational(big);
        }
        sums.zetas[l] += term;
      }
    }
    if (++rank == hi) break;
    for (int i = p.n - 1; i >= 0; --i) {
      const bool carry = ++digit[i] == p.q;
      if (carry) digit[i] = 0;
      refresh(i);
      if (!carry) break;
    }
  }
  for (std::size_t l = 0; l < p.lists.size(); ++l)
    sums.zetas[l] = halve(sums.zetas[l], static_cast<unsigned>(p.lists[l].sites.size()));
  return sums;
}

// Oracle path: every configuration is rebuilt and weighed from scratch with
// the reference gibbs functions.
EventSums naive_range(const ModelSpec& model, std::span<const IndexList> lists,
                      const EventPredicate& event, std::uint64_t lo, std::uint64_t hi) {
  EventSums sums = empty_sums(lists.size());
  ConfigurationSpace space(model);
  for (std::uint64_t rank = lo; rank < hi; ++rank) {
    ++sums.configs_visited;
    const Configuration config = space.at(rank);
    if (!event.matches(config)) continue;
    ++sums.configs_matching;
    const Rational w = config_weight(config, model);
    sums.weight_sum += w;
    for (std::size_t l = 0; l < lists.size(); ++l) sums.zetas[l] += sigma_R(config, lists[l]) * w;
  }
  return sums;
}

void merge_into(EventSums& total, const EventSums& part) {
  total.weight_sum += part.weight_sum;
  for (std::size_t l = 0; l < total.zetas.size(); ++l) total.zetas[l] += part.zetas[l];
  total.configs_visited += part.configs_visited;
  total.configs_matching += part.configs_matching;
}

}  // namespace

EventSums event_sums(const ModelSpec& model, std::span<const IndexList> lists,
                     const EventPredicate& event, const EngineOptions& options) {
  model.require_finite();
  for (const auto& list : lists) list.require_within(model.n());
  if (const auto& sc = event.sign_constraint()) sc->list.require_within(model.n());
  for (const auto& d : event.delta_constraints()) require_sites(d.sites, model.n(), "event");

  const std::uint64_t total = model.configuration_count();
  const unsigned workers = std::max(1u, options.workers);
  const unsigned chunks = options.chunks == 0 ? workers : options.chunks;

  CompiledProblem compiled;
  if (options.path == EnumerationPath::incremental) compiled = compile(model, lists, event);

  auto run_chunk = [&](unsigned c) {
    const std::uint64_t base = total / chunks;
    const std::uint64_t extra = total % chunks;
    const std::uint64_t lo = c * base + std::min<std::uint64_t>(c, extra);
    const std::uint64_t hi = lo + base + (c < extra ? 1 : 0);
    return options.path == EnumerationPath::incremental ? incremental_range(compiled, lo, hi)
                                                        : naive_range(model, lists, event, lo, hi);
  };

  std::vector<EventSums> parts(chunks);
  if (workers == 1 || chunks == 1) {
    for (unsigned c = 0; c < chunks; ++c) parts[c] = run_chunk(c);
  } else {
    const unsigned threads = std::min(workers, chunks);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (unsigned c = t; c < chunks; c += threads) parts[c] = run_chunk(c);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  EventSums result = empty_sums(lists.size());
  for (const auto& part : parts) merge_into(result, part);
  return result;
}

ZetaResult zeta(const ModelSpec& model, const IndexList& list, const EventPredicate& event,
                const EngineOptions& options) {
  EventSums sums = event_sums(model, std::span<const IndexList>(&list, 1), event, options);
  return {std::move(sums.zetas[0]), sums.configs_visited, sums.configs_matching};
}

Rational expectation(const ModelSpec& model, const IndexList& list, const EngineOptions& options) {
  EventSums sums = event_sums(model, std::span<const IndexList>(&list, 1),
                              EventPredicate::everything(), options);
  return sums.zetas[0] / sums.weight_sum;
}

Rational power_sum(int q, int m) {
  if (m < 0) throw std::invalid_argument("power_sum exponent must be >= 0");
  SpinDomain domain(q);
  Integer total = 0;
  Integer term;
  for (int u : domain.doubled_values()) {
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(u < 0 ? -u : u),
                  static_cast<unsigned long>(m));
    if (u < 0 && m % 2 == 1) term = -term;
    total += term;
  }
  return halve(Rational(total), static_cast<unsigned>(m));
}

Rational zeta_closed_form_s0(const ModelSpec& model, const IndexList& list) {
  if (model.s() != 0)
    throw std::invalid_argument("closed form requires s = 0, model has s = " +
                                std::to_string(model.s()));
  list.require_within(model.n());
  if (list.has_odd_group()) return Rational(0);
  const auto& counts = list.multiplicities();
  Integer free_sites;
  mpz_ui_pow_ui(free_sites.get_mpz_t(), static_cast<unsigned long>(model.q()),
                static_cast<unsigned long>(model.n() - static_cast<int>(counts.size())));
  Rational result(free_sites);
  for (auto [site, count] : counts) result *= power_sum(model.q(), count);
  return result;
}

}  // namespace potts
