#include "potts/cli/sweep.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <thread>

#include <json.hpp>

#include "potts/cli/model_file.hpp"

namespace potts::cli {

Suite parse_suite(std::string_view name) {
  if (name == "theorem1") return Suite::theorem1;
  if (name == "theorem2") return Suite::theorem2;
  if (name == "contraction") return Suite::contraction;
  if (name == "xi") return Suite::xi;
  if (name == "quadratic") return Suite::quadratic;
  if (name == "all") return Suite::all;
  throw InputError("unknown suite '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "human") return OutputFormat::human;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw InputError("unknown format '" + std::string(name) + "'");
}

namespace {

ReportRow row_for(std::uint64_t trial, const ModelSpec& model, const IndexList& r,
                  const IndexList& s, std::string quantity, Rational value, bool satisfied) {
  return {trial, model.n(), model.q(), model.s(), r.size(), s.size(), std::move(quantity),
          std::move(value), satisfied};
}

void theorem1_trial(std::uint64_t trial, InstanceRng& rng, const InstanceParams& p,
                    std::vector<ReportRow>& rows) {
  const ModelSpec model = random_model(rng, p);
  const IndexList r = random_list(rng, model.n(), p.max_list_len);
  const InequalityReport rep = check_theorem1(model, r);
  rows.push_back(row_for(trial, model, r, {}, "expectation", rep.value("expectation"), rep.satisfied));
}

void theorem2_trial(std::uint64_t trial, InstanceRng& rng, const InstanceParams& p,
                    std::vector<ReportRow>& rows) {
  const ModelSpec model = random_model(rng, p);
  const IndexList r = random_list(rng, model.n(), p.max_list_len);
  const IndexList s = random_list(rng, model.n(), p.max_list_len);
  const InequalityReport rep = check_theorem2(model, r, s);
  rows.push_back(row_for(trial, model, r, s, "covariance", rep.value("covariance"), rep.satisfied));
}

void contraction_trial(std::uint64_t trial, InstanceRng& rng, const InstanceParams& p,
                       std::vector<ReportRow>& rows) {
  const ModelSpec model = random_model(rng, p);
  const IndexList r = random_list(rng, model.n(), p.max_list_len);
  const SiteSet block = random_subset(rng, model.n(), 2, p.max_subset);
  const InequalityReport rep = check_contraction(model, r, block);
  rows.push_back(row_for(trial, model, r, {}, "zeta_B1", rep.value("lhs"), rep.satisfied));
}

void quadratic_trial(std::uint64_t trial, InstanceRng& rng, const InstanceParams& p,
                     std::vector<ReportRow>& rows) {
  const ModelSpec drawn = random_model(rng, p);
  const SiteSet block = random_subset(rng, drawn.n(), 2, p.max_subset);
  InteractionTable table = drawn.interactions();
  table.erase(block);
  const ModelSpec base(drawn.n(), drawn.q(), std::move(table));
  const IndexList r = random_even_length_list(rng, base.n(), p.max_list_len);
  const IndexList s = random_even_length_list(rng, base.n(), p.max_list_len);
  std::vector<Rational> xs;
  for (int i = 0; i < 3; ++i) xs.push_back(random_coupling(rng, p.x_max));

  const QuadraticDecomposition qd = quadratic_decomposition(base, block, xs[0], r, s);
  const InequalityReport rep = check_quadratic(base, block, qd, r, s);
  rows.push_back(row_for(trial, base, r, s, "U", qd.U, qd.U >= 0));
  rows.push_back(row_for(trial, base, r, s, "2U+V", rep.value("2U+V"), rep.value("2U+V") >= 0));
  rows.push_back(row_for(trial, base, r, s, "U+V+W", rep.value("U+V+W"), rep.value("U+V+W") >= 0));

  std::vector<std::pair<Rational, Rational>> samples;
  for (const auto& x : xs) {
    const Rational direct =
        x == qd.x ? qd.augmented : scaled_covariance(base.with_coupling(block, Coupling(x)), r, s);
    rows.push_back(row_for(trial, base, r, s, "quadratic_identity", direct, qd.evaluate(x) == direct));
    samples.emplace_back(x, direct);
  }
  std::sort(samples.begin(), samples.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational rise = samples.back().second - samples.front().second;
  bool monotone = true;
  for (std::size_t i = 1; i < samples.size(); ++i)
    monotone = monotone && samples[i].second >= samples[i - 1].second;
  rows.push_back(row_for(trial, base, r, s, "monotone_in_x", std::move(rise), monotone));
}

using TrialFn = void (*)(std::uint64_t, InstanceRng&, const InstanceParams&, std::vector<ReportRow>&);

std::vector<std::pair<std::uint64_t, TrialFn>> trial_functions(Suite suite) {
  // The stream id keeps each suite's instances independent of which other
  // suites run alongside it.
  switch (suite) {
    case Suite::theorem1: return {{1, theorem1_trial}};
    case Suite::theorem2: return {{2, theorem2_trial}};
    case Suite::contraction: return {{3, contraction_trial}};
    case Suite::quadratic: return {{4, quadratic_trial}};
    case Suite::all:
      return {{1, theorem1_trial}, {2, theorem2_trial}, {3, contraction_trial}, {4, quadratic_trial}};
    case Suite::xi: return {};
  }
  return {};
}

}  // namespace

std::vector<ReportRow> xi_rows(const std::vector<int>& q_values, const std::vector<int>& exponents) {
  std::vector<ReportRow> rows;
  for (int q : q_values)
    for (int a : exponents)
      for (int b : exponents) {
        const Rational value = xi(q, a, b);
        rows.push_back({0, 0, q, 0, a, b, "xi", value, value >= 0});
        const InequalityReport rec = xi_recursion_check(q, a, b);
        rows.push_back({0, 0, q, 0, a, b, "xi_recursion", rec.value("difference"), rec.satisfied});
      }
  return rows;
}

std::vector<ReportRow> run_suite(const RunConfig& config) {
  if (config.trials < 0) throw InputError("trials must be >= 0");
  const auto functions = trial_functions(config.suite);
  const auto trials = static_cast<std::size_t>(config.trials);
  std::vector<std::vector<ReportRow>> per_trial(functions.empty() ? 0 : trials);

  auto run_trial = [&](std::size_t t) {
    for (const auto& [stream, fn] : functions) {
      InstanceRng rng(derive_seed(config.seed, stream, t));
      fn(t + 1, rng, config.params, per_trial[t]);
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(config.workers, static_cast<unsigned>(per_trial.size())));
  if (workers <= 1) {
    for (std::size_t t = 0; t < per_trial.size(); ++t) run_trial(t);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < per_trial.size(); t += workers) run_trial(t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<ReportRow> rows;
  for (auto& block : per_trial) std::move(block.begin(), block.end(), std::back_inserter(rows));
  if (config.suite == Suite::xi || config.suite == Suite::all) {
    auto table = xi_rows(config.xi_q_values, config.xi_exponents);
    std::move(table.begin(), table.end(), std::back_inserter(rows));
  }
  return rows;
}

bool all_satisfied(const std::vector<ReportRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.satisfied; });
}

void write_rows(std::ostream& out, const std::vector<ReportRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      out << kCsvHeader << '\n';
      for (const auto& r : rows)
        out << r.trial << ',' << r.n << ',' << r.q << ',' << r.s << ',' << r.r_len << ','
            << r.s_len << ',' << r.quantity << ',' << r.value.get_num().get_str() << ','
            << r.value.get_den().get_str() << ',' << (r.satisfied ? "true" : "false") << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& r : rows)
        doc.push_back({{"trial", r.trial},
                       {"n", r.n},
                       {"q", r.q},
                       {"s", r.s},
                       {"|R|", r.r_len},
                       {"|S|", r.s_len},
                       {"quantity", r.quantity},
                       {"value_num", r.value.get_num().get_str()},
                       {"value_den", r.value.get_den().get_str()},
                       {"satisfied", r.satisfied}});
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::human: {
      std::size_t failed = 0;
      for (const auto& r : rows) {
        out << std::setw(6) << r.trial << "  n=" << r.n << " q=" << std::setw(2) << r.q
            << " s=" << r.s << " |R|=" << r.r_len << " |S|=" << r.s_len << "  " << std::left
            << std::setw(28) << r.quantity << std::right << ' ' << to_string(r.value)
            << (r.satisfied ? "" : "  FAILED") << '\n';
        if (!r.satisfied) ++failed;
      }
      out << rows.size() << " checks, " << failed << " failed\n";
      break;
    }
  }
}

int run_sweep(const RunConfig& config, std::ostream& out) {
  const auto rows = run_suite(config);
  write_rows(out, rows, config.format);
  return all_satisfied(rows) ? 0 : 1;
}

}  // namespace potts::cli
