// potts-verify: exact-enumeration checks of Griffiths-type correlation
// inequalities for the q-state Potts model with centered spins.
//
// Exit codes: 0 every check held, 1 a mathematical check failed,
// 2 usage or input error.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "potts/cli/model_file.hpp"
#include "potts/cli/sweep.hpp"
#include "potts/contraction.hpp"
#include "potts/inequalities.hpp"
#include "potts/zeta.hpp"

namespace {

using namespace potts;
using namespace potts::cli;

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text) {
  return parse_index_list(text).entries();
}

// Loads a model, resolving infinite couplings, and reports the relabeling.
struct LoadedModel {
  ModelSpec model;
  std::map<std::string, IndexList> lists;
  std::map<int, int> site_map;
  bool contracted = false;
};

LoadedModel load(const std::string& path, const std::map<std::string, std::string>& overrides) {
  ModelFile file = parse_model_file(path);
  if (file.approximate)
    std::cerr << "note: couplings given as J were converted to x = exp(J) approximately\n";
  for (const auto& [name, text] : overrides)
    if (!text.empty()) {
      IndexList list = parse_index_list(text);
      list.require_within(file.model.n());
      file.lists[name] = std::move(list);
    }

  LoadedModel out{file.model, file.lists, {}, false};
  if (file.model.has_infinite()) {
    std::vector<std::string> names;
    std::vector<IndexList> lists;
    for (const auto& [name, list] : file.lists) {
      names.push_back(name);
      lists.push_back(list);
    }
    InfiniteResolution res = resolve_infinite_couplings(file.model, lists);
    out.model = res.model;
    out.site_map = res.site_map;
    out.contracted = true;
    for (std::size_t i = 0; i < names.size(); ++i) out.lists[names[i]] = res.lists[i];
    std::cerr << "note: infinite couplings resolved by contraction; site map:";
    for (auto [from, to] : res.site_map) std::cerr << ' ' << from << "->" << to;
    std::cerr << '\n';
  }
  return out;
}

const IndexList& require_list(const LoadedModel& m, const std::string& name) {
  auto it = m.lists.find(name);
  if (it == m.lists.end())
    throw InputError("no list '" + name + "' given (use --" + name + " or the file's lists)");
  return it->second;
}

int run_expect(const std::string& model_path, const std::string& r_text, OutputFormat format) {
  const LoadedModel m = load(model_path, {{"R", r_text}});
  if (m.lists.empty()) throw InputError("no index lists to evaluate (use --R)");

  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  if (format == OutputFormat::csv)
    std::cout << "list,entries,Z_num,Z_den,zeta_num,zeta_den,expectation_num,expectation_den\n";
  for (const auto& [name, list] : m.lists) {
    EventSums sums = event_sums(m.model, std::span<const IndexList>(&list, 1), EventPredicate::everything());
    const Rational& z = sums.weight_sum;
    const Rational& zr = sums.zetas[0];
    const Rational value = zr / z;
    switch (format) {
      case OutputFormat::human:
        std::cout << name << '=' << list.to_string() << "  <sigma^" << name << "> = " << to_string(value)
                  << "  (Z = " << to_string(z) << ", zeta = " << to_string(zr) << ")\n";
        break;
      case OutputFormat::csv:
        std::cout << name << ',' << '"' << list.to_string() << '"' << ',' << z.get_num() << ','
                  << z.get_den() << ',' << zr.get_num() << ',' << zr.get_den() << ','
                  << value.get_num() << ',' << value.get_den() << '\n';
        break;
      case OutputFormat::json:
        doc.push_back({{"list", name},
                       {"entries", list.entries()},
                       {"Z", to_string(z)},
                       {"zeta", to_string(zr)},
                       {"expectation", to_string(value)}});
        break;
    }
  }
  if (format == OutputFormat::json) std::cout << doc.dump(2) << '\n';
  return 0;
}

int run_verify(const std::string& model_path, const std::string& r_text, const std::string& s_text,
               OutputFormat format) {
  const LoadedModel m = load(model_path, {{"R", r_text}, {"S", s_text}});
  const IndexList& r = require_list(m, "R");
  std::vector<ReportRow> rows;
  auto add = [&](const IndexList& a, const IndexList& b, const char* quantity, const InequalityReport& rep) {
    rows.push_back({0, m.model.n(), m.model.q(), m.model.s(), a.size(), b.size(), quantity,
                    rep.values.front().value, rep.satisfied});
    if (rep.witness) std::cerr << "FAILED " << to_string(rep.kind) << ": " << *rep.witness << '\n';
  };
  add(r, {}, "expectation", check_theorem1(m.model, r));
  if (auto it = m.lists.find("S"); it != m.lists.end()) {
    const IndexList& s = it->second;
    add(s, {}, "expectation", check_theorem1(m.model, s));
    add(r, s, "covariance", check_theorem2(m.model, r, s));
  }
  write_rows(std::cout, rows, format);
  return all_satisfied(rows) ? 0 : kExitFailed;
}

int run_contract_check(const std::string& model_path, const std::string& r_text,
                       const std::string& b_text, OutputFormat format) {
  const LoadedModel m = load(model_path, {{"R", r_text}});
  const IndexList& r = require_list(m, "R");
  if (b_text.empty()) throw InputError("--B is required");
  const SiteSet block = make_site_set(parse_int_list(b_text));

  const ContractionResult c = contract(m.model, r, block);
  const ContractionCheck check = verify_contraction_identity(m.model, r, block);
  std::vector<ReportRow> rows{
      {0, m.model.n(), m.model.q(), m.model.s(), r.size(), 0, "zeta_B1", check.lhs, check.equal},
      {0, c.contracted_model.n(), c.contracted_model.q(), c.contracted_model.s(),
       c.contracted_list.size(), 0, "front_times_zeta_contracted", check.rhs, check.equal}};
  if (format == OutputFormat::human) {
    std::cout << "contracted model: " << c.contracted_model.describe() << '\n'
              << "R* = " << c.contracted_list.to_string()
              << "  front factor = " << to_string(c.front_factor) << '\n';
  }
  write_rows(std::cout, rows, format);
  return check.equal ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of generalized Griffiths inequalities for the q-state Potts model"};
  app.require_subcommand(1);

  std::string model_path;
  std::string r_text;
  std::string s_text;
  std::string b_text;
  std::string format_name = "human";
  std::string suite_name = "all";
  std::string q_set_text;
  std::string exponents_text = "2,4,6";
  RunConfig config;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "human|json|csv")->check(CLI::IsMember({"human", "json", "csv"}));
  };

  auto* expect = app.add_subcommand("expect", "Print <sigma^R> for lists from --R or the model file");
  expect->add_option("--model", model_path, "Model file (JSON)")->required();
  expect->add_option("--R", r_text, "Index list, e.g. \"1,3\"");
  add_format(expect);

  auto* verify = app.add_subcommand("verify", "Check both inequalities on one model");
  verify->add_option("--model", model_path, "Model file (JSON)")->required();
  verify->add_option("--R", r_text, "Index list R");
  verify->add_option("--S", s_text, "Index list S");
  add_format(verify);

  auto* sweep = app.add_subcommand("sweep", "Run seeded random verification suites");
  sweep->add_option("--suite", suite_name, "theorem1|theorem2|contraction|xi|quadratic|all")
      ->check(CLI::IsMember({"theorem1", "theorem2", "contraction", "xi", "quadratic", "all"}));
  sweep->add_option("--seed", config.seed, "Random seed");
  sweep->add_option("--trials", config.trials, "Number of random instances")->check(CLI::NonNegativeNumber);
  sweep->add_option("--q-set", q_set_text, "Spin counts to draw from, e.g. 2,3,4");
  sweep->add_option("--n-max", config.params.n_max, "Largest site count")->check(CLI::Range(2, 30));
  sweep->add_option("--x-max", config.params.x_max, "Largest random coupling")->check(CLI::Range(1, 1000000));
  sweep->add_option("--max-interactions", config.params.max_interactions)->check(CLI::NonNegativeNumber);
  sweep->add_option("--max-list-len", config.params.max_list_len)->check(CLI::NonNegativeNumber);
  sweep->add_option("--max-configs", config.params.max_configs, "Cap on q^n per instance");
  sweep->add_option("--workers", config.workers, "Trials evaluated in parallel")->check(CLI::PositiveNumber);
  add_format(sweep);

  auto* xi_cmd = app.add_subcommand("xi", "Tabulate xi_q(a,b) and its q -> q+2 recursion");
  xi_cmd->add_option("--q-set", q_set_text, "Spin counts (default 2..12)");
  xi_cmd->add_option("--exponents", exponents_text, "Even exponents for a and b");
  add_format(xi_cmd);

  auto* contract_cmd = app.add_subcommand("contract-check", "Check zeta(R,B^(1)) = x* zeta(R*) on one model");
  contract_cmd->add_option("--model", model_path, "Model file (JSON)")->required();
  contract_cmd->add_option("--R", r_text, "Index list R");
  contract_cmd->add_option("--B", b_text, "Block of sites to merge, e.g. \"1,2\"");
  add_format(contract_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(format_name);
    if (*expect) return run_expect(model_path, r_text, format);
    if (*verify) return run_verify(model_path, r_text, s_text, format);
    if (*contract_cmd) return run_contract_check(model_path, r_text, b_text, format);
    if (*xi_cmd) {
      std::vector<int> qs = q_set_text.empty() ? config.xi_q_values : parse_int_list(q_set_text);
      const std::vector<int> exps = parse_int_list(exponents_text);
      for (int q : qs)
        if (q < 2) throw InputError("q values must be >= 2");
      const auto rows = xi_rows(qs, exps);
      write_rows(std::cout, rows, format);
      return all_satisfied(rows) ? 0 : kExitFailed;
    }
    if (*sweep) {
      config.suite = parse_suite(suite_name);
      config.format = format;
      if (!q_set_text.empty()) {
        config.params.q_set = parse_int_list(q_set_text);
        config.xi_q_values = config.params.q_set;
      }
      return run_sweep(config, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
