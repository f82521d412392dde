#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "potts/cli/random_instance.hpp"
#include "potts/inequalities.hpp"

namespace potts::cli {

enum class Suite { theorem1, theorem2, contraction, xi, quadratic, all };
enum class OutputFormat { human, json, csv };

// Throw InputError on unknown names.
Suite parse_suite(std::string_view name);
OutputFormat parse_format(std::string_view name);

struct RunConfig {
  Suite suite = Suite::all;
  std::uint64_t seed = 0;
  int trials = 100;
  InstanceParams params;
  std::vector<int> xi_q_values{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  std::vector<int> xi_exponents{2, 4, 6};
  unsigned workers = 1;
  OutputFormat format = OutputFormat::csv;
};

// One exact check. For xi rows n and s are 0 and |R|, |S| hold the exponents.
struct ReportRow {
  std::uint64_t trial = 0;
  int n = 0;
  int q = 0;
  int s = 0;
  int r_len = 0;
  int s_len = 0;
  std::string quantity;
  Rational value;
  bool satisfied = true;
};

inline constexpr std::string_view kCsvHeader =
    "trial,n,q,s,|R|,|S|,quantity,value_num,value_den,satisfied";

// Rows in trial order; identical for identical configs regardless of workers.
std::vector<ReportRow> run_suite(const RunConfig& config);

std::vector<ReportRow> xi_rows(const std::vector<int>& q_values, const std::vector<int>& exponents);

void write_rows(std::ostream& out, const std::vector<ReportRow>& rows, OutputFormat format);

bool all_satisfied(const std::vector<ReportRow>& rows);

// Runs the configured suite, writes the report, returns 0 if every check
// held and 1 otherwise.
int run_sweep(const RunConfig& config, std::ostream& out);

}  // namespace potts::cli
