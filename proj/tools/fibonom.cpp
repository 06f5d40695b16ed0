#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibonom/dets.hpp"
#include "fibonom/fibonacci.hpp"
#include "fibonom/fibonomial.hpp"
#include "fibonom/identities.hpp"
#include "fibonom/series_cf.hpp"
#include "fibonom/verify.hpp"
#include "fibonom/version.hpp"

namespace {

using fibonom::Int;
using fibonom::Rat;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

const std::vector<std::string> kEvalMethods{
    "product", "recurrence", "coldet", "rowdet", "bridge", "trudi", "bell"};

// The six routes compared by `--method all` (the agreement contract).
const std::vector<std::string> kAllMethods{"product", "recurrence", "coldet",
                                           "rowdet",  "bridge",     "bell"};

Int eval_method(unsigned n, unsigned k, const std::string& method) {
  if (method == "product") return fibonom::fibonomial_product(n, k);
  if (method == "recurrence") return fibonom::fibonomial_recurrence(n, k);
  if (k == 0) return Int(1);
  if (method == "coldet") return fibonom::fibonomial_det_column(n - 1, k);
  if (method == "rowdet") return fibonom::fibonomial_det_row(n - k, k);
  if (method == "bridge") return fibonom::fibonomial_from_qbinomial(n, k);
  if (method == "trudi") return fibonom::fibonomial_trudi_column(n - 1, k);
  if (method == "bell") return fibonom::fibonomial_via_powersum_det(n, k);
  throw std::invalid_argument("unknown method: " + method);
}

struct GlobalOptions {
  std::string format = "text";
  std::optional<unsigned> max_n;
  unsigned jobs = 1;
  std::string report_path;
};

int cmd_eval(unsigned n, unsigned k, const std::string& method,
             const GlobalOptions& g) {
  if (k > n) return usage_error("k must not exceed n");
  const bool all = (method == "all");
  const auto& methods = all ? kAllMethods : std::vector<std::string>{method};

  std::vector<std::pair<std::string, Int>> values;
  values.reserve(methods.size());
  for (const auto& m : methods) values.emplace_back(m, eval_method(n, k, m));

  bool agree = true;
  for (const auto& [name, v] : values)
    if (v != values.front().second) agree = false;

  if (g.format == "json") {
    ordered_json doc;
    doc["n"] = std::to_string(n);
    doc["k"] = std::to_string(k);
    doc["values"] = ordered_json::object();
    for (const auto& [name, v] : values) doc["values"][name] = v.get_str();
    doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& [name, v] : values) std::cout << v.get_str() << "\n";
  }
  if (!agree) {
    std::cerr << "error: methods disagree\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

int cmd_triangle(unsigned rows, const GlobalOptions& g) {
  if (rows == 0) return usage_error("triangle needs at least one row");
  if (g.format == "json") {
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (unsigned n = 0; n < rows; ++n) {
      ordered_json row = ordered_json::array();
      for (unsigned k = 0; k <= n; ++k)
        row.push_back(fibonom::fibonomial_recurrence(n, k).get_str());
      doc["rows"].push_back(row);
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (unsigned n = 0; n < rows; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) std::cout << " ";
        std::cout << fibonom::fibonomial_recurrence(n, k).get_str();
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_cf(const std::string& variant, unsigned n, unsigned order,
           const GlobalOptions& g) {
  if (order == 0) return usage_error("order must be >= 1");
  if (variant != "row" && variant != "column")
    return usage_error("variant must be 'row' or 'column'");
  const fibonom::CFSpec spec =
      (variant == "row") ? fibonom::cf_row_spec(n) : fibonom::cf_column_spec(n);
  const auto series = fibonom::cf_eval(spec, order);

  if (g.format == "json") {
    ordered_json doc;
    doc["variant"] = variant;
    doc["n"] = std::to_string(n);
    doc["order"] = std::to_string(order);
    doc["levels"] = ordered_json::array();
    for (const auto& level : spec.levels)
      doc["levels"].push_back({{"num", level.num_coeff.get_str()},
                               {"den", level.den_coeff.get_str()}});
    doc["coefficients"] = ordered_json::array();
    for (std::size_t i = 0; i <= series.order(); ++i)
      doc["coefficients"].push_back(series[i].get_str());
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "variant: " << variant << "\n";
    std::cout << "n: " << n << "\n";
    std::cout << "levels:";
    for (const auto& level : spec.levels)
      std::cout << " " << level.num_coeff.get_str();
    std::cout << "\n";
    std::cout << "coefficients:";
    for (std::size_t i = 0; i <= series.order(); ++i)
      std::cout << " " << series[i].get_str();
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_series(const std::string& variant, unsigned n, unsigned order,
               const GlobalOptions& g) {
  std::vector<Int> coeffs;
  if (variant == "row") {
    auto s = fibonom::signed_row_series(n, order);
    for (std::size_t i = 0; i <= s.order(); ++i) coeffs.push_back(s[i]);
  } else if (variant == "column") {
    for (unsigned k = 0; k <= order; ++k)
      coeffs.push_back(fibonom::fibonomial_recurrence(n + k, k));
  } else if (variant == "recip") {
    auto [a, b] = fibonom::inverse_pair_series(n, order);
    (void)b;
    for (std::size_t i = 0; i <= a.order(); ++i) coeffs.push_back(a[i]);
  } else {
    return usage_error("variant must be 'row', 'column' or 'recip'");
  }

  if (g.format == "json") {
    ordered_json doc;
    doc["variant"] = variant;
    doc["n"] = std::to_string(n);
    doc["order"] = std::to_string(order);
    doc["coefficients"] = ordered_json::array();
    for (const auto& c : coeffs) doc["coefficients"].push_back(c.get_str());
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "coefficients:";
    for (const auto& c : coeffs) std::cout << " " << c.get_str();
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const GlobalOptions& g) {
  if (suite != "all") {
    const auto& names = fibonom::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
      return usage_error("unknown suite: " + suite);
  }

  fibonom::VerifyOptions options;
  options.max_n = g.max_n;
  options.jobs = g.jobs;
  fibonom::Report report = fibonom::run_suite(suite, options);

  if (!g.report_path.empty()) {
    std::ofstream out(g.report_path, std::ios::binary);
    if (!out) return usage_error("cannot write report to " + g.report_path);
    out << report.to_json();
  }

  if (g.format == "json") {
    std::cout << report.to_json();
  } else {
    std::cout << report.to_text();
  }
  return report.ok() ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Fibonomial coefficient toolkit"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  unsigned max_n_value = 0;
  auto* max_n_opt =
      app.add_option("--max-n", max_n_value, "override suite parameter caps");
  app.add_option("--jobs", g.jobs, "parallel verification workers")
      ->check(CLI::PositiveNumber);
  app.add_option("--report", g.report_path, "write a JSON report to this path");

  unsigned arg_n = 0, arg_k = 0, arg_rows = 0, arg_order = 0;
  std::string arg_method = "product";
  std::string arg_variant;
  std::string arg_suite = "all";

  auto* eval = app.add_subcommand("eval", "evaluate one Fibonomial coefficient");
  eval->add_option("n", arg_n, "upper index")->required();
  eval->add_option("k", arg_k, "lower index")->required();
  std::vector<std::string> method_choices = kEvalMethods;
  method_choices.push_back("all");
  eval->add_option("--method", arg_method, "computation route")
      ->check(CLI::IsMember(method_choices));
  eval->fallthrough();

  auto* triangle = app.add_subcommand("triangle", "print triangle rows");
  triangle->add_option("rows", arg_rows, "number of rows")->required();
  triangle->fallthrough();

  auto* cf = app.add_subcommand("cf", "expand a continued fraction");
  cf->add_option("variant", arg_variant, "row or column")->required();
  cf->add_option("n", arg_n, "parameter n")->required();
  cf->add_option("order", arg_order, "truncation order")->required();
  cf->fallthrough();

  auto* series = app.add_subcommand("series", "print generating series");
  series->add_option("variant", arg_variant, "row, column or recip")
      ->required();
  series->add_option("n", arg_n, "parameter n")->required();
  series->add_option("order", arg_order, "truncation order")->required();
  series->fallthrough();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", arg_suite, "suite name or 'all'");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (max_n_opt->count() > 0) g.max_n = max_n_value;

  try {
    if (eval->parsed()) return cmd_eval(arg_n, arg_k, arg_method, g);
    if (triangle->parsed()) return cmd_triangle(arg_rows, g);
    if (cf->parsed()) return cmd_cf(arg_variant, arg_n, arg_order, g);
    if (series->parsed()) return cmd_series(arg_variant, arg_n, arg_order, g);
    if (verify->parsed()) return cmd_verify(arg_suite, g);
  } catch (const std::invalid_argument& err) {
    return usage_error(err.what());
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kExitVerifyFailure;
  }
  return usage_error("no subcommand given");
}
