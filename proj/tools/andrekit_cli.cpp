// andrekit command line front end: series expansion, tables, verification
// suites, and bijection traces with machine-readable output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/precondition error,
// 3 enumeration cap exceeded.

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "andrekit/andre.hpp"
#include "andrekit/cfrac.hpp"
#include "andrekit/permutation.hpp"
#include "andrekit/phi.hpp"
#include "andrekit/suites.hpp"

using nlohmann::json;
using namespace andrekit;

namespace {

constexpr int kDefaultCap = 9;

int cap_for(bool unsafe_n) { return unsafe_n ? 64 : kDefaultCap; }

std::string case_label(int case_id) {
  return case_id == 1 ? "i" : case_id == 2 ? "ii" : "iii";
}

void print_trace(const std::vector<PhiStep>& steps) {
  for (const auto& st : steps)
    std::cout << "step: x=" << st.x << " case=" << case_label(st.case_id)
              << " before=" << st.before << " after=" << st.after << "\n";
}

int cmd_expand(const std::string& series, int n, const std::string& format) {
  std::vector<MultiPoly> mu;
  std::string label;
  if (series == "dn") {
    mu = dn_series(n);
    label = "D";
  } else if (series == "master") {
    mu = master_series(n);
    label = "A";
  } else {
    mu = neg1_series(n);
    label = "D";
  }
  if (format == "json") {
    json out;
    out["series"] = series;
    json rows = json::array();
    for (int i = 0; i <= n; ++i)
      rows.push_back({{"n", i + 1}, {"poly", mu[i].str_grouped(Var::t)}});
    out["rows"] = rows;
    std::cout << out.dump() << "\n";
  } else {
    for (int i = 0; i <= n; ++i)
      std::cout << label << "_" << i + 1 << " = " << mu[i].str_grouped(Var::t)
                << "\n";
  }
  return 0;
}

struct TableRow {
  int n = 0;
  std::vector<std::string> values;
};

/// One pass over S_n fills a gamma/d/dq/en row; everything is driven off the
/// raw definitions so the recurrence stays an independent cross-check.
TableRow table_row(const std::string& which, int n) {
  TableRow row;
  row.n = n;
  const int kmax = (n - 1) / 2;
  if (which == "gamma") {
    std::vector<long long> counts(kmax + 1, 0);
    for_each_permutation(n, [&](const Permutation& s) {
      if (dd_count(s) == 0) ++counts[valley_count(s)];
    });
    for (long long c : counts) row.values.push_back(std::to_string(c));
  } else if (which == "d") {
    std::vector<long long> counts(kmax + 1, 0);
    for_each_permutation(n, [&](const Permutation& s) {
      if (is_andre(s)) ++counts[des(s)];
    });
    for (long long c : counts) row.values.push_back(std::to_string(c));
  } else if (which == "dq") {
    std::vector<MultiPoly> polys(kmax + 1);
    for_each_permutation(n, [&](const Permutation& s) {
      if (!is_andre(s)) return;
      Exponents e{};
      e[static_cast<int>(Var::q)] = 2 * res(s) + les(s);
      polys[des(s)] += MultiPoly::monomial(1, e);
    });
    for (const auto& p : polys) row.values.push_back(p.str());
  } else {  // en
    long long total = 0;
    for_each_permutation(n, [&](const Permutation& s) {
      if (is_andre(s)) ++total;
    });
    row.values.push_back(std::to_string(total));
  }
  return row;
}

int cmd_tables(const std::string& which, int n_max, const std::string& format,
               bool unsafe_n) {
  if (n_max > cap_for(unsafe_n)) {
    std::cerr << "error: n_max " << n_max << " exceeds the enumeration cap "
              << cap_for(unsafe_n) << " (use --unsafe-n to raise it)\n";
    return 3;
  }
  if (unsafe_n && n_max > kDefaultCap)
    std::cerr << "warning: enumerating S_" << n_max
              << "; time and memory grow factorially\n";
  std::vector<TableRow> rows;
  for (int n = 1; n <= n_max; ++n) rows.push_back(table_row(which, n));
  if (format == "json") {
    json out;
    out["table"] = which;
    json jrows = json::array();
    for (const auto& r : rows)
      jrows.push_back({{"n", r.n}, {"values", r.values}});
    out["rows"] = jrows;
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "n,k,value\n";
    for (const auto& r : rows)
      for (size_t k = 0; k < r.values.size(); ++k)
        std::cout << r.n << "," << k << ",\"" << r.values[k] << "\"\n";
  } else if (which == "en") {
    for (size_t i = 0; i < rows.size(); ++i)
      std::cout << (i ? "," : "") << rows[i].values[0];
    std::cout << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << "n=" << r.n << ": ";
      for (size_t k = 0; k < r.values.size(); ++k)
        std::cout << (k ? "," : "") << r.values[k];
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, int n_max, bool unsafe_n) {
  // Suites that walk all of S_n honor the enumeration cap; the series-only
  // suites (neg1, formula-p1, euler) have no factorial blow-up.
  const std::set<std::string> enumerating = {
      "main1", "main2", "orbit", "bijection", "xfact", "master", "all"};
  if (enumerating.count(suite) && n_max > cap_for(unsafe_n)) {
    std::cerr << "error: n_max " << n_max << " exceeds the enumeration cap "
              << cap_for(unsafe_n) << " (use --unsafe-n to raise it)\n";
    return 3;
  }
  SuiteReport rep = run_suite(suite, n_max);
  json out;
  out["suite"] = rep.suite;
  out["elapsed_ms"] = rep.elapsed_ms;
  json cases = json::array();
  for (const auto& c : rep.cases)
    cases.push_back({{"id", c.id},
                     {"status", c.pass ? "pass" : "fail"},
                     {"detail", c.detail}});
  out["cases"] = cases;
  std::cout << out.dump() << "\n";
  return rep.all_pass() ? 0 : 1;
}

std::set<int> parse_letter_list(const std::string& text) {
  std::set<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string piece = text.substr(pos, next - pos);
    if (!piece.empty()) out.insert(std::stoi(piece));
    pos = next + 1;
  }
  return out;
}

int cmd_bij_trace(const std::string& sigma_text, const std::string& s_text,
                  bool inverse, const std::string& tau_text) {
  std::vector<PhiStep> steps;
  if (inverse) {
    Permutation tau = Permutation::parse(tau_text);
    PhiInverseResult result = phi_inverse(tau, &steps);
    print_trace(steps);
    std::cout << "sigma: " << result.sigma.str() << "\n";
    std::cout << "S: {";
    bool first = true;
    for (int x : result.subset.letters) {
      std::cout << (first ? "" : ",") << x;
      first = false;
    }
    std::cout << "}\n";
    return 0;
  }
  Permutation sigma = Permutation::parse(sigma_text);
  SubsetS subset = make_subset(sigma, parse_letter_list(s_text));
  Permutation tau = phi_set(sigma, subset, &steps);
  print_trace(steps);
  std::cout << "final: " << tau.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"andrekit: exact Eulerian/Andre polynomial computations"};
  app.require_subcommand(1);

  std::string series, table_which, suite = "all";
  std::string format = "text";
  int expand_n = 4, n_max = 7;
  bool unsafe_n = false;

  auto* expand = app.add_subcommand("expand", "expand a continued fraction");
  expand->add_option("--series", series, "dn|master|neg1")
      ->required()
      ->check(CLI::IsMember({"dn", "master", "neg1"}));
  expand->add_option("--n", expand_n, "last series index")
      ->check(CLI::NonNegativeNumber);
  expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* tables = app.add_subcommand("tables", "print coefficient tables");
  tables->add_option("--which", table_which, "gamma|d|dq|en")
      ->required()
      ->check(CLI::IsMember({"gamma", "d", "dq", "en"}));
  tables->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  tables->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json", "csv"}));
  tables->add_flag("--unsafe-n", unsafe_n, "raise the enumeration cap");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("--suite", suite,
                   "main1|main2|orbit|bijection|xfact|master|neg1|"
                   "formula-p1|euler|all")
      ->check(CLI::IsMember({"main1", "main2", "orbit", "bijection", "xfact",
                             "master", "neg1", "formula-p1", "euler",
                             "flajolet", "all"}));
  verify->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  verify->add_flag("--unsafe-n", unsafe_n, "raise the enumeration cap");

  std::string sigma_text, s_text, tau_text;
  bool inverse = false;
  auto* bij = app.add_subcommand("bij-trace", "trace the valley transform");
  bij->add_option("--sigma", sigma_text, "input permutation");
  bij->add_option("--s", s_text, "comma-separated valley letters");
  bij->add_flag("--inverse", inverse, "recover (sigma, S) from tau");
  bij->add_option("--tau", tau_text, "image permutation (with --inverse)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (expand->parsed()) return cmd_expand(series, expand_n, format);
    if (tables->parsed())
      return cmd_tables(table_which, n_max, format, unsafe_n);
    if (verify->parsed()) return cmd_verify(suite, n_max, unsafe_n);
    if (bij->parsed()) {
      if (inverse ? tau_text.empty() : sigma_text.empty()) {
        std::cerr << "usage error: bij-trace needs --sigma (or --inverse "
                     "--tau)\n";
        return 2;
      }
      return cmd_bij_trace(sigma_text, s_text, inverse, tau_text);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
