// schur-rainbow: command-line front end for rainbow-free families of
// x_1 + ... + x_m = x_{m+1}.
//
// Exit status: 0 success, 1 theorem mismatch or rainbow solution found,
// 2 usage/validation error, 3 search budget refused.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "schur_rainbow/compress.hpp"
#include "schur_rainbow/io.hpp"
#include "schur_rainbow/schur_rainbow.hpp"

namespace sr = schur_rainbow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

bool g_pretty = false;

void emit(const sr::json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << '\n'; }

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SCHUR_RAINBOW_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw sr::DomainError(std::string("SCHUR_RAINBOW_BUDGET is not an integer: ") + env);
    }
  }
  return sr::kDefaultBudget;
}

sr::Family read_family(const std::string& path, int m_override) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw sr::FormatError("cannot open family file " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  sr::json doc;
  try {
    doc = sr::json::parse(text);
  } catch (const sr::json::parse_error& e) {
    throw sr::FormatError(std::string("family file is not valid JSON: ") + e.what());
  }
  return sr::family_from_json(doc, m_override);
}

sr::Objective parse_objective(const std::string& s) {
  return s == "product" ? sr::Objective::Product : sr::Objective::Sum;
}

sr::Mode parse_mode(const std::string& s) { return s == "nested" ? sr::Mode::Nested : sr::Mode::Full; }

struct SearchFlags {
  std::string objective = "sum";
  std::string mode = "full";
  bool allow_empty = false;
  bool enumerate_all = false;
  int workers = 1;
  std::uint64_t budget = 0;
  bool no_prune = false;
  bool assume_theorem = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--objective", objective, "sum or product")
        ->check(CLI::IsMember({"sum", "product"}));
    cmd->add_option("--mode", mode, "full or nested")->check(CLI::IsMember({"full", "nested"}));
    cmd->add_flag("--allow-empty", allow_empty, "permit empty sets");
    cmd->add_flag("--enumerate-all", enumerate_all, "list every maximizer multiset");
    cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", budget,
                    "maximum search-space size (default $SCHUR_RAINBOW_BUDGET or 2^28)");
    cmd->add_flag("--no-prune", no_prune, "visit every family");
    cmd->add_flag("--assume-theorem", assume_theorem,
                  "prune with the closed-form optimum (not for verification)");
  }

  sr::SearchOptions options() const {
    sr::SearchOptions o;
    o.objective = parse_objective(objective);
    o.mode = parse_mode(mode);
    o.allow_empty = allow_empty;
    o.enumerate_all = enumerate_all;
    o.workers = workers;
    o.budget = budget != 0 ? budget : default_budget();
    o.prune = !no_prune;
    o.assume_theorem = assume_theorem;
    return o;
  }
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw sr::DomainError("not an integer list: " + s);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow-free families for x_1 + ... + x_m = x_{m+1}"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "indent JSON output");

  int n = 0, m = 0, k = 0;

  auto* bound = app.add_subcommand("bound", "closed-form optimum");
  std::string bound_objective = "sum";
  std::string interpretation = "corrected";
  bound->add_option("--n", n)->required();
  bound->add_option("--m", m)->required();
  bound->add_option("--k", k)->required();
  bound->add_option("--objective", bound_objective)->check(CLI::IsMember({"sum", "product"}));
  bound->add_option("--interpretation", interpretation, "product exponent reading")
      ->check(CLI::IsMember({"printed", "corrected"}));

  auto* construct = app.add_subcommand("construct", "build an extremal family");
  std::string cls;
  std::string thresholds;
  construct->add_option("--n", n)->required();
  construct->add_option("--m", m)->required();
  construct->add_option("--k", k)->required();
  construct->add_option("--class", cls)
      ->required()
      ->check(CLI::IsMember({"suffix", "special", "odd", "trivial"}));
  construct->add_option("--thresholds", thresholds, "t1,...,tm for the suffix class");

  auto* verify = app.add_subcommand("verify", "check a family for a rainbow solution");
  std::string family_path;
  int verify_m = 0;
  verify->add_option("--family", family_path, "family JSON file, or - for stdin")->required();
  verify->add_option("--m", verify_m, "number of summands (overrides the file)");

  auto* classify = app.add_subcommand("classify", "match a family against the extremal classes");
  classify->add_option("--family", family_path, "family JSON file, or - for stdin")->required();

  auto* compress = app.add_subcommand("compress", "nested multiplicity layers of a family");
  compress->add_option("--family", family_path, "family JSON file, or - for stdin")->required();

  auto* search = app.add_subcommand("search", "exhaustive optimum");
  SearchFlags search_flags;
  bool timing = false;
  search->add_option("--n", n)->required();
  search->add_option("--m", m)->required();
  search->add_option("--k", k)->required();
  search_flags.add_to(search);
  search->add_flag("--timing", timing, "include elapsed_ms in the report");

  auto* check = app.add_subcommand("check-theorem", "search vs closed form over a range of n");
  SearchFlags check_flags;
  int n_from = 0, n_to = 0;
  bool csv = false;
  check->add_option("--m", m)->required();
  check->add_option("--k", k)->required();
  check->add_option("--n-from", n_from)->required();
  check->add_option("--n-to", n_to)->required();
  check_flags.add_to(check);
  check->add_flag("--csv", csv, "CSV instead of JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bound) {
      const sr::Problem p(n, m, k);
      sr::json out{{"n", n}, {"m", m}, {"k", k}, {"q", p.q()}, {"r", p.r()}};
      if (bound_objective == "product") {
        const auto interp = interpretation == "printed" ? sr::ProductInterpretation::Printed
                                                        : sr::ProductInterpretation::Corrected;
        out["objective"] = "product";
        out["interpretation"] = interpretation;
        out["bound"] = sr::big_to_json(sr::product_bound(p, interp));
        out["note"] = interp == sr::ProductInterpretation::Corrected
                          ? "exponents m-(r+1) and k-m+(r+1); the printed reading uses "
                            "n-m+(r+1), which does not total k"
                          : "exponents m-(r+1) and n-m+(r+1) as printed; they do not total k";
      } else {
        out["bound"] = sr::sum_bound(p);
      }
      emit(out);
      return kExitOk;
    }

    if (*construct) {
      const sr::Problem p(n, m, k);
      sr::ExtremalClass c = sr::TrivialWithEmpty{};
      if (cls == "suffix") {
        if (thresholds.empty()) throw sr::DomainError("--class suffix needs --thresholds");
        auto ts = parse_int_list(thresholds);
        std::sort(ts.begin(), ts.end());
        c = sr::SuffixIntervals{ts};
      } else if (cls == "special") {
        c = sr::SpecialEven{};
      } else if (cls == "odd") {
        c = sr::OddsAll{};
      }
      emit(sr::family_to_json(sr::construct_extremal(p, c)));
      return kExitOk;
    }

    if (*verify) {
      const auto f = read_family(family_path, verify_m);
      const auto w = sr::find_rainbow(f);
      sr::json out{{"rainbow_free", !w.has_value()}};
      if (w) out["witness"] = sr::witness_to_json(*w);
      emit(out);
      return w ? kExitMismatch : kExitOk;
    }

    if (*classify) {
      const auto f = read_family(family_path, 0);
      sr::json out = sr::json::array();
      for (const auto& c : sr::classify(f)) out.push_back(sr::class_to_json(c));
      emit(out);
      return kExitOk;
    }

    if (*compress) {
      emit(sr::family_to_json(sr::compress(read_family(family_path, 0))));
      return kExitOk;
    }

    if (*search) {
      const auto report = sr::search_max(sr::Problem(n, m, k), search_flags.options());
      emit(sr::report_to_json(report, timing));
      return kExitOk;
    }

    if (*check) {
      const auto rows =
          sr::check_theorem({m, k, n_from, n_to}, check_flags.options());
      bool all = true;
      if (csv) std::cout << sr::csv_header() << '\n';
      for (const auto& row : rows) {
        all = all && row.pass();
        if (csv) {
          std::cout << sr::row_to_csv(row) << '\n';
        } else {
          emit(sr::row_to_json(row));
        }
      }
      return all ? kExitOk : kExitMismatch;
    }
  } catch (const sr::BudgetExceeded& e) {
    std::cerr << sr::json{{"error", "budget"},
                          {"message", e.what()},
                          {"required_budget", sr::big_to_json(e.required)}}
                     .dump()
              << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << sr::json{{"error", "invalid"}, {"message", e.what()}}.dump() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
