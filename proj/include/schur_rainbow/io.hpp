#pragma once

// JSON encodings used by the CLI.
//
// Family file: {"n": int, "m": int, "sets": [[int, ...], ...]}; k is the
// number of sets and elements are strictly increasing within each set.

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schur_rainbow/bounds.hpp"
#include "schur_rainbow/core.hpp"
#include "schur_rainbow/rainbow.hpp"
#include "schur_rainbow/search.hpp"

namespace schur_rainbow {

using json = nlohmann::ordered_json;

// Parse or schema error in an input document.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return json(static_cast<std::uint64_t>(v));
  }
  return json(v.str());
}

inline json set_to_json(const IntSet& s) { return json(s.elements()); }

inline json family_to_json(const Family& f) {
  json sets = json::array();
  for (const auto& s : f.sets()) sets.push_back(set_to_json(s));
  return json{{"n", f.problem().n()}, {"m", f.problem().m()}, {"sets", std::move(sets)}};
}

// `m_override` replaces the document's m when positive; m may then be absent.
inline Family family_from_json(const json& doc, int m_override = 0) {
  if (!doc.is_object()) throw FormatError("family: expected a JSON object");
  auto int_field = [&](const char* name) {
    if (!doc.contains(name) || !doc[name].is_number_integer()) {
      throw FormatError(std::string("family: missing integer field \"") + name + "\"");
    }
    return doc[name].get<int>();
  };
  const int n = int_field("n");
  const int m = m_override > 0 ? m_override : int_field("m");
  if (!doc.contains("sets") || !doc["sets"].is_array()) {
    throw FormatError("family: missing array field \"sets\"");
  }
  std::vector<IntSet> sets;
  for (const auto& js : doc["sets"]) {
    if (!js.is_array()) throw FormatError("family: each set must be an array");
    IntSet s(n);
    int prev = 0;
    for (const auto& jx : js) {
      if (!jx.is_number_integer()) throw FormatError("family: elements must be integers");
      const int x = jx.get<int>();
      if (x <= prev) throw FormatError("family: elements must be strictly increasing");
      s.insert(x);
      prev = x;
    }
    sets.push_back(std::move(s));
  }
  if (sets.empty()) throw FormatError("family: \"sets\" must not be empty");
  const Problem problem(n, m, static_cast<int>(sets.size()));
  return Family(problem, std::move(sets));
}

inline json witness_to_json(const Witness& w) {
  json sources = json::array();
  for (const auto& e : w.sources) sources.push_back({{"set", e.set_index}, {"value", e.value}});
  return json{{"sources", std::move(sources)},
              {"target", {{"set", w.target.set_index}, {"value", w.target.value}}}};
}

inline json class_to_json(const ExtremalClass& c) {
  json out{{"class", class_name(c)}};
  if (const auto* s = std::get_if<SuffixIntervals>(&c)) out["thresholds"] = s->thresholds;
  return out;
}

inline json report_to_json(const SearchReport& r, bool include_timing) {
  const auto& p = r.problem;
  json out{{"n", p.n()},
           {"m", p.m()},
           {"k", p.k()},
           {"objective", to_string(r.options.objective)},
           {"mode", to_string(r.options.mode)},
           {"allow_empty", r.options.allow_empty},
           {"pruning", r.options.prune},
           {"assume_theorem", r.options.assume_theorem},
           {"optimum", r.optimum ? big_to_json(*r.optimum) : json(nullptr)},
           {"families_examined", r.families_examined},
           {"subtrees_pruned", r.subtrees_pruned}};
  if (r.maximizers) {
    json list = json::array();
    for (const auto& f : *r.maximizers) list.push_back(family_to_json(f)["sets"]);
    out["maximizer_count"] = r.maximizers->size();
    out["maximizers"] = std::move(list);
  }
  if (include_timing) {
    out["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count();
  }
  return out;
}

inline long long elapsed_ms(const CheckRow& row) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(row.report.elapsed).count();
}

inline json row_to_json(const CheckRow& row) {
  const auto& p = row.problem;
  json out{{"n", p.n()},
           {"m", p.m()},
           {"k", p.k()},
           {"mode", to_string(row.report.options.mode)},
           {"objective", to_string(row.report.options.objective)},
           {"allow_empty", row.report.options.allow_empty},
           {"search_optimum",
            row.report.optimum ? big_to_json(*row.report.optimum) : json(nullptr)},
           {"closed_form", big_to_json(row.closed_form)},
           {"match", row.match}};
  if (row.printed_bound) {
    out["interpretation"] = "corrected";
    out["printed_bound"] = big_to_json(*row.printed_bound);
    out["printed_match"] = row.printed_match;
  }
  out["maximizers_match"] = row.maximizers_match ? json(*row.maximizers_match) : json(nullptr);
  out["status"] = row.pass() ? "match" : "mismatch";
  out["elapsed_ms"] = elapsed_ms(row);
  return out;
}

inline std::string csv_header() {
  return "n,m,k,mode,search_optimum,closed_form,match,maximizers_match,elapsed_ms";
}

inline std::string row_to_csv(const CheckRow& row) {
  std::ostringstream os;
  const auto& p = row.problem;
  os << p.n() << ',' << p.m() << ',' << p.k() << ',' << to_string(row.report.options.mode) << ','
     << (row.report.optimum ? row.report.optimum->str() : std::string()) << ','
     << row.closed_form.str() << ',' << (row.match ? "true" : "false") << ','
     << (row.maximizers_match ? (*row.maximizers_match ? "true" : "false") : "") << ','
     << elapsed_ms(row);
  return os.str();
}

}  // namespace schur_rainbow
