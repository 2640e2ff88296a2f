#pragma once

#include <string>

#include <json.hpp>

#include "ecd/analysis.hpp"
#include "ecd/design.hpp"
#include "ecd/ec.hpp"
#include "ecd/graph.hpp"
#include "ecd/rational.hpp"

namespace ecd {

/// Machine-readable result document. Key order is insertion order, which the
/// command layer keeps fixed, so serialized reports are stable and diffable.
using Report = nlohmann::ordered_json;

namespace detail {

inline bool is_scalar_array(const Report& a) {
  for (const auto& e : a)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

inline std::string inline_value(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void human_render_into(const Report& r, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& it : r.items()) {
    const Report& val = it.value();
    if (val.is_object() && !val.empty()) {
      out += pad + it.key() + ":\n";
      human_render_into(val, out, indent + 1);
    } else if (val.is_array() && !val.empty() && !is_scalar_array(val)) {
      out += pad + it.key() + ":\n";
      for (const auto& e : val) out += pad + "  - " + e.dump() + "\n";
    } else {
      out += pad + it.key() + ": " + inline_value(val) + "\n";
    }
  }
}

}  // namespace detail

/// Key/value text rendering of a report for terminal output.
inline std::string human_render(const Report& r) {
  std::string out;
  detail::human_render_into(r, out, 0);
  return out;
}

inline Report to_report(const Rational& q) { return q.str(); }

inline Report to_report(const ValidationReport& rep) {
  Report r;
  r["ok"] = rep.ok;
  Report viols = Report::array();
  for (const auto& v : rep.violations) {
    Report item;
    item["kind"] = v.kind;
    item["subset"] = v.subset;
    item["observed"] = v.observed;
    item["expected"] = v.expected;
    viols.push_back(std::move(item));
  }
  r["violations"] = std::move(viols);
  r["truncated"] = rep.truncated;
  Report derived;
  for (const auto& [key, val] : rep.derived) derived[key] = to_report(val);
  r["derived"] = std::move(derived);
  return r;
}

inline Report to_report(const ECResult& res) {
  Report r;
  r["holds"] = res.holds;
  if (res.witness_failure) {
    Report w;
    w["A"] = res.witness_failure->first;
    w["B"] = res.witness_failure->second;
    r["witness_failure"] = std::move(w);
  } else {
    r["witness_failure"] = nullptr;
  }
  r["checked_pairs"] = res.checked_pairs;
  return r;
}

inline Report to_report(const DegreeStats& s) {
  Report r;
  r["n"] = s.n;
  r["min_degree"] = s.min_degree;
  r["max_degree"] = s.max_degree;
  r["is_connected"] = s.is_connected;
  return r;
}

inline Report to_report(const IntersectionProfile& p) {
  Report r;
  r["m"] = p.m;
  r["alphas"] = p.alphas;
  return r;
}

inline Report to_report(const ConditionReport& rep) {
  Report r;
  r["v"] = rep.v;
  r["k"] = rep.k;
  r["lambda"] = rep.lambda;
  r["n"] = rep.n;
  Report recs = Report::array();
  for (const auto& rec : rep.records) {
    Report item;
    item["name"] = rec.name;
    item["relation"] = rec.relation;
    item["lhs"] = rec.lhs.str();
    item["rhs"] = rec.rhs.str();
    item["satisfied"] = rec.satisfied;
    recs.push_back(std::move(item));
  }
  r["records"] = std::move(recs);
  r["all_satisfied"] = rep.all_satisfied();
  return r;
}

}  // namespace ecd
