#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#include "hamcert/certify.hpp"
#include "hamcert/closure.hpp"
#include "hamcert/graph6.hpp"
#include "hamcert/hamilton.hpp"
#include "hamcert/harness.hpp"
#include "hamcert/spectral.hpp"

// JSON views of the result types. Floating-point values are rounded to 12
// significant digits.

namespace hamcert {

using Json = nlohmann::json;

inline double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline Json rational_json(const Rational& r) {
  return Json{{"num", r.num()}, {"den", r.den()}, {"value", round12(r.to_double())}};
}

inline Json edge_list_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back(Json::array({u, v}));
  return out;
}

inline Json to_json(const SpectralSummary& s) {
  Json avg = Json::array();
  for (const Rational& r : s.avg_neighbor) avg.push_back(rational_json(r));
  return Json{{"mu", round12(s.mu)},
              {"gamma", round12(s.gamma)},
              {"edge_count", s.edge_count},
              {"degrees", s.degrees},
              {"avg_neighbor", avg},
              {"degree_square_sum", s.degree_square_sum},
              {"max_d_plus_m", rational_json(s.max_d_plus_m)}};
}

inline Json to_json(const BoundRecord& b) {
  return Json{{"bound", b.bound},
              {"lhs", round12(b.lhs)},
              {"rhs", round12(b.rhs)},
              {"slack", round12(b.slack)},
              {"holds", b.holds},
              {"equality", b.equality},
              {"equality_expected", b.equality_expected}};
}

inline Json to_json(const CriterionVerdict& v) {
  return Json{{"criterion", to_string(v.criterion)},
              {"lhs", round12(v.lhs)},
              {"threshold", round12(v.threshold)},
              {"status", to_string(v.status)},
              {"predicted", to_string(v.predicted)},
              {"exception", v.exception ? Json(to_string(*v.exception)) : Json(nullptr)}};
}

inline Json to_json(const HamiltonProfile& p) {
  Json out{{"has_path", p.has_path},
           {"has_cycle", p.has_cycle},
           {"hamilton_connected", p.hamilton_connected},
           {"witness_path", p.witness_path ? Json(*p.witness_path) : Json(nullptr)},
           {"failing_pair", nullptr}};
  if (p.failing_pair) out["failing_pair"] = Json::array({p.failing_pair->first, p.failing_pair->second});
  return out;
}

inline Json to_json(const ClosureResult& c) {
  return Json{{"k", c.k},
              {"graph6", write_graph6(c.graph)},
              {"edge_count", c.graph.edge_count()},
              {"added", edge_list_json(c.added)}};
}

inline Json to_json(const ValidationReport& r) {
  return Json{{"criterion", r.criterion},
              {"orders", r.orders},
              {"mode", to_string(r.mode)},
              {"graphs_checked", r.graphs_checked},
              {"predictions_issued", r.predictions_issued},
              {"exceptions_matched", r.exceptions_matched},
              {"violations", r.violations},
              {"boundary_cases", r.boundary_cases},
              {"elapsed_ms", r.elapsed_ms}};
}

inline Json to_json(const RemarkRow& row) {
  return Json{{"r", row.r},
              {"s", row.s},
              {"n", row.n},
              {"f_at_n_minus_2", row.f_at_n_minus_2},
              {"g_at_2n_minus_4", row.g_at_2n_minus_4},
              {"mu", round12(row.mu)},
              {"gamma", round12(row.gamma)},
              {"f_root", round12(row.f_root)},
              {"g_root", round12(row.g_root)},
              {"mu_below", row.mu_below},
              {"gamma_above", row.gamma_above},
              {"oracle_has_cycle",
               row.oracle_has_cycle ? Json(*row.oracle_has_cycle) : Json(nullptr)}};
}

inline Json to_json(const RemarkScan& scan) {
  Json rows = Json::array();
  for (const auto& row : scan.rows) rows.push_back(to_json(row));
  return Json{{"rows", rows}, {"notes", scan.notes}};
}

}  // namespace hamcert
