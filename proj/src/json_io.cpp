#include "degen/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace degen {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const Series& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.str());
  Json out;
  out["order"] = s.order();
  out["coefficients"] = std::move(coeffs);
  return out;
}

Json to_json(const StirlingTable& table) {
  Json out;
  out["kind"] = to_string(table.kind);
  out["lambda"] = table.lambda ? Json(table.lambda->str()) : Json(nullptr);
  out["n_max"] = table.n_max;
  Json rows = Json::array();
  for (int n = 0; n <= table.n_max; ++n) {
    Json row = Json::array();
    for (int k = 0; k <= n; ++k) row.push_back(table(n, k).str());
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string to_csv(const StirlingTable& table) {
  std::ostringstream os;
  os << "n,k,value\n";
  for (int n = 0; n <= table.n_max; ++n) {
    for (int k = 0; k <= n; ++k) os << n << ',' << k << ',' << table(n, k) << '\n';
  }
  return os.str();
}

namespace {

Json point_json(const EvalPoint& p) {
  Json out = Json::object();
  for (const auto& [name, value] : p.indices) out[name] = value;
  for (const auto& [name, value] : p.values) out[name] = value.str();
  return out;
}

}  // namespace

Json to_json(const Witness& w) {
  Json out;
  out["point"] = point_json(w.point);
  out["lhs"] = w.lhs.str();
  out["rhs"] = w.rhs.str();
  return out;
}

Json to_json(const IdentityReport& r) {
  Json out;
  out["theorem"] = to_string(r.theorem);
  out["statement"] = r.statement;
  out["law"] = r.law;
  out["n_max"] = r.n_max;
  out["index_range"] = r.index_range;
  out["verdict"] = to_string(r.verdict);
  if (r.perturbation) out["perturbation"] = to_string(*r.perturbation);

  Json grid = Json::array();
  for (const auto& g : r.grid) {
    Json v;
    v["name"] = g.name;
    v["degree_bound"] = g.degree_bound;
    Json nodes = Json::array();
    for (const auto& n : g.nodes) nodes.push_back(n.str());
    v["nodes"] = std::move(nodes);
    if (!g.excluded.empty()) {
      Json ex = Json::array();
      for (const auto& e : g.excluded) ex.push_back(e.str());
      v["excluded"] = std::move(ex);
    }
    grid.push_back(std::move(v));
  }
  out["grid"] = std::move(grid);
  out["nodes_evaluated"] = r.nodes_evaluated;

  Json variants = Json::array();
  for (const auto& v : r.variants) {
    Json j;
    j["name"] = v.name;
    j["role"] = to_string(v.role);
    j["description"] = v.description;
    j["matched"] = v.matched;
    j["checks"] = v.checks;
    j["mismatches"] = v.mismatches;
    if (v.skipped != 0) j["skipped"] = v.skipped;
    if (!v.witnesses.empty()) {
      Json ws = Json::array();
      for (const auto& w : v.witnesses) ws.push_back(to_json(w));
      j["witnesses"] = std::move(ws);
    }
    variants.push_back(std::move(j));
  }
  out["variants"] = std::move(variants);

  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  out["witnesses"] = std::move(ws);
  out["notes"] = r.notes;
  return out;
}

Json to_json(std::span<const IdentityReport> reports) {
  Json out;
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    if (r.passed()) ++passed;
  }
  out["reports"] = std::move(list);
  out["passed"] = passed;
  out["failed"] = reports.size() - passed;
  return out;
}

}  // namespace degen
