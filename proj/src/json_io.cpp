#include "lieframe/json_io.hpp"

#include <cstdio>

#include "lieframe/errors.hpp"

namespace lieframe {

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json optional_group(const std::optional<GroupName>& g) { return g ? Json(group_name(*g)) : Json(nullptr); }

Vec vec_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + " must be an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw UsageError(std::string(what) + " must be an array of numbers");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

std::vector<double> array_from_json(const Json& j, const char* what, std::size_t n) {
  Vec v = vec_from_json(j, what);
  if (static_cast<std::size_t>(v.size()) != n)
    throw UsageError(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                     std::to_string(n));
  return std::vector<double>(v.data(), v.data() + v.size());
}

double number(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) throw UsageError(std::string("missing number '") + key + "'");
  return j[key].get<double>();
}

Json sym_json(const SymField& f) { return Json{{"xx", f.xx}, {"xy", f.xy}, {"yy", f.yy}}; }

SymField sym_from_json(const Json& j, const char* what, std::size_t n) {
  if (!j.is_object()) throw UsageError(std::string(what) + " must be an object with xx, xy, yy");
  for (const char* c : {"xx", "xy", "yy"})
    if (!j.contains(c)) throw UsageError(std::string(what) + " lacks component " + c);
  return SymField{array_from_json(j["xx"], what, n), array_from_json(j["xy"], what, n),
                  array_from_json(j["yy"], what, n)};
}

}  // namespace

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json to_json(const FamilySpec& s) {
  Json p = Json::object();
  for (const auto& [k, v] : s.params) p[k] = v;
  return Json{{"family", family_name(s.family)}, {"params", p}};
}

Json to_json(const EtaEinsteinFit& f) {
  return Json{{"lambda2", f.lambda2}, {"kappa", f.kappa}, {"residual", f.residual}, {"admissible", f.admissible}};
}

Json to_json(const TableRowReport& r) {
  Json sample = Json::object();
  for (const auto& [k, v] : r.sample) sample[k] = v;
  Json j{{"sample", sample},
         {"params", to_json(r.spec)},
         {"alpha", to_json(r.alpha)},
         {"orientation", r.orientation},
         {"contact_ok", r.contact_ok},
         {"epsilon", r.epsilon},
         {"fit_ok", r.fit_ok},
         {"lambda2", r.fit.lambda2},
         {"kappa", r.fit.kappa},
         {"fit_residual", r.fit.residual},
         {"sasakian_expected", optional_bool(r.sasakian_expected)},
         {"sasakian_found", optional_bool(r.sasakian_found)},
         {"k_contact_expected", optional_bool(r.k_contact_expected)},
         {"k_contact_found", optional_bool(r.k_contact_found)},
         {"group_expected", optional_group(r.group_expected)},
         {"group_found", optional_group(r.group_found)},
         {"pass", r.pass}};
  if (!r.pass) j["failure"] = r.failure;
  return j;
}

Json to_json(const FactorSpec& f) {
  Json j = to_json(f.spec);
  j["alpha"] = to_json(f.alpha);
  j["orientation"] = f.orientation;
  return j;
}

Json to_json(const ScanHit& h) {
  return Json{{"params", to_json(h.spec)},
              {"orientation", h.orientation},
              {"alpha", to_json(h.alpha)},
              {"fit", to_json(h.fit)}};
}

Json to_json(const Form& w) {
  Json comps = Json::array();
  const auto& ts = w.tuples();
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (w[i] != 0) comps.push_back(Json{{"indices", ts[i]}, {"value", w[i]}});
  return Json{{"degree", w.degree()}, {"dim", w.dim()}, {"components", comps}};
}

Json to_json(const SugraResiduals& r) {
  return Json{{"ricci_H", r.ricci_H},
              {"dH", r.dH},
              {"dstarH", r.dstarH},
              {"normH", r.normH},
              {"symmetric_check", r.symmetric_check},
              {"mixed_block", r.mixed_block},
              {"block_formula", r.block_formula}};
}

Json to_json(const CatalogEntry& e) {
  Json j{{"epsilon_n", e.epsilon_n}, {"row", e.row}, {"l", e.l}, {"lambda", e.lambda}, {"pass", e.pass}};
  if (!e.pass) j["failure"] = e.failure;
  if (e.sample) {
    j["n"] = to_json(e.sample->n);
    j["x"] = to_json(e.sample->x);
  }
  j["residuals"] = to_json(e.residuals);
  return j;
}

Json to_json(const ConstraintResiduals& r) {
  return Json{{"r1", r.r1}, {"r2", r.r2}, {"r3", r.r3}, {"r4", r.r4}};
}

Json to_json(const EvolutionResiduals& r) {
  return Json{{"alpha_flow", r.alpha_flow}, {"ricci_flow", r.ricci_flow}};
}

Json to_json(const SurfaceData& d) {
  const Grid2D& g = d.grid;
  return Json{{"nx", g.nx},
              {"ny", g.ny},
              {"hx", g.hx},
              {"hy", g.hy},
              {"x0", g.x0},
              {"y0", g.y0},
              {"periodic_x", g.periodic_x},
              {"periodic_y", g.periodic_y},
              {"q", sym_json(d.q)},
              {"theta", sym_json(d.theta)},
              {"F", d.F},
              {"ax", d.ax},
              {"ay", d.ay},
              {"beta", d.beta}};
}

FamilySpec family_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw UsageError("factor needs a string 'family'");
  FamilySpec s;
  s.family = family_from_name(j["family"].get<std::string>());
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw UsageError("'params' must be an object");
    for (const auto& [k, v] : j["params"].items()) {
      if (!v.is_number()) throw UsageError("parameter '" + k + "' must be a number");
      s.params[k] = v.get<double>();
    }
  }
  return s;
}

FactorSpec factor_from_json(const Json& j) {
  FactorSpec f;
  f.spec = family_spec_from_json(j);
  if (!j.contains("alpha")) throw UsageError("factor needs 'alpha'");
  f.alpha = vec_from_json(j["alpha"], "alpha");
  if (f.alpha.size() != 3) throw UsageError("alpha must have three components");
  if (j.contains("orientation")) {
    if (!j["orientation"].is_number_integer()) throw UsageError("orientation must be −1, 0 or 1");
    f.orientation = j["orientation"].get<int>();
    if (f.orientation < -1 || f.orientation > 1) throw UsageError("orientation must be −1, 0 or 1");
  }
  return f;
}

CatalogSample solution_config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("x")) throw UsageError("solution config needs 'n' and 'x'");
  CatalogSample s;
  s.n = factor_from_json(j["n"]);
  s.x = factor_from_json(j["x"]);
  s.lambda = number(j, "lambda");
  s.l = number(j, "l");
  return s;
}

SurfaceData surface_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("surface data must be an object");
  SurfaceData d;
  Grid2D& g = d.grid;
  g.nx = static_cast<int>(number(j, "nx"));
  g.ny = static_cast<int>(number(j, "ny"));
  if (g.nx < 3 || g.ny < 3) throw UsageError("grids need at least 3 nodes per axis");
  g.hx = number(j, "hx");
  g.hy = number(j, "hy");
  g.x0 = j.value("x0", 0.0);
  g.y0 = j.value("y0", 0.0);
  g.periodic_x = j.value("periodic_x", true);
  g.periodic_y = j.value("periodic_y", true);
  const std::size_t n = g.size();
  for (const char* key : {"q", "theta", "F", "ax", "ay", "beta"})
    if (!j.contains(key)) throw UsageError(std::string("surface data lacks '") + key + "'");
  d.q = sym_from_json(j["q"], "q", n);
  d.theta = sym_from_json(j["theta"], "theta", n);
  d.F = array_from_json(j["F"], "F", n);
  d.ax = array_from_json(j["ax"], "ax", n);
  d.ay = array_from_json(j["ay"], "ay", n);
  d.beta = array_from_json(j["beta"], "beta", n);
  return d;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace lieframe
