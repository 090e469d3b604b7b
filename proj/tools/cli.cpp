#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "lieframe/cauchy.hpp"
#include "lieframe/curvature.hpp"
#include "lieframe/einstein.hpp"
#include "lieframe/errors.hpp"
#include "lieframe/json_io.hpp"
#include "lieframe/numeric.hpp"
#include "lieframe/product6d.hpp"

namespace lieframe::cli {

namespace {

struct RunConfig {
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
  unsigned parallelism = 1;
  std::string output = "-";
  std::string format = "json";
};

struct Report {
  explicit Report(std::string c = {}) : command(std::move(c)) {}
  std::string command;
  bool pass = true;
  Json summary = Json::object();
  Json items = Json::array();
  // Rows of the CSV rendering; items when empty.
  std::vector<Json> csv_records;
};

void flatten(const Json& j, const std::string& prefix, Json& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    out[prefix] = j.dump();
  } else {
    out[prefix] = j;
  }
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_number(v.get<double>());
  return v.dump();
}

std::string render_csv(const Report& r) {
  std::vector<Json> flat;
  const auto& records = r.csv_records.empty() ? std::vector<Json>(r.items.begin(), r.items.end()) : r.csv_records;
  std::vector<std::string> header;
  for (const auto& rec : records) {
    Json f = Json::object();
    flatten(rec, "", f);
    for (const auto& [k, v] : f.items())
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    flat.push_back(std::move(f));
  }
  std::string out = csv_row(header);
  for (const auto& f : flat) {
    std::vector<std::string> fields;
    for (const auto& h : header) fields.push_back(f.contains(h) ? scalar_text(f[h]) : "");
    out += csv_row(fields);
  }
  return out;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "csv") return render_csv(r);
  Json j{{"command", r.command}, {"pass", r.pass}};
  if (!r.summary.empty()) j["summary"] = r.summary;
  j["items"] = r.items;
  return j.dump(2) + "\n";
}

Report run_oracle(const RunConfig& cfg, std::size_t samples) {
  Report r{"oracle"};
  OracleReport o = closed_form_oracle(samples, cfg.seed, cfg.parallelism);
  bool ok = o.max_ricci_error <= cfg.tol && o.max_scalar_error <= cfg.tol;
  r.pass = ok;
  r.items.push_back(Json{{"samples", o.samples},
                         {"seed", cfg.seed},
                         {"max_ricci_error", o.max_ricci_error},
                         {"max_scalar_error", o.max_scalar_error},
                         {"worst", to_json(o.worst)},
                         {"pass", ok}});
  return r;
}

Report run_verify_tables(const RunConfig& cfg, const std::vector<std::string>& theorems) {
  Report r{"verify-tables"};
  std::vector<Classification> tables;
  if (theorems.empty()) {
    tables = all_classifications();
  } else {
    for (const auto& t : theorems) tables.push_back(classification_from_id(t));
  }
  for (Classification c : tables) {
    const std::vector<RowInstance> insts = table_instances(c);
    std::vector<TableRowReport> reports(insts.size());
    parallel_for(insts.size(), cfg.parallelism, [&](std::size_t i) { reports[i] = verify_table_row(insts[i], cfg.tol); });
    Json rows = Json::array();
    bool table_ok = true;
    for (const auto& name : table_rows(c)) {
      Json instances = Json::array();
      bool row_ok = true;
      for (const auto& rep : reports) {
        if (rep.row != name) continue;
        row_ok = row_ok && rep.pass;
        instances.push_back(to_json(rep));
        Json rec = to_json(rep);
        rec.erase("params");
        Json flat{{"theorem", classification_id(c)}, {"row", name}};
        flat["family"] = family_name(rep.spec.family);
        for (const auto& [k, v] : rep.spec.params) flat["param." + k] = v;
        for (const auto& [k, v] : rec.items()) flat[k] = v;
        r.csv_records.push_back(std::move(flat));
      }
      table_ok = table_ok && row_ok;
      rows.push_back(Json{{"row", name}, {"pass", row_ok}, {"instances", instances}});
    }
    r.pass = r.pass && table_ok;
    r.items.push_back(Json{{"theorem", classification_id(c)}, {"pass", table_ok}, {"rows", rows}});
  }
  return r;
}

Report run_scan(const RunConfig& cfg, const std::string& family, int epsilon, const ScanGrid& grid,
                bool expect_none) {
  Report r{"scan"};
  if (epsilon < -1 || epsilon > 1) throw UsageError("--epsilon must be -1, 0 or 1");
  if (grid.points < 2 || !(grid.hi > grid.lo)) throw UsageError("scan grid needs --grid ≥ 2 and --hi > --lo");
  ScanResult s = scan_family(family_from_name(family), grid, epsilon, cfg.tol, cfg.parallelism);
  r.summary = Json{{"family", family},
                   {"epsilon", epsilon},
                   {"grid", Json{{"lo", grid.lo}, {"hi", grid.hi}, {"points", grid.points}}},
                   {"samples", s.samples},
                   {"contact_structures", s.contact.size()},
                   {"hits", s.hits.size()}};
  for (const auto& h : s.hits) r.items.push_back(to_json(h));
  r.pass = !expect_none || s.hits.empty();
  return r;
}

Json solution_json(const CatalogSample& sample, const ProductSolution& sol, const SugraResiduals& res, bool ok) {
  return Json{{"n", to_json(sample.n)},
              {"x", to_json(sample.x)},
              {"lambda", sample.lambda},
              {"l", sample.l},
              {"epsilon_n", sol.n_struct.epsilon},
              {"n_fit", to_json(sol.n_fit)},
              {"x_fit", to_json(sol.x_fit)},
              {"H", to_json(sol.H)},
              {"residuals", to_json(res)},
              {"pass", ok}};
}

Report run_solution(const RunConfig& cfg, const std::string& preset_name, const std::string& config_path) {
  Report r{"solution"};
  if (preset_name.empty() == config_path.empty()) throw UsageError("give exactly one of --preset or --config");
  CatalogSample sample;
  if (!preset_name.empty()) {
    sample = preset(preset_name);
  } else {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot read config '" + config_path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    sample = solution_config_from_json(j);
  }
  try {
    ContactStructure n = make_factor(sample.n, cfg.tol);
    ContactStructure x = make_factor(sample.x, cfg.tol);
    ProductSolution sol = build_solution(n, x, sample.lambda, sample.l, cfg.tol);
    SugraResiduals res = verify_supergravity(sol);
    bool ok = res.solves(cfg.tol) && res.symmetric_check <= cfg.tol && res.block_formula <= cfg.tol;
    r.pass = ok;
    r.items.push_back(solution_json(sample, sol, res, ok));
    Json rec = r.items.back();
    rec.erase("H");
    r.csv_records.push_back(rec);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    r.pass = false;
    r.items.push_back(Json{{"n", to_json(sample.n)}, {"x", to_json(sample.x)}, {"lambda", sample.lambda},
                           {"l", sample.l}, {"pass", false}, {"failure", e.what()}});
  }
  return r;
}

Report run_catalog(const RunConfig& cfg, int epsilon_n, const std::vector<double>& ls) {
  Report r{"catalog"};
  for (const auto& e : catalog(epsilon_n, ls, cfg.tol, cfg.parallelism)) {
    r.pass = r.pass && e.pass;
    r.items.push_back(to_json(e));
  }
  if (r.items.empty()) {
    r.pass = false;
    r.summary = Json{{"failure", "no catalog row admits the requested l samples"}};
  }
  return r;
}

struct CauchyOptions {
  std::string example;
  int nx = 32, ny = 32;
  double dt = 0.05;
  double l1 = 1, l2 = 0.5, f0 = 1;
};

Json level_json(const CauchyOptions& o, const ConstraintResiduals& c, const std::optional<EvolutionResiduals>& e) {
  Json j{{"nx", o.nx}, {"ny", o.ny}, {"r1", c.r1}, {"r2", c.r2}, {"r3", c.r3}, {"r4", c.r4}};
  if (e) {
    j["dt"] = o.dt;
    j["alpha_flow"] = e->alpha_flow;
    j["ricci_flow"] = e->ricci_flow;
  }
  return j;
}

Report run_cauchy(const RunConfig& cfg, const CauchyOptions& opts) {
  Report r{"cauchy"};
  if (opts.example != "flat-para" && opts.example != "null-isothermal")
    throw UsageError("--example must be flat-para or null-isothermal");
  if (opts.nx < 5 || opts.ny < 5 || !(opts.dt > 0)) throw UsageError("--nx, --ny ≥ 5 and --dt > 0 required");
  std::vector<Json> levels;
  for (int level = 0; level < 2; ++level) {
    CauchyOptions o = opts;
    o.nx = opts.nx << level;
    o.ny = opts.ny << level;
    o.dt = opts.dt / (1 << level);
    if (opts.example == "flat-para") {
      std::vector<double> times;
      for (int k = -2; k <= 2; ++k) times.push_back(0.5 + k * o.dt);
      SurfaceSequence s = example_flat_paracontact(periodic_box(o.nx, o.ny, 1, 1), times, opts.l1, opts.l2);
      ConstraintResiduals c = constraint_residuals(s.slices[2], 1, 0, 0, cfg.parallelism);
      EvolutionResiduals e = evolution_residuals(s, 1, 0, 0, cfg.parallelism);
      Json j = level_json(o, c, e);
      j["epsilon_recovered"] = recover_epsilon(s.slices[2]).mean;
      levels.push_back(j);
    } else {
      Grid2D g;
      g.nx = o.nx;
      g.ny = o.ny;
      g.hx = 1.0 / (o.nx - 1);
      g.hy = 1.0 / o.ny;
      SurfaceData d = example_null_isothermal(g, opts.f0);
      Json j = level_json(o, constraint_residuals(d, 0, 0, 0, cfg.parallelism), std::nullopt);
      j["epsilon_recovered"] = recover_epsilon(d).mean;
      levels.push_back(j);
    }
  }
  Json ratios = Json::object();
  bool ok = true;
  for (const char* key : {"r1", "r2", "r3", "r4", "alpha_flow", "ricci_flow"}) {
    if (!levels[0].contains(key)) continue;
    double coarse = levels[0][key].get<double>(), fine = levels[1][key].get<double>();
    if (coarse <= cfg.tol && fine <= cfg.tol) {
      ratios[key] = "exact";
      continue;
    }
    double ratio = fine > 0 ? coarse / fine : INFINITY;
    ratios[key] = ratio;
    ok = ok && ratio >= 3.5;
  }
  r.pass = ok;
  for (auto& l : levels) r.items.push_back(l);
  r.summary = Json{{"example", opts.example}, {"convergence_ratio", ratios}, {"pass", ok}};
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Left-invariant ε-contact structures on three-dimensional Lie groups and six-dimensional products"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.tol = tolerance();
  app.add_option("--tol", cfg.tol, "Residual tolerance (default from LIEFRAME_TOL or 1e-9)");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--parallelism", cfg.parallelism, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--output", cfg.output, "Report path, '-' for standard output");
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  std::size_t samples = 1000;
  auto* oracle = app.add_subcommand("oracle", "Closed-form Ricci tensor against the generic pipeline");
  oracle->add_option("--samples", samples, "Number of random family members")->check(CLI::PositiveNumber);

  std::vector<std::string> theorems;
  auto* verify = app.add_subcommand("verify-tables", "Check every classification table row");
  verify->add_option("--theorem", theorems,
                     "Table: timelike, para, null, riemannian, null-contact, null-sasakian, null-k-contact or its numbered id");

  std::string family;
  int epsilon = 0;
  ScanGrid grid;
  bool expect_none = false;
  auto* scan = app.add_subcommand("scan", "Grid scan of a family for εη-Einstein contact structures");
  scan->add_option("--family", family, "g1 … g7, riemannian_unimodular, riemannian_nonunimodular")->required();
  scan->add_option("--epsilon", epsilon, "Causal type of the Reeb field")->required();
  scan->add_option("--grid", grid.points, "Points per parameter");
  scan->add_option("--lo", grid.lo, "Lower parameter bound");
  scan->add_option("--hi", grid.hi, "Upper parameter bound");
  scan->add_flag("--expect-none", expect_none, "Fail when any εη-Einstein hit is found");

  std::string preset_name, config_path;
  auto* solution = app.add_subcommand("solution", "Build and verify a six-dimensional product solution");
  solution->add_option("--preset", preset_name, "Named configuration (ads3xs3)");
  solution->add_option("--config", config_path, "JSON configuration file");

  int epsilon_n = 0;
  std::vector<double> l_samples;
  auto* cat = app.add_subcommand("catalog", "Verify the product solution catalog for one causal type");
  cat->add_option("--epsilon-n", epsilon_n, "Causal type of the Lorentzian factor")
      ->required()
      ->check(CLI::Range(-1, 1));
  cat->add_option("--l-samples", l_samples, "Values of l (row defaults when omitted)")->delimiter(',');

  CauchyOptions copts;
  auto* cauchy = app.add_subcommand("cauchy", "Finite-difference residuals of the closed-form Cauchy data");
  cauchy->add_option("--example", copts.example, "flat-para or null-isothermal")->required();
  cauchy->add_option("--nx", copts.nx, "Coarse grid nodes along x");
  cauchy->add_option("--ny", copts.ny, "Coarse grid nodes along y");
  cauchy->add_option("--dt", copts.dt, "Coarse time step");
  cauchy->add_option("--l1", copts.l1, "Flat example constant l1");
  cauchy->add_option("--l2", copts.l2, "Flat example constant l2");
  cauchy->add_option("--f0", copts.f0, "Isothermal example constant F0");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
    set_tolerance(cfg.tol);
    Report report;
    if (*oracle) {
      report = run_oracle(cfg, samples);
    } else if (*verify) {
      report = run_verify_tables(cfg, theorems);
    } else if (*scan) {
      report = run_scan(cfg, family, epsilon, grid, expect_none);
    } else if (*solution) {
      report = run_solution(cfg, preset_name, config_path);
    } else if (*cat) {
      report = run_catalog(cfg, epsilon_n, l_samples);
    } else {
      report = run_cauchy(cfg, copts);
    }
    const std::string text = render(report, cfg.format);
    if (cfg.output == "-") {
      out << text;
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + cfg.output + "'");
      f << text;
    }
    return report.pass ? kPass : kCheckFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace lieframe::cli
