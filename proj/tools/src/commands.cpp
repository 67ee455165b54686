#include <fjsa/cli.hpp>

#include <fjsa/homology.hpp>
#include <fjsa/serialize.hpp>
#include <fjsa/solver.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>

namespace fjsa::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  Json doc;
  Table table;
  std::vector<std::string> notes;
};

const char* format_name(Format f) { return f == Format::Json ? "json" : (f == Format::Csv ? "csv" : "pretty"); }

Json config_json(const RunConfig& cfg) {
  Json c;
  c["command"] = cfg.command;
  c["d1"] = cfg.d1;
  c["d2"] = cfg.d2;
  if (cfg.command == "solve" || cfg.command == "solve-ab" || cfg.command == "verify") c["order"] = cfg.order;
  if (cfg.command == "oracle" || cfg.command == "verify") c["max_degree"] = cfg.max_degree;
  if (cfg.command == "homology") {
    c["r_max"] = cfg.r_max;
    c["d_max"] = cfg.d_max;
    c["chain_budget"] = cfg.chain_budget;
    if (cfg.ungraded_signs) c["ungraded_signs"] = true;
  }
  if (cfg.command == "oracle" || cfg.command == "verify" || cfg.command == "homology") c["budget"] = cfg.budget;
  c["format"] = format_name(cfg.format);
  return c;
}

Json gdim_json(const GDim& g) { return Json::array({g.even.get_str(), g.odd.get_str()}); }

Json gdims_json(const std::vector<GDim>& v) {
  Json out = Json::array();
  for (const auto& g : v) out.push_back(gdim_json(g));
  return out;
}

Output start(const RunConfig& cfg) {
  Output o;
  o.doc["format_version"] = kFormatVersion;
  o.doc["config"] = config_json(cfg);
  return o;
}

std::string config_line(const RunConfig& cfg) {
  std::string s = "fjsa " + cfg.command;
  const Json c = config_json(cfg);
  for (const auto& [k, v] : c.items())
    if (k != "command" && k != "format") s += " " + k + "=" + v.dump();
  return s + " (format version " + std::to_string(kFormatVersion) + ")";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void render(const RunConfig& cfg, const Output& o, std::ostream& out) {
  switch (cfg.format) {
    case Format::Json:
      out << o.doc.dump(2) << "\n";
      return;
    case Format::Csv: {
      out << "# " << config_line(cfg) << "\n";
      for (const auto& n : o.notes) out << "# " << n << "\n";
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << "\n";
      };
      line(o.table.columns);
      for (const auto& r : o.table.rows) line(r);
      return;
    }
    case Format::Pretty: {
      out << config_line(cfg) << "\n";
      std::vector<std::size_t> width(o.table.columns.size());
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = o.table.columns[i].size();
      for (const auto& r : o.table.rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
      auto line = [&](const std::vector<std::string>& cells) {
        out << " ";
        for (std::size_t i = 0; i < cells.size(); ++i) out << " " << std::setw(static_cast<int>(width[i])) << cells[i];
        out << "\n";
      };
      line(o.table.columns);
      for (const auto& r : o.table.rows) line(r);
      for (const auto& n : o.notes) out << n << "\n";
      return;
    }
  }
}

FrontierBuild load_algebra(const RunConfig& cfg, int n, std::ostream& err) {
  if (!cfg.use_cache) {
    JordanBuildOptions opts;
    opts.entry_budget = cfg.budget;
    return build_free_jordan_frontier(cfg.d1, cfg.d2, n, opts);
  }
  const Cache cache(cfg.cache_dir.value_or(Cache::default_dir()));
  CachedBuild cb = cached_free_jordan(cache, cfg.d1, cfg.d2, n, cfg.budget);
  err << (cb.cache_hit ? "cache hit: " : "cache miss: ") << cache.path_for(jordan_cache_key(cfg.d1, cfg.d2, n, cfg.budget)).string()
      << "\n";
  if (!cb.store_error.empty()) err << "warning: cache not written: " << cb.store_error << "\n";
  return std::move(cb.build);
}

std::vector<GDim> bs_dims(const BsAlgebra& bs) {
  std::vector<GDim> out;
  for (int n = 1; n <= bs.max_degree(); ++n) out.push_back(bs.component(n).gdim());
  return out;
}

std::string residue_note(int ok_through) {
  return "residue vanishes mod z^" + std::to_string(ok_through + 1);
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const SolveReport r = solve_E(cfg.d1, cfg.d2, cfg.order);
  Output o = start(cfg);
  o.doc["a"] = gdims_json(r.a);
  o.doc["residual_ok_through"] = r.residual_order;
  o.table.columns = {"n", "a_even", "a_odd"};
  for (std::size_t n = 0; n < r.a.size(); ++n)
    o.table.rows.push_back({std::to_string(n + 1), r.a[n].even.get_str(), r.a[n].odd.get_str()});
  o.notes.push_back(residue_note(r.residual_order));
  render(cfg, o, out);
  return r.residual_order >= cfg.order ? kOk : kInvariant;
}

int cmd_solve_ab(const RunConfig& cfg, std::ostream& out) {
  const SolveReport r = solve_phi_system(cfg.d1, cfg.d2, cfg.order);
  Output o = start(cfg);
  o.doc["a"] = gdims_json(r.a);
  o.doc["b"] = gdims_json(*r.b);
  o.doc["residual_ok_through"] = r.residual_order;
  o.table.columns = {"n", "a_even", "a_odd", "b_even", "b_odd"};
  for (std::size_t n = 0; n < r.a.size(); ++n)
    o.table.rows.push_back({std::to_string(n + 1), r.a[n].even.get_str(), r.a[n].odd.get_str(),
                            (*r.b)[n].even.get_str(), (*r.b)[n].odd.get_str()});
  o.notes.push_back("system residual vanishes mod z^" + std::to_string(r.residual_order + 1));
  render(cfg, o, out);
  return r.residual_order >= cfg.order ? kOk : kInvariant;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FrontierBuild fb = load_algebra(cfg, cfg.max_degree, err);
  const GradedJordanAlgebra& alg = fb.algebra;
  const int reached = alg.max_degree();
  const std::vector<GDim> dims = graded_dims(alg);
  const BsAlgebra bs = build_Bs(alg, reached);
  const std::vector<GDim> b = bs_dims(bs);
  const int residual = vanishing_order(residual_check(graded_dims_series(alg, reached), cfg.d1, cfg.d2));

  Output o = start(cfg);
  o.doc["reached_degree"] = reached;
  o.doc["budget_hit"] = fb.budget_hit;
  o.doc["dims"] = gdims_json(dims);
  o.doc["b"] = gdims_json(b);
  Json inner = Json::array();
  o.table.columns = {"n", "j_even", "j_odd", "b_even", "b_odd", "inner_even", "inner_odd"};
  for (int n = 1; n <= reached; ++n) {
    const auto& g = dims[static_cast<std::size_t>(n - 1)];
    const auto& h = b[static_cast<std::size_t>(n - 1)];
    std::vector<std::string> row{std::to_string(n), g.even.get_str(), g.odd.get_str(), h.even.get_str(), h.odd.get_str()};
    if (n < reached) {
      const GDim r = n == 1 ? GDim() : inner_rank_diagnostic(bs, n, reached);
      inner.push_back(gdim_json(r));
      row.push_back(r.even.get_str());
      row.push_back(r.odd.get_str());
    } else {
      inner.push_back(nullptr);
      row.push_back("-");
      row.push_back("-");
    }
    o.table.rows.push_back(std::move(row));
  }
  o.doc["inner_rank"] = inner;
  o.doc["residual_ok_through"] = residual;
  o.notes.push_back(residue_note(residual));
  if (fb.budget_hit) o.notes.push_back("resource budget reached after degree " + std::to_string(reached));
  render(cfg, o, out);
  return fb.budget_hit ? kBudget : kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SolveReport s = solve_E(cfg.d1, cfg.d2, cfg.order);
  const SolveReport p = solve_phi_system(cfg.d1, cfg.d2, cfg.order);
  const FrontierBuild fb = load_algebra(cfg, cfg.max_degree, err);
  const GradedJordanAlgebra& alg = fb.algebra;
  const int reached = alg.max_degree();
  const int upto = std::min(reached, cfg.order);
  const std::vector<GDim> dims = graded_dims(alg);
  const std::vector<GDim> b = bs_dims(build_Bs(alg, upto));
  const int oracle_residual = vanishing_order(residual_check(graded_dims_series(alg, reached), cfg.d1, cfg.d2));

  Output o = start(cfg);
  Json rows = Json::array();
  bool agree = true;
  o.table.columns = {"n", "solver_a", "oracle_j", "a_agree", "solver_b", "oracle_b", "b_agree"};
  for (int n = 1; n <= upto; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    const bool a_ok = s.a[i] == dims[i];
    const bool b_ok = (*p.b)[i] == b[i];
    agree = agree && a_ok && b_ok;
    rows.push_back({{"n", n},
                    {"solver_a", gdim_json(s.a[i])},
                    {"oracle_j", gdim_json(dims[i])},
                    {"a_agree", a_ok},
                    {"solver_b", gdim_json((*p.b)[i])},
                    {"oracle_b", gdim_json(b[i])},
                    {"b_agree", b_ok}});
    o.table.rows.push_back({std::to_string(n), s.a[i].str(), dims[i].str(), a_ok ? "yes" : "NO", (*p.b)[i].str(),
                            b[i].str(), b_ok ? "yes" : "NO"});
  }
  const bool residual_ok = oracle_residual >= reached;
  const bool solver_ok = s.residual_order >= cfg.order && p.residual_order >= cfg.order;
  const char* status = !solver_ok ? "internal-error" : (agree && residual_ok ? "pass" : "discrepancy");

  o.doc["a"] = gdims_json(s.a);
  o.doc["b"] = gdims_json(*p.b);
  o.doc["dims"] = gdims_json(dims);
  o.doc["reached_degree"] = reached;
  o.doc["budget_hit"] = fb.budget_hit;
  o.doc["comparison"] = rows;
  o.doc["residual_ok_through"] = s.residual_order;
  o.doc["oracle_residual_ok_through"] = oracle_residual;
  o.doc["status"] = status;
  o.notes.push_back("solver " + residue_note(s.residual_order));
  o.notes.push_back("oracle reached degree " + std::to_string(reached) + (fb.budget_hit ? " (budget)" : "") +
                    "; oracle " + residue_note(oracle_residual));
  o.notes.push_back(std::string("status: ") + status);
  render(cfg, o, out);
  if (!solver_ok) return kInvariant;
  return agree && residual_ok ? kOk : kDiscrepancy;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FrontierBuild fb = load_algebra(cfg, cfg.d_max, err);
  if (fb.budget_hit)
    throw ResourceBudgetExceeded("Jordan algebra stopped at degree " + std::to_string(fb.algebra.max_degree()) +
                                 " below d_max");
  const BsAlgebra bs = build_Bs(fb.algebra, cfg.d_max);
  const TagAlgebra tag = build_tag(bs, cfg.d_max);
  ChainOptions chain;
  chain.monomial_budget = cfg.chain_budget;
  chain.super_signs = !cfg.ungraded_signs;
  const HomologyReport rep = compute_homology(tag, cfg.d1, cfg.d2, cfg.r_max, cfg.d_max, chain);
  const HomologyChecks checks = check_homology(rep);

  Output o = start(cfg);
  o.doc["homology"] = Json::parse(homology_report_to_json(rep));
  o.doc["checks"] = {{"h0_trivial", checks.h0_trivial},
                     {"h1_generators", checks.h1_generators},
                     {"h2_l4_isotypic", checks.h2_l4_isotypic},
                     {"weight_strings", checks.weight_strings},
                     {"euler", checks.euler},
                     {"failures", checks.failures}};
  Json conj = Json::array();
  bool conj_ok = true;
  for (int r = 3; r <= cfg.r_max; ++r) {
    const std::vector<int> bad = invariant_violations(rep, r);
    conj_ok = conj_ok && bad.empty();
    conj.push_back({{"r", r}, {"degrees_with_invariants", bad}});
    o.notes.push_back("H_" + std::to_string(r) + " trivial/adjoint part: " +
                      (bad.empty() ? std::string("zero through degree ") + std::to_string(cfg.d_max) : "NONZERO"));
  }
  o.doc["conjecture"] = conj;

  o.table.columns = {"r", "degree", "highest_weight", "mult_even", "mult_odd"};
  for (const auto& b : rep.blocks)
    for (std::size_t m = 0; m < b.multiplicities.mult.size(); ++m) {
      const GDim& g = b.multiplicities.mult[m];
      if (g.is_zero()) continue;
      o.table.rows.push_back({std::to_string(b.r), std::to_string(b.degree), std::to_string(2 * m), g.even.get_str(),
                              g.odd.get_str()});
    }
  std::size_t euler_checked = 0;
  for (const auto& e : rep.euler) euler_checked += e.chains_complete ? 1 : 0;
  o.notes.insert(o.notes.begin(), "d^2 = 0 on " + std::to_string(rep.d_squared_checks) + " chain monomials; Euler identity " +
                                      (checks.euler ? "holds" : "FAILS") + " on " + std::to_string(euler_checked) +
                                      " complete degrees");
  for (const auto& f : checks.failures) o.notes.push_back("check failed: " + f);
  render(cfg, o, out);
  if (!checks.ok()) return kInvariant;
  return conj_ok ? kOk : kDiscrepancy;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto usage = [&](const std::string& msg) {
    err << "usage error: " << msg << "\n";
    return kUsage;
  };
  if (cfg.d1 < 0 || cfg.d2 < 0) return usage("d1 and d2 must be >= 0");
  if (cfg.d1 + cfg.d2 < 1) return usage("d1 + d2 must be >= 1");
  if (cfg.order < 1) return usage("order must be >= 1");
  if (cfg.max_degree < 1) return usage("max-degree must be >= 1");
  if (cfg.r_max < 0) return usage("rmax must be >= 0");
  if (cfg.d_max < 1) return usage("dmax must be >= 1");
  if (cfg.budget < 1 || cfg.chain_budget < 1) return usage("budgets must be >= 1");
  try {
    if (cfg.command == "solve") return cmd_solve(cfg, out);
    if (cfg.command == "solve-ab") return cmd_solve_ab(cfg, out);
    if (cfg.command == "oracle") return cmd_oracle(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "homology") return cmd_homology(cfg, out, err);
    return usage("unknown command '" + cfg.command + "'");
  } catch (const SolveError& e) {
    err << "solver failed at step " << e.step() << ": " << e.what() << "\n";
    return e.kind() == SolveError::Kind::SingularStep ? kInvariant : kDiscrepancy;
  } catch (const ResourceBudgetExceeded& e) {
    err << "resource budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded dimensions of free Jordan superalgebras and homology of their TAG algebras", "fjsa"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string cache_dir;
  std::string format = "pretty";
  bool no_cache = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--d1", cfg.d1, "number of even generators")->required();
    sub->add_option("--d2", cfg.d2, "number of odd generators")->required();
    sub->add_option("--format", format, "output format: json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
  };
  auto algebra = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cache_dir, "cache directory (default: $FJSA_CACHE_DIR or the user cache)");
    sub->add_flag("--no-cache", no_cache, "build without reading or writing the cache");
    sub->add_option("--budget", cfg.budget, "max stored entries of one relation matrix")->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "solve the single-series equation for a_n");
  common(solve);
  solve->add_option("--order", cfg.order, "truncation order")->capture_default_str();

  CLI::App* solve_ab = app.add_subcommand("solve-ab", "solve the two-series system for a_n and b_n");
  common(solve_ab);
  solve_ab->add_option("--order", cfg.order, "truncation order")->capture_default_str();

  CLI::App* oracle = app.add_subcommand("oracle", "build J(d1|d2) and B(J) explicitly");
  common(oracle);
  algebra(oracle);
  oracle->add_option("--max-degree", cfg.max_degree, "highest degree to build")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "compare solver predictions with the explicit algebra");
  common(verify);
  algebra(verify);
  verify->add_option("--order", cfg.order, "solver truncation order")->capture_default_str();
  verify->add_option("--max-degree", cfg.max_degree, "highest oracle degree")->capture_default_str();

  CLI::App* homology = app.add_subcommand("homology", "Chevalley-Eilenberg homology of the TAG algebra");
  common(homology);
  algebra(homology);
  homology->add_option("--rmax", cfg.r_max, "highest homological degree")->capture_default_str();
  homology->add_option("--dmax", cfg.d_max, "highest z-degree")->capture_default_str();
  homology->add_option("--chain-budget", cfg.chain_budget, "max chain monomials")->capture_default_str();
  homology->add_flag("--ungraded-signs", cfg.ungraded_signs)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
  cfg.use_cache = !no_cache;
  cfg.format = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Pretty);
  return execute(cfg, out, err);
}

}  // namespace fjsa::cli
