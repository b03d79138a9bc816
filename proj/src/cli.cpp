#include "twistr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistr/errors.hpp"
#include "twistr/jimbo.hpp"
#include "twistr/qrep.hpp"
#include "twistr/report.hpp"
#include "twistr/tensor.hpp"
#include "twistr/tpg.hpp"

namespace twistr {

void validate_config(const RunConfig& cfg) {
  (void)family_spec(cfg.family, cfg.l);
  validate_params(cfg.spec(), cfg.params);
  if (cfg.samples < 1) throw ValidationError("--samples must be at least 1");
  if (cfg.w && (cfg.w->is_zero() || abs(*cfg.w) == Rational(1)))
    throw ValidationError("--w must avoid 0, 1 and -1 (got " + cfg.w->str() + ")");
}

long Sampler::uniform(long lo, long hi) {
  // plain modulo keeps the stream identical across standard libraries
  return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Sampler::draw_w() {
  for (;;) {
    const long num = uniform(2, 9);
    const long den = uniform(1, 5);
    Rational w(num, den);
    if (w != Rational(1)) return w;
  }
}

Rational Sampler::draw_u() {
  for (;;) {
    const long sign = uniform(0, 1) == 0 ? 1 : -1;
    const long num = uniform(1, 12);
    const long den = uniform(1, 12);
    Rational u(sign * num, den);
    if (abs(u) != Rational(1)) return u;
  }
}

SamplePoint Sampler::draw(const std::optional<Rational>& fixed_w) {
  SamplePoint p;
  p.w = fixed_w ? *fixed_w : draw_w();
  p.u = draw_u();
  do p.v = draw_u();
  while (abs(p.u * p.v) == Rational(1));
  return p;
}

namespace {

std::string params_label(const RunConfig& cfg) {
  const bool d = cfg.family == Family::D2;
  return std::string(d ? "a=" : "k=") + std::to_string(cfg.params.p) + (d ? " b=" : " r=") + std::to_string(cfg.params.s);
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["family"] = family_name(cfg.family);
  j["l"] = cfg.l;
  if (cfg.family == Family::D2) {
    j["a"] = cfg.params.p;
    j["b"] = cfg.params.s;
  } else {
    j["k"] = cfg.params.p;
    j["r"] = cfg.params.s;
  }
  j["mode"] = cfg.mode == Mode::Numeric ? "numeric" : "symbolic";
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  if (cfg.w) j["w"] = cfg.w->str();
  return j;
}

Json point_json(const SamplePoint& p) { return {{"w", p.w.str()}, {"u", p.u.str()}, {"v", p.v.str()}}; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot write " + path.string());
  os << text;
}

void write_json(const std::filesystem::path& path, const Json& j) { write_file(path, j.dump(2) + "\n"); }

/// Runs fn at p, redrawing on poles and non-generic points.
template <typename Fn>
Json with_retries(Sampler& sampler, const RunConfig& cfg, SamplePoint p, Fn&& fn) {
  Json rejected = Json::array();
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    try {
      Json j = fn(p);
      if (!rejected.empty()) j["rejected_points"] = rejected;
      return j;
    } catch (const PoleError& e) {
      rejected.push_back({{"point", point_json(p)}, {"reason", e.what()}});
    } catch (const NonGenericSample& e) {
      rejected.push_back({{"point", point_json(p)}, {"reason", e.what()}});
    }
    p = sampler.draw(cfg.w);
  }
  return {{"pass", false}, {"error", "no generic point after " + std::to_string(kMaxRetries) + " attempts"},
          {"rejected_points", rejected}};
}

struct Stage {
  std::string name;
  std::function<Json()> run;
};

Json relations_stage(const FamilySpec& spec, const std::vector<SamplePoint>& points) {
  Json j;
  const RelationReport amb = check_classical_relations(kac_generators(spec), spec);
  j["ambient_classical"] = relation_json(amb);
  const Representation cl = build_classical_rep(spec);
  const RelationReport seed_cl = check_classical_relations(generator_matrices(cl), spec);
  j["seed_classical"] = relation_json(seed_cl);
  const bool irreducible = finite_part_irreducible(cl);
  j["finite_part_irreducible"] = irreducible;
  bool ok = amb.all_pass() && seed_cl.all_pass() && irreducible;
  Json q = Json::array();
  for (const auto& p : points) {
    const Representation rep = build_seed_rep(spec, QSample(p.w));
    const RelationReport r = check_quantum_relations(rep);
    Json e = relation_json(r);
    e["w"] = p.w.str();
    q.push_back(std::move(e));
    ok = ok && r.all_pass();
  }
  j["quantum"] = std::move(q);
  j["pass"] = ok;
  return j;
}

Json decomposition_stage(const RunConfig& cfg, const std::vector<SamplePoint>& points) {
  const FamilySpec spec = cfg.spec();
  const BranchingTable table = decompose_tensor_closed_form(spec, cfg.params);
  Json j;
  j["closed_form"] = branching_json(table);
  long total = 0;
  for (const auto& e : table.entries) total += e.dim;
  const long expected = weyl_dim(spec.l0, table.lambda) * weyl_dim(spec.l0, table.mu);
  j["dimension"] = {{"sum_of_components", total}, {"product_of_factors", expected}};
  bool ok = total == expected;
  if (cfg.seed_pair()) {
    const Representation rep = build_seed_rep(spec, QSample(points.front().w));
    const IsotypicDecomposition dec = decompose(TensorModule(rep, rep));
    j["direct"] = decomposition_json(spec, dec);
    j["direct_w"] = points.front().w.str();
    bool same = dec.components.size() == table.entries.size();
    for (const auto& e : table.entries) same = same && dec.contains(e.nu) && dec.at(e.nu).dim == e.dim;
    j["direct_matches_closed_form"] = same;
    ok = ok && same;
  } else {
    j["direct"] = "skipped: non-seed pair";
  }
  j["pass"] = ok;
  return j;
}

Json graph_stage(const TPGraph& g, const QSample& w) {
  Json j;
  j["graph"] = Json::parse(export_graph(g, "json"));
  const auto rec = eigenvalues_by_recursion<RatFun>(g, RatFun::u(), w);
  Json edges = Json::array();
  for (auto [a, b] : g.edges) {
    const auto& x = g.nodes[static_cast<std::size_t>(a)];
    const auto& y = g.nodes[static_cast<std::size_t>(b)];
    edges.push_back({{"from", x.label}, {"to", y.label}, {"casimir_difference", (y.casimir - x.casimir).str()},
                     {"sign", x.parity * y.parity}});
  }
  j["edges"] = std::move(edges);
  j["tree_edges"] = rec.tree_edges;
  j["loop_edges_checked"] = rec.loop_edges_checked;
  j["w"] = w.w().str();
  j["pass"] = true;  // recursion throws on any inconsistent loop
  return j;
}

template <typename S>
Json compare_tables(const FamilySpec& spec, const TensorParams& tp, const TPGraph& g, const S& u, const QSample& w) {
  Json j;
  const auto rec = eigenvalues_by_recursion<S>(g, u, w);
  j["recursion"] = eigenvalues_json(spec, rec.values);
  try {
    const auto closed = eigenvalues_closed_form<S>(spec, tp, u, w);
    bool same = closed.size() == rec.values.size();
    Json diff = Json::array();
    for (const auto& [nu, v] : rec.values) {
      const auto it = closed.find(nu);
      if (it == closed.end() || !(it->second == v)) {
        same = false;
        diff.push_back({{"component", weight_label(spec, nu)}, {"recursion", to_string(v)},
                        {"closed_form", it == closed.end() ? "missing" : to_string(it->second)}});
      }
    }
    j["closed_form"] = same ? Json("agrees") : Json(diff);
    j["pass"] = same;
  } catch (const UnsupportedRegime& e) {
    j["closed_form"] = std::string("unsupported: ") + e.what();
    j["pass"] = true;
  }
  return j;
}

Json eigenvalue_stage(const RunConfig& cfg, const TPGraph& g, Sampler& sampler, const std::vector<SamplePoint>& points) {
  const FamilySpec spec = cfg.spec();
  Json j;
  bool ok = true;
  Json per = Json::array();
  if (cfg.mode == Mode::Symbolic) {
    Json e = compare_tables<RatFun>(spec, cfg.params, g, RatFun::u(), QSample(points.front().w));
    e["w"] = points.front().w.str();
    ok = e["pass"].get<bool>();
    per.push_back(std::move(e));
  } else {
    for (const auto& p0 : points) {
      Json e = with_retries(sampler, cfg, p0, [&](const SamplePoint& p) {
        Json x = compare_tables<Rational>(spec, cfg.params, g, p.u, QSample(p.w));
        x["point"] = point_json(p);
        return x;
      });
      ok = ok && e["pass"].get<bool>();
      per.push_back(std::move(e));
    }
  }
  j["samples"] = std::move(per);
  j["pass"] = ok;
  return j;
}

Json solve_certificate(const FamilySpec& spec, const TPGraph& g, const SamplePoint& p) {
  const QSample w(p.w);
  const Representation rep = build_seed_rep(spec, w);
  const int d = rep.dim();
  const RMatrixResult ru = solve_rmatrix(rep, rep, p.u);
  const RMatrixResult rinv = solve_rmatrix(rep, rep, p.u.inverse());
  const RMatrixResult r1 = solve_rmatrix(rep, rep, Rational(1));
  const RMatrixResult rv = solve_rmatrix(rep, rep, p.v);
  const RMatrixResult ruv = solve_rmatrix(rep, rep, p.u * p.v);
  const auto rec = eigenvalues_by_recursion<Rational>(g, p.u, w);
  const IsotypicDecomposition dec = decompose(TensorModule(rep, rep));

  const bool inter = satisfies_all_intertwiners(ru, rep, rep);
  const bool unit = check_unitarity(ru, rinv);
  const bool sq = Matrix(r1.Rcheck * r1.Rcheck) == Matrix::Identity(d * d, d * d);
  const SpectralReport sp = spectral_compare(ru, r1, dec, rec.values);
  const YbeReport ybe = check_ybe(ru, ruv, rv, d, d, d);

  Json j;
  j["point"] = point_json(p);
  j["unknowns"] = ru.unknowns;
  j["equations"] = ru.equations;
  j["nullity"] = ru.nullity;
  j["all_intertwiners"] = inter;
  j["unitarity"] = unit;
  j["rcheck_one_squared_identity"] = sq;
  Json spj;
  spj["pass"] = sp.pass;
  Json meas = Json::array();
  for (auto it = sp.measured.rbegin(); it != sp.measured.rend(); ++it)
    meas.push_back({{"component", weight_label(spec, it->first)}, {"eigenvalue", it->second.str()}});
  spj["measured"] = std::move(meas);
  Json mism = Json::array();
  for (const auto& m : sp.mismatches)
    mism.push_back({{"component", weight_label(spec, m.nu)}, {"expected", m.expected.str()}, {"detail", m.detail}});
  spj["mismatches"] = std::move(mism);
  j["spectral"] = std::move(spj);
  j["ybe"] = {{"pass", ybe.pass}, {"dim", ybe.dim}, {"nonzero_entries", ybe.nonzero_entries},
              {"max_residual", ybe.max_residual.str()}};
  j["pass"] = inter && unit && sq && sp.pass && ybe.pass;
  return j;
}

Json rmatrix_stage(const RunConfig& cfg, const TPGraph& g, Sampler& sampler, const std::vector<SamplePoint>& points) {
  Json j;
  bool ok = true;
  Json certs = Json::array();
  for (const auto& p0 : points) {
    Json c = with_retries(sampler, cfg, p0, [&](const SamplePoint& p) { return solve_certificate(cfg.spec(), g, p); });
    ok = ok && c["pass"].get<bool>();
    certs.push_back(std::move(c));
  }
  j["normalization"] = "R = 1 on the product of highest weight vectors";
  j["certificates"] = std::move(certs);
  j["pass"] = ok;
  return j;
}

Json parity_stage(const FamilySpec& spec, const TPGraph& g) {
  // At generic q, Rcheck(1) is the identity; the signs live in the q = 1 solution at generic u.
  const Representation cl = build_classical_rep(spec);
  const Rational u(2);
  const RMatrixResult rc = solve_rmatrix(cl, cl, u);
  const TensorModule t(cl, cl);
  const IsotypicDecomposition dec = decompose(t);
  const auto solved = parity_spectrum(rc, dec);
  const auto flip_signs = classical_parity_signs(t, dec);
  Json j;
  j["classical_u"] = u.str();
  bool ok = true;
  Json rows = Json::array();
  for (const auto& n : g.nodes) {
    const int a = solved.contains(n.nu) ? solved.at(n.nu) : 0;
    const int b = flip_signs.contains(n.nu) ? flip_signs.at(n.nu) : 0;
    rows.push_back({{"component", n.label}, {"graph", n.parity}, {"rcheck", a}, {"flip", b}});
    ok = ok && a == n.parity && b == n.parity;
  }
  j["components"] = std::move(rows);
  j["pass"] = ok;
  return j;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& log) {
  validate_config(cfg);
  const FamilySpec spec = cfg.spec();
  std::filesystem::create_directories(cfg.out);
  Sampler sampler(cfg.seed);
  std::vector<SamplePoint> points;
  for (int i = 0; i < cfg.samples; ++i) points.push_back(sampler.draw(cfg.w));

  std::optional<TPGraph> graph;
  auto need_graph = [&]() -> const TPGraph& {
    if (!graph) graph = build_graph(spec, cfg.params);
    return *graph;
  };
  const std::string skip = "skipped: non-seed pair";
  std::vector<Stage> stages{
      {"relations", [&] { return relations_stage(spec, points); }},
      {"decomposition", [&] { return decomposition_stage(cfg, points); }},
      {"graph", [&] { return graph_stage(need_graph(), QSample(points.front().w)); }},
      {"eigenvalues", [&] { return eigenvalue_stage(cfg, need_graph(), sampler, points); }},
      {"rmatrix",
       [&] { return cfg.seed_pair() ? rmatrix_stage(cfg, need_graph(), sampler, points) : Json{{"pass", true}, {"status", skip}}; }},
      {"parity", [&] { return cfg.seed_pair() ? parity_stage(spec, need_graph()) : Json{{"pass", true}, {"status", skip}}; }},
  };

  Json summary;
  summary["schema"] = kReportSchema;
  summary["config"] = config_json(cfg);
  summary["points"] = Json::array();
  for (const auto& p : points) summary["points"].push_back(point_json(p));
  Json rows = Json::array();
  bool all = true;
  bool halted = false;
  int index = 0;
  for (const auto& st : stages) {
    ++index;
    std::string status;
    Json body;
    if (halted) {
      status = "not run";
    } else {
      try {
        body = st.run();
      } catch (const Error& e) {
        body = {{"pass", false}, {"error", e.what()}};
      }
      const bool pass = body.value("pass", false);
      status = body.contains("status") ? body["status"].get<std::string>() : (pass ? "pass" : "fail");
      if (!pass) {
        all = false;
        halted = true;
      }
      Json report;
      report["schema"] = kReportSchema;
      report["stage"] = st.name;
      report["config"] = config_json(cfg);
      for (auto& [k, v] : body.items()) report[k] = v;
      std::ostringstream name;
      name << index << "-" << st.name << ".json";
      write_json(cfg.out / name.str(), report);
    }
    Json row{{"stage", st.name}, {"status", status}};
    if (body.contains("error")) row["error"] = body["error"];
    rows.push_back(row);
  }
  summary["stages"] = rows;
  summary["pass"] = all;
  write_json(cfg.out / "summary.json", summary);

  if (cfg.format == "json") {
    log << summary.dump(2) << "\n";
  } else {
    log << family_name(cfg.family) << " l=" << cfg.l << " " << params_label(cfg) << "\n";
    for (const auto& r : rows) {
      log << "  " << r["stage"].get<std::string>() << ": " << r["status"].get<std::string>();
      if (r.contains("error")) log << " (" << r["error"].get<std::string>() << ")";
      log << "\n";
    }
    log << (all ? "PASS" : "FAIL") << " (reports in " << cfg.out.string() << ")\n";
  }
  return all ? 0 : 1;
}

int cmd_export(const RunConfig& cfg, const std::string& what, std::ostream& log) {
  validate_config(cfg);
  const FamilySpec spec = cfg.spec();
  Sampler sampler(cfg.seed);
  std::string format = cfg.format;
  std::filesystem::path file;
  std::string text;

  if (what == "graph") {
    if (format == "text") format = "dot";
    if (format != "dot" && format != "json") throw UsageError("graph export supports dot or json");
    text = export_graph(build_graph(spec, cfg.params), format);
    file = cfg.out / ("graph." + format);
  } else if (what == "eigenvalues") {
    if (format == "dot") throw UsageError("eigenvalue export supports json or text");
    const TPGraph g = build_graph(spec, cfg.params);
    Json j;
    j["schema"] = kReportSchema;
    j["config"] = config_json(cfg);
    if (cfg.mode == Mode::Symbolic) {
      const Rational w = cfg.w ? *cfg.w : sampler.draw_w();
      j["w"] = w.str();
      j["u"] = "symbolic";
      Json t = compare_tables<RatFun>(spec, cfg.params, g, RatFun::u(), QSample(w));
      for (auto& [k, v] : t.items()) j[k] = v;
    } else {
      j["result"] = with_retries(sampler, cfg, sampler.draw(cfg.w), [&](const SamplePoint& p) {
        Json x = compare_tables<Rational>(spec, cfg.params, g, p.u, QSample(p.w));
        x["point"] = point_json(p);
        return x;
      });
    }
    if (format == "text") {
      const Json& body = j.contains("result") ? j["result"] : j;
      std::ostringstream os;
      for (const auto& e : body["recursion"]) os << e["component"].get<std::string>() << "\t" << e["rho"].get<std::string>() << "\n";
      text = os.str();
      file = cfg.out / "eigenvalues.txt";
    } else {
      text = j.dump(2) + "\n";
      file = cfg.out / "eigenvalues.json";
    }
  } else if (what == "rmatrix" || what == "rep") {
    if (!cfg.seed_pair()) throw UsageError(what + " export is only available for the seed pair (k = r = 1, a = b = 1)");
    if (format == "text") format = "json";
    if (format != "json") throw UsageError(what + " export supports json only");
    Json j;
    j["schema"] = kReportSchema;
    j["config"] = config_json(cfg);
    if (what == "rep") {
      const Rational w = cfg.w ? *cfg.w : sampler.draw_w();
      j["representation"] = rep_json(build_seed_rep(spec, QSample(w)));
    } else {
      j["result"] = with_retries(sampler, cfg, sampler.draw(cfg.w), [&](const SamplePoint& p) {
        const Representation rep = build_seed_rep(spec, QSample(p.w));
        Json x = rmatrix_json(solve_rmatrix(rep, rep, p.u));
        x["pass"] = true;
        return x;
      });
    }
    text = j.dump(2) + "\n";
    file = cfg.out / (what + ".json");
  } else {
    throw UsageError("unknown export '" + what + "' (expected graph, eigenvalues, rmatrix or rep)");
  }
  std::filesystem::create_directories(cfg.out);
  write_file(file, text);
  log << "wrote " << file.string() << "\n";
  return 0;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Exact twisted quantum affine R-matrices: construction, verification and export", "twistr"};
  app.require_subcommand(1);

  std::string family = "a2even", mode = "numeric", format, w_text, out;
  int l = 1;
  std::optional<int> k, r, a, b;
  std::uint64_t seed = 1;
  int samples = 3;
  std::string what;

  auto common = [&](CLI::App* sc) {
    sc->add_option("--family", family, "a2even, a2odd or d2")->check(CLI::IsMember({"a2even", "a2odd", "d2"}));
    sc->add_option("--l", l, "rank");
    sc->add_option("--k", k, "first factor lambda_k or k lambda_1 (a2even, a2odd)");
    sc->add_option("--r", r, "second factor lambda_r or r lambda_1 (a2even, a2odd)");
    sc->add_option("--a", a, "first factor a lambda_l (d2)");
    sc->add_option("--b", b, "second factor b lambda_l (d2)");
    sc->add_option("--mode", mode, "numeric or symbolic")->check(CLI::IsMember({"numeric", "symbolic"}));
    sc->add_option("--seed", seed, "sample stream seed");
    sc->add_option("--samples", samples, "number of sample points");
    sc->add_option("--out", out, "output directory (default $TWISTR_OUT, else twistr-out)");
    sc->add_option("--format", format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
    sc->add_option("--w", w_text, "fix the base parameter w (q = w^4) instead of sampling it");
  };
  CLI::App* verify = app.add_subcommand("verify", "run every verification stage and write a report bundle");
  common(verify);
  CLI::App* exp = app.add_subcommand("export", "write one object as DOT, JSON or text");
  common(exp);
  exp->add_option("what", what, "graph, eigenvalues, rmatrix or rep")
      ->required()
      ->check(CLI::IsMember({"graph", "eigenvalues", "rmatrix", "rep"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    cfg.family = parse_family(family);
    cfg.l = l;
    const bool d = cfg.family == Family::D2;
    if (d && (k || r)) throw UsageError("--k/--r apply to a2even and a2odd; use --a/--b for d2");
    if (!d && (a || b)) throw UsageError("--a/--b apply to d2; use --k/--r");
    cfg.params.p = (d ? a : k).value_or(1);
    cfg.params.s = (d ? b : r).value_or(1);
    cfg.mode = mode == "symbolic" ? Mode::Symbolic : Mode::Numeric;
    cfg.seed = seed;
    cfg.samples = samples;
    if (!out.empty()) cfg.out = out;
    else if (const char* env = std::getenv("TWISTR_OUT"); env && *env) cfg.out = env;
    cfg.format = format.empty() ? "text" : format;
    if (!w_text.empty()) cfg.w = Rational::parse(w_text);
    if (verify->parsed()) {
      if (cfg.format == "dot") throw UsageError("verify writes JSON reports; --format selects json or text console output");
      return cmd_verify(cfg, std::cout);
    }
    return cmd_export(cfg, what, std::cout);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace twistr
