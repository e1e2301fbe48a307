#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilcontact/catalog.hpp"
#include "nilcontact/errors.hpp"

namespace nilcontact::cli {

using nlohmann::json;

namespace {

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format_scalar(x));
  return a;
}

json nelem_json(const NElem& x) {
  return {{"n1_f1", vec_json(x.n1[kEll])},
          {"n1_f2", vec_json(x.n1[kEm])},
          {"n2", vec_json(x.n2.coords)},
          {"n3", vec_json({x.n3[0], x.n3[1]})}};
}

NElem random_nelem(std::size_t p, Rng& rng) { return n_from_coordinates(p, rng.vec(n_dim(p))); }

json make_check(const std::string& name, const std::string& status, json details) {
  return {{"name", name}, {"status", status}, {"details", std::move(details)}};
}

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// Every suite draws from its own stream so selecting a subset does not shift the others.
Rng suite_rng(const RunConfig& cfg, std::uint64_t suite) { return Rng::derived(cfg.seed, suite); }

ProbeConfig probe_config(const RunConfig& cfg) {
  ProbeConfig pc;
  pc.primes = cfg.primes;
  pc.budget = cfg.probe_budget;
  pc.seed = cfg.seed;
  return pc;
}

json config_json(const RunConfig& cfg) {
  return {{"seed", cfg.seed},
          {"samples", cfg.samples},
          {"primes", cfg.primes},
          {"probe_budget", cfg.probe_budget},
          {"long_run", cfg.long_run}};
}

json suite_jacobi(const NilpotentAlgebra& alg) {
  const JacobiReport jr = verify_jacobi(alg);
  const DimReport dr = dim_report(alg.cubic());

  // sl(W) acts by derivations, checked on all basis pairs
  const std::size_t p = alg.p();
  json deriv_ce = nullptr;
  std::uint64_t deriv_pairs = 0;
  const SlWElem gens[] = {SlWElem::h(), SlWElem::e(), SlWElem::f()};
  for (std::size_t g = 0; g < 3 && deriv_ce.is_null(); ++g) {
    for (std::size_t i = 0; i < alg.dim() && deriv_ce.is_null(); ++i) {
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        const NElem a = n_basis(p, i), b = n_basis(p, j);
        const NElem lhs = act_slw(gens[g], alg.bracket(a, b));
        const NElem rhs = alg.bracket(act_slw(gens[g], a), b) + alg.bracket(a, act_slw(gens[g], b));
        ++deriv_pairs;
        if (!(lhs == rhs)) {
          deriv_ce = {{"generator", std::string(1, "hef"[g])}, {"i", i}, {"j", j}};
          break;
        }
      }
    }
  }
  json d{{"jacobi", to_json(jr)}, {"dimensions", to_json(dr)}, {"derivation_pairs", deriv_pairs}};
  const bool ok = jr.pass() && dr.consistent && deriv_ce.is_null();
  if (!jr.violations.empty()) d["counterexample"] = {{"triple", jr.violations.front()}};
  if (!deriv_ce.is_null()) d["counterexample"] = deriv_ce;
  return make_check("jacobi", pass_fail(ok), std::move(d));
}

json suite_group(const NilpotentAlgebra& alg, const RunConfig& cfg) {
  const SymCubic& t = alg.cubic();
  const std::size_t p = alg.p();
  Rng rng = suite_rng(cfg, 2);
  const GroupElem e = GroupElem::identity(p);
  json ce = nullptr;
  auto fail = [&](const char* law, std::initializer_list<std::pair<const char*, NElem>> items) {
    if (!ce.is_null()) return;
    ce = {{"law", law}};
    for (const auto& [k, v] : items) ce[k] = nelem_json(v);
  };

  for (std::uint64_t s = 0; s < cfg.samples; ++s) {
    const GroupElem a{random_nelem(p, rng)}, b{random_nelem(p, rng)}, c{random_nelem(p, rng)};
    if (!(group_mul(group_mul(a, b, t), c, t) == group_mul(a, group_mul(b, c, t), t))) {
      fail("associativity", {{"a", a.log}, {"b", b.log}, {"c", c.log}});
    }
    if (!(group_mul(a, e, t) == a) || !(group_mul(e, a, t) == a)) fail("identity", {{"a", a.log}});
    if (!(group_mul(a, group_inv(a), t) == e) || !(group_mul(group_inv(a), a, t) == e)) fail("inverse", {{"a", a.log}});
    if (!bch(a.log, -a.log, t).is_zero()) fail("H(X,-X)", {{"x", a.log}});
    if (!(bch(a.log, b.log, t) - a.log - b.log).grade(1).is_zero()) fail("bch-grading", {{"x", a.log}, {"y", b.log}});
  }

  // exp_diff and its inverse, both ways, on the standard basis and on random Z
  std::uint64_t round_trips = 0;
  for (std::uint64_t s = 0; s < cfg.samples; ++s) {
    const NElem x = random_nelem(p, rng);
    std::vector<NElem> zs;
    if (s == 0) {
      for (std::size_t k = 0; k < n_dim(p); ++k) zs.push_back(n_basis(p, k));
    }
    zs.push_back(random_nelem(p, rng));
    for (const NElem& z : zs) {
      ++round_trips;
      if (!(exp_diff(x, exp_diff_inv(x, z, t), t) == z)) fail("exp_diff o exp_diff_inv", {{"x", x}, {"z", z}});
      if (!(exp_diff_inv(x, exp_diff(x, z, t), t) == z)) fail("exp_diff_inv o exp_diff", {{"x", x}, {"z", z}});
    }
  }
  json d{{"samples", cfg.samples}, {"round_trips", round_trips}};
  if (!ce.is_null()) d["counterexample"] = ce;
  return make_check("group", pass_fail(ce.is_null()), std::move(d));
}

json assumption_failure(const std::string& name, const NilpotentAlgebra& alg) {
  return make_check(name, "fail",
                    {{"reason", "assumption on B violated"}, {"b_rank", alg.b_rank()}, {"p", alg.p()}});
}

// d(theta~) at the base point as written in the chart: dy ^ dX3^1 - y dz ^ dX3^2 + y dX2 ^ dX1.
Matrix base_point_display(std::size_t p, const Scalar& y) {
  const ChartIndex ix{p};
  Matrix m(ix.size(), ix.size());
  auto put = [&](std::size_t a, std::size_t b, const Scalar& v) {
    m(a, b) = v;
    m(b, a) = -v;
  };
  put(ix.y(), ix.x3_1(), 1);
  put(ix.z(), ix.x3_2(), -y);
  for (std::size_t i = 0; i < p; ++i) put(ix.x2(i), ix.x1(i), y);
  return m;
}

json suite_contact(const NilpotentAlgebra& alg, const RunConfig& cfg) {
  if (!alg.assumption_ok()) return assumption_failure("contact", alg);
  const std::size_t p = alg.p();
  NondegeneracyReport nr = nondegeneracy_certificate(alg, cfg.samples, suite_rng(cfg, 3).next());
  json cert = to_json(nr);
  cert.erase("determinants");

  bool base_ok = true;
  for (const Scalar& y : {Scalar(1), Scalar(2), Scalar(-3, 5)}) {
    base_ok = base_ok && dtheta_matrix(ChartPoint::base(p, y)).matrix() == base_point_display(p, y);
  }
  const std::size_t d_rank = rank(pairing_matrix_D(p));
  json d{{"certificate", std::move(cert)}, {"base_point_matches_display", base_ok}, {"pairing_rank_on_D", d_rank}};
  if (!nr.pass()) {
    d["counterexample"] = {{"sample", nr.failures.front()}};
  }
  return make_check("contact", pass_fail(nr.pass() && base_ok && d_rank == 2 * p + 2), std::move(d));
}

json suite_tau(const NilpotentAlgebra& alg, const RunConfig& cfg) {
  if (!alg.assumption_ok()) return assumption_failure("tau", alg);
  const std::size_t p = alg.p();
  const LineConstants& s = line_expansion_constants();
  const bool magnitudes = abs(s.s1) == 1 && abs(s.s2) == Scalar(1, 2) && abs(s.s3) == Scalar(1, 6);
  Rng rng = suite_rng(cfg, 4);
  json ce = nullptr;
  for (std::uint64_t k = 0; k < cfg.samples && ce.is_null(); ++k) {
    const Vec v = rng.vec(p);
    if (!tau_matches_line_expansion(v, alg, s)) {
      ce = {{"law", "tangent of line"}, {"v", vec_json(v)}};
      break;
    }
    // exp(Z) exp(w (x) p) must give back v (x) f_1 identically in z
    const LineSolution sol = solve_line_coordinates(v, alg);
    const NPoly back = bch(sol.z_log, sol.w_log, alg.cubic());
    NElem target = NElem::zero(p);
    target.n1[kEll] = v;
    bool ok = back.coeff(0) == target;
    for (std::size_t j = 1; j <= back.degree(); ++j) ok = ok && back.coeff(j).is_zero();
    if (!ok) ce = {{"law", "line substitution"}, {"v", vec_json(v)}};
  }
  json d{{"samples", cfg.samples},
         {"constants", vec_json({s.s1, s.s2, s.s3})},
         {"constant_magnitudes_ok", magnitudes}};
  if (!ce.is_null()) d["counterexample"] = ce;
  return make_check("tau", pass_fail(magnitudes && ce.is_null()), std::move(d));
}

json suite_moment(const NilpotentAlgebra& alg, const RunConfig& cfg) {
  if (!alg.assumption_ok()) return assumption_failure("moment", alg);
  const std::size_t p = alg.p();
  Rng rng = suite_rng(cfg, 5);
  json ce = nullptr;
  for (std::uint64_t k = 0; k < cfg.samples && ce.is_null(); ++k) {
    const ChartPoint pt = random_chart_point(p, rng);
    const MomentPoint m = assemble_moment_point(pt, alg);
    if (!moment_membership(m, alg.cubic()) || (m.phi3[0] == 0 && m.phi3[1] == 0)) {
      ce = {{"point", vec_json(pt.coordinates())},
            {"phi1_f1", vec_json(m.phi1[kEll].coords)},
            {"phi1_f2", vec_json(m.phi1[kEm].coords)},
            {"phi2", vec_json(m.phi2)},
            {"phi3", vec_json({m.phi3[0], m.phi3[1]})}};
    }
  }
  const BoundaryReport br = boundary_report(alg.cubic(), probe_config(cfg));
  json d{{"samples", cfg.samples}, {"boundary", to_json(br)}};
  d["boundary_status"] = br.argument_inapplicable ? "inapplicable" : pass_fail(br.codim2_supported);
  if (!ce.is_null()) d["counterexample"] = ce;
  // a singular point only makes the boundary argument inapplicable; it is not a failure
  const bool ok = ce.is_null() && (br.argument_inapplicable || br.codim2_supported);
  return make_check("moment", pass_fail(ok), std::move(d));
}

std::string overall(const json& checks) {
  for (const auto& c : checks) {
    if (c["status"] == "fail") return "fail";
  }
  return "pass";
}

json cubic_json(const SymCubic& t) { return {{"hash", cubic_hash(t)}, {"p", t.dim()}}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError("cannot write '" + path.string() + "'");
  o << text;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("--primes: bad entry '" + item + "'");
    }
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw InputError("--primes: empty list");
  return out;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.samples == 0) throw InputError("samples must be at least 1");
  for (auto q : cfg.primes) {
    if (!is_prime(q)) throw InputError("not a prime: " + std::to_string(q));
  }
}

json check_report(const SymCubic& t) {
  const NilpotentAlgebra alg(t);
  const DimReport dr = dim_report(t);
  const bool ok = alg.assumption_ok();
  json d{{"p", alg.p()}, {"b_rank", alg.b_rank()}, {"dim_n", dr.dim_n}, {"dim_X_c", dr.two_p_plus_three}};
  return {{"command", "check"},
          {"cubic", cubic_json(t)},
          {"checks", json::array({make_check("assumption", pass_fail(ok), d)})},
          {"summary",
           {"p = " + std::to_string(alg.p()), "b_rank = " + std::to_string(alg.b_rank()),
            std::string("assumption: ") + (ok ? "holds" : "violated (B is not surjective)"),
            "dim X_c = " + std::to_string(dr.two_p_plus_three)}},
          {"status", pass_fail(ok)}};
}

json verify_report(const SymCubic& t, const std::string& which, const RunConfig& cfg) {
  validate(cfg);
  const NilpotentAlgebra alg(t);
  using Suite = std::function<json()>;
  const std::vector<std::pair<std::string, Suite>> suites{
      {"jacobi", [&] { return suite_jacobi(alg); }},
      {"group", [&] { return suite_group(alg, cfg); }},
      {"contact", [&] { return suite_contact(alg, cfg); }},
      {"tau", [&] { return suite_tau(alg, cfg); }},
      {"moment", [&] { return suite_moment(alg, cfg); }},
  };
  json checks = json::array();
  bool known = which == "all";
  for (const auto& [name, run] : suites) {
    if (which != "all" && which != name) continue;
    known = true;
    const auto t0 = std::chrono::steady_clock::now();
    json c = run();
    if (cfg.timings) {
      c["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    checks.push_back(std::move(c));
  }
  if (!known) throw InputError("unknown suite '" + which + "'");
  json summary = json::array();
  for (const auto& c : checks) summary.push_back(c["name"].get<std::string>() + ": " + c["status"].get<std::string>());
  return {{"command", "verify"},    {"cubic", cubic_json(t)},   {"config", config_json(cfg)},
          {"which", which},         {"checks", checks},         {"summary", std::move(summary)},
          {"status", overall(checks)}};
}

ExtractOutput extract_report(const std::string& type, const std::string& compare, const RunConfig& cfg) {
  validate(cfg);
  const ChevalleyAlgebra alg(RootSystem::parse(type));
  const Extraction ex = extract_cubic(alg);
  ExtractOutput o;
  json checks = json::array();

  const bool full = cfg.long_run || alg.dim() <= 100;
  const auto jr = full ? alg.structure().jacobi_full() : alg.structure().jacobi_sampled(100'000, cfg.seed);
  checks.push_back(make_check("chevalley-jacobi", pass_fail(jr.violations.empty()),
                              {{"mode", full ? "full" : "sampled"},
                               {"triples", jr.triples_checked},
                               {"violations", jr.violations}}));
  checks.push_back(make_check("pairings", pass_fail(ex.pairings.pass()),
                              {{"p", ex.pairings.p}, {"ranks", {ex.pairings.rank1, ex.pairings.rank2}}}));
  const std::size_t br = b_rank(ex.cubic);
  checks.push_back(make_check("assumption", pass_fail(br == ex.pairings.p), {{"b_rank", br}, {"p", ex.pairings.p}}));

  const EmbeddingReport er = verify_embedding(alg, ex);
  o.embedding = to_json(er);
  checks.push_back(make_check("embedding", pass_fail(er.pass), o.embedding));
  const TernaryReport tr = ternary_dimension_check(alg, ex);
  checks.push_back(make_check("ternary", pass_fail(tr.consistent), to_json(tr)));

  if (!compare.empty()) {
    const CatalogEntry entry = find_catalog_entry(compare);
    const ProbeConfig pc = probe_config(cfg);
    const ComparisonReport cr =
        compare_signatures(entry.name, signature(entry.build(), pc), alg.roots().name(), signature(ex.cubic, pc));
    checks.push_back(make_check("comparison", pass_fail(cr.consistent()), to_json(cr)));
  }

  o.cubic = to_json(ex.cubic);
  o.grading = grading_json(alg, ex);
  json summary = json::array({"algebra " + alg.roots().name() + ", p = " + std::to_string(ex.pairings.p) +
                              ", cubic " + cubic_hash(ex.cubic)});
  for (const auto& c : checks) summary.push_back(c["name"].get<std::string>() + ": " + c["status"].get<std::string>());
  o.report = {{"command", "extract"},   {"algebra", alg.roots().name()},
              {"cubic", cubic_json(ex.cubic)}, {"config", config_json(cfg)},
              {"checks", checks},       {"summary", std::move(summary)},
              {"status", overall(checks)}};
  return o;
}

std::string render_markdown(const json& report) {
  std::ostringstream o;
  o << "# nilcontact " << report.value("command", std::string("report")) << "\n\n";
  if (report.contains("cubic")) {
    o << "cubic `" << report["cubic"]["hash"].get<std::string>() << "` (p = " << report["cubic"]["p"] << ")\n\n";
  }
  if (report.contains("summary")) {
    for (const auto& line : report["summary"]) o << "- " << line.get<std::string>() << "\n";
    o << "\n";
  }
  if (report.contains("checks")) {
    o << "| check | status |\n|---|---|\n";
    for (const auto& c : report["checks"]) {
      o << "| " << c["name"].get<std::string>() << " | " << c["status"].get<std::string>() << " |\n";
    }
    for (const auto& c : report["checks"]) {
      o << "\n## " << c["name"].get<std::string>() << "\n\n```json\n" << c["details"].dump(2) << "\n```\n";
    }
  }
  if (report.contains("config")) o << "\nconfig: `" << report["config"].dump() << "`\n";
  o << "\nstatus: " << report.value("status", std::string("?")) << "\n";
  return o.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for graded nilpotent algebras built from cubic forms", "nilcontact"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string primes_text, format = "md", out_dir;
  app.add_option("--seed", cfg.seed, "seed for every sampled check");
  app.add_option("--samples", cfg.samples, "sample count per property (default 100)");
  app.add_option("--primes", primes_text, "comma-separated primes for the probe (default 5,7,11,13)");
  app.add_option("--budget", cfg.probe_budget, "probe budget per prime (default 1000000)");
  app.add_flag("--long-run", cfg.long_run, "full enumerations everywhere");
  app.add_flag("--timings", cfg.timings, "add wall-clock seconds to reports (breaks byte-identity)");
  app.add_option("--out", out_dir, "output directory (default $NILCONTACT_OUT_DIR)");
  app.add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));

  std::string file, catalog_name, which = "all", type, compare, emit_name;
  int rank_arg = 0;

  auto* check = app.add_subcommand("check", "rank of B and the surjectivity assumption");
  check->add_option("file", file, "cubic JSON tensor")->required();

  auto* verify = app.add_subcommand("verify", "run the identity suites on a cubic");
  verify->add_option("file", file, "cubic JSON tensor");
  verify->add_option("--catalog", catalog_name, "use a catalog cubic instead of a file");
  verify->add_option("--which", which, "all|jacobi|group|contact|tau|moment")
      ->check(CLI::IsMember({"all", "jacobi", "group", "contact", "tau", "moment"}));

  auto* extract = app.add_subcommand("extract", "cubic from the highest-root grading of a simple Lie algebra");
  extract->add_option("--type", type, "root system, e.g. E6 or E with --rank 6")->required();
  extract->add_option("--rank", rank_arg, "rank, when --type is a bare letter");
  extract->add_option("--compare", compare, "catalog entry for a signature comparison");

  auto* catalog = app.add_subcommand("catalog", "built-in cubic norms");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "names and p");
  auto* emit = catalog->add_subcommand("emit", "print a catalog cubic as a JSON tensor");
  emit->add_option("name", emit_name)->required();
  for (auto* sub : {check, verify, extract, catalog, list, emit}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  if (out_dir.empty()) {
    if (const char* env = std::getenv("NILCONTACT_OUT_DIR")) out_dir = env;
  }

  auto emit_report = [&](const json& report, const std::string& stem) {
    const std::string text = format == "json" ? report.dump(2) + "\n" : render_markdown(report);
    out << text;
    if (!out_dir.empty()) write_file(std::filesystem::path(out_dir) / (stem + (format == "json" ? ".json" : ".md")), text);
  };

  try {
    if (!primes_text.empty()) cfg.primes = parse_primes(primes_text);
    validate(cfg);

    if (*check) {
      const SymCubic t = parse_cubic(read_file(file));
      const json r = check_report(t);
      emit_report(r, "check-" + cubic_hash(t));
      return r["status"] == "pass" ? kOk : kFail;
    }
    if (*verify) {
      if (file.empty() == catalog_name.empty()) throw InputError("verify needs exactly one of <file> or --catalog");
      const SymCubic t = catalog_name.empty() ? parse_cubic(read_file(file)) : find_catalog_entry(catalog_name).build();
      const json r = verify_report(t, which, cfg);
      emit_report(r, "verify-" + which + "-" + cubic_hash(t));
      return r["status"] == "pass" ? kOk : kFail;
    }
    if (*extract) {
      const std::string name = rank_arg > 0 ? type + std::to_string(rank_arg) : type;
      ExtractOutput o;
      try {
        o = extract_report(name, compare, cfg);
      } catch (const TypeRejected& e) {
        err << "rejected: " << e.what() << "\n";
        return kFail;
      }
      const std::filesystem::path dir = out_dir.empty() ? std::filesystem::path(".") : std::filesystem::path(out_dir);
      const std::string alg = o.report["algebra"].get<std::string>();
      write_file(dir / (alg + ".cubic.json"), o.cubic.dump() + "\n");
      write_file(dir / (alg + ".grading.json"), o.grading.dump(2) + "\n");
      write_file(dir / (alg + ".embedding.json"), o.embedding.dump(2) + "\n");
      emit_report(o.report, "extract-" + alg);
      return o.report["status"] == "pass" ? kOk : kFail;
    }
    if (*list) {
      json entries = json::array();
      for (const auto& e : catalog_list()) {
        entries.push_back({{"name", e.name}, {"p", e.p}, {"description", e.description}});
      }
      if (format == "json") {
        out << entries.dump(2) << "\n";
      } else {
        out << "| name | p | description |\n|---|---|---|\n";
        for (const auto& e : entries) {
          out << "| " << e["name"].get<std::string>() << " | " << e["p"] << " | "
              << e["description"].get<std::string>() << " |\n";
        }
      }
      return kOk;
    }
    if (*emit) {
      const CatalogEntry e = find_catalog_entry(emit_name);
      const std::string text = dump_cubic(e.build()) + "\n";
      out << text;
      if (!out_dir.empty()) write_file(std::filesystem::path(out_dir) / (e.name + ".json"), text);
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kBadInput;
}

}  // namespace nilcontact::cli
