#include "kinvar/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kinvar/analysis.hpp"
#include "kinvar/brackets.hpp"
#include "kinvar/conjugation.hpp"
#include "kinvar/dirac.hpp"
#include "kinvar/kinematics.hpp"
#include "kinvar/report.hpp"
#include "kinvar/rng.hpp"

namespace kinvar {

namespace {

using nlohmann::json;

/// Seed precedence: explicit --seed, then KINVAR_SEED, then 0.
uint64_t effective_seed(const std::optional<uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("KINVAR_SEED")) {
    std::string s(env);
    if (s.empty()) return 0;
    char* end = nullptr;
    errno = 0;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (errno != 0 || end == nullptr || *end != '\0')
      throw std::invalid_argument("KINVAR_SEED is not an unsigned integer: " + s);
    return static_cast<uint64_t>(v);
  }
  return 0;
}

json manifest_json(const RunManifest& m) { return json::parse(manifest_to_json(m)); }

void emit_artifact(const std::string& path, json art, const RunManifest& m) {
  art["manifest"] = manifest_json(m);
  write_text_file(path, art.dump(2) + "\n");
}

void print_matrix(std::ostream& os, const QMat& m) {
  std::vector<size_t> width(m.cols(), 0);
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      width[j] = std::max(width[j], m(i, j).to_string().size());
  for (int i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (int j = 0; j < m.cols(); ++j) {
      std::string e = m(i, j).to_string();
      os << std::string(width[j] - e.size(), ' ') << e << (j + 1 < m.cols() ? "  " : "");
    }
    os << "]\n";
  }
}

/// Prints failures and a one-line summary; returns the process exit code.
int finish_checks(const CheckList& cl, const std::string& label) {
  for (const Check& c : cl.checks) {
    if (c.pass) continue;
    std::cout << "FAIL " << c.name << " [" << c.rule << "]";
    if (!c.witness.empty()) std::cout << " " << c.witness;
    std::cout << "\n";
  }
  const size_t failed = cl.failures();
  std::cout << label << ": " << (cl.checks.size() - failed) << "/" << cl.checks.size()
            << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

struct DrawFlags {
  int num_bound = 9;
  int den_max = 3;
  RationalDrawSpec spec() const { return RationalDrawSpec{num_bound, den_max}; }
};

void add_draw_flags(CLI::App* sc, DrawFlags& df) {
  sc->add_option("--num-bound", df.num_bound, "numerator bound for random rationals")
      ->check(CLI::Range(1, 1000));
  sc->add_option("--den-max", df.den_max, "largest denominator for random rationals")
      ->check(CLI::Range(1, 1000));
}

// ── subcommand bodies ───────────────────────────────────────────────────────

int run_dirac(int d, bool as_json, uint64_t seed) {
  DiracBasis basis = build_dirac(d);
  CheckList cl = verify_clifford(basis);
  RunManifest man{"dirac", kVersion, seed, d, 0, "", 0,
                  static_cast<int>(cl.checks.size()), static_cast<int>(cl.failures())};
  if (as_json) {
    json gam = json::array();
    for (const QMat& g : basis.gammas) gam.push_back(json::parse(matrix_to_json(g)));
    json art{{"d", basis.d}, {"k", basis.k}, {"eta", basis.eta}, {"gammas", std::move(gam)},
             {"manifest", manifest_json(man)}};
    std::cout << art.dump(2) << "\n";
    return cl.all_pass() ? 0 : 1;
  }
  std::cout << "d = " << d << " (k = " << basis.k << ", spinor size " << basis.size() << ")\n";
  std::cout << "metric diag(";
  for (size_t a = 0; a < basis.eta.size(); ++a)
    std::cout << basis.eta[a] << (a + 1 < basis.eta.size() ? ", " : ")\n");
  for (int j = 1; j <= d; ++j) {
    std::cout << "Gamma " << j << ":\n";
    print_matrix(std::cout, basis.gamma(j));
  }
  return finish_checks(cl, "clifford relations");
}

int run_conjugation(int d, bool as_json, bool verify, int trials, uint64_t seed) {
  DiracBasis basis = build_dirac(d);
  ConjugationMatrix cm = build_conjugation(d);
  CheckList cl;
  if (verify) {
    Rng rng(seed);
    cl = verify_conjugation(cm, basis, trials, rng);
  }
  RunManifest man{"conjugation", kVersion, seed, d, 0, "", 0,
                  static_cast<int>(cl.checks.size()), static_cast<int>(cl.failures())};
  if (as_json) {
    json art{{"d", cm.d},
             {"k", cm.k},
             {"symmetric", cm.symmetric},
             {"block_diagonal", cm.block_diagonal},
             {"skew_blocks", cm.skew_blocks},
             {"matrix", json::parse(matrix_to_json(cm.matrix))},
             {"manifest", manifest_json(man)}};
    std::cout << art.dump(2) << "\n";
    return cl.all_pass() ? 0 : 1;
  }
  std::cout << "d = " << d << " (k = " << cm.k << ", size " << cm.size() << ")\n";
  std::cout << "symmetric: " << (cm.symmetric ? "yes" : "no")
            << ", block diagonal: " << (cm.block_diagonal ? "yes" : "no")
            << ", skew blocks: " << (cm.skew_blocks ? "yes" : "no") << "\n";
  print_matrix(std::cout, cm.matrix);
  if (!verify) return 0;
  return finish_checks(cl, "conjugation properties");
}

int run_sample(int d, int n, bool conserve, bool isotropic, uint64_t seed,
               const DrawFlags& df, const std::string& out) {
  if (isotropic && n != 3)
    throw std::invalid_argument("--isotropic requires --n 3");
  if (!isotropic && n == 3)
    throw std::invalid_argument("n = 3 requires --isotropic (generic conserving triples collapse)");
  Rng rng(seed);
  KinematicConfiguration cfg = isotropic ? sample_isotropic_triple(d, rng, df.spec())
                                         : sample_configuration(d, n, conserve, rng, df.spec());
  CheckList cl = verify_mandelstam(cfg);
  RunManifest man{"sample", kVersion, seed, d, n, "", 0,
                  static_cast<int>(cl.checks.size()), static_cast<int>(cl.failures())};
  emit_artifact(out, json::parse(config_to_json(cfg)), man);
  std::cout << "wrote " << out << " (d=" << d << ", n=" << n << ", "
            << (cfg.conserves ? "conserving" : "open") << ")\n";
  return finish_checks(cl, "kinematic invariants");
}

int run_brackets(const std::string& config_path, uint64_t seed, const DrawFlags& df,
                 const std::string& out) {
  std::string text;
  try {
    text = read_text_file(config_path);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("cannot read config: ") + e.what());
  }
  KinematicConfiguration cfg;
  try {
    cfg = config_from_json(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad config json: ") + e.what());
  }
  Rng rng(seed);
  SpinorParams params = make_spinor_params(build_dirac(cfg.d).k, cfg.n, rng, df.spec());
  SpinorState st = make_spinor_state(cfg, params);
  BracketTensor bt = build_bracket_tensor(st);
  CheckList cl = verify_bracket_tensor(st, bt);
  RunManifest man{"brackets", kVersion, seed, cfg.d, cfg.n, "", 0,
                  static_cast<int>(cl.checks.size()), static_cast<int>(cl.failures())};
  emit_artifact(out, json::parse(bracket_tensor_to_json(bt)), man);
  std::cout << "wrote " << out << " (d=" << cfg.d << ", n=" << cfg.n << ")\n";
  return finish_checks(cl, "bracket invariants");
}

bool suite_keeps(const std::string& suite, const std::string& name) {
  if (suite == "all") return true;
  auto has = [&name](const std::string& frag) { return name.find(frag) != std::string::npos; };
  if (suite == "clifford") return name.rfind("clifford/", 0) == 0 || name.rfind("conjugation/", 0) == 0;
  if (suite == "brackets") return has("/kinematics/") || has("/brackets/");
  if (suite == "relations") return has("/relations/");
  return has("/secant/");  // suite == "secant"
}

int run_verify(int d, int n, const std::string& suite, int trials, uint64_t seed,
               const std::string& json_out, bool timing) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport full = invariant_suite(d, n, trials, seed);
  auto t1 = std::chrono::steady_clock::now();

  SuiteReport rep;
  rep.d = d;
  rep.n = n;
  rep.seed = seed;
  for (const Check& c : full.checks.checks)
    if (suite_keeps(suite, c.name)) rep.checks.add(c.name, c.rule, c.pass, c.witness);

  long ms = timing ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;
  RunManifest man{"verify", kVersion, seed, d, n, suite, ms,
                  static_cast<int>(rep.checks.checks.size()),
                  static_cast<int>(rep.checks.failures())};
  if (!json_out.empty()) emit_artifact(json_out, json::parse(report_to_json(rep)), man);
  std::ostringstream label;
  label << "suite " << suite << " (d=" << d << ", n=" << n << ", trials=" << trials
        << ", seed=" << seed << ")";
  return finish_checks(rep.checks, label.str());
}

int run_dimension(const std::string& variety, int d, int n, const std::string& mode_name,
                  int trials, uint64_t seed, const std::string& out, bool timing) {
  std::optional<Variety> v = variety_from_string(variety);
  if (!v) throw std::invalid_argument("unknown variety: " + variety);
  RankMode mode = mode_name == "float" ? RankMode::floating : RankMode::exact;
  auto t0 = std::chrono::steady_clock::now();
  int dim = variety_dimension(*v, d, n, trials, seed, mode);
  auto t1 = std::chrono::steady_clock::now();
  long ms = timing ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;
  if (!out.empty()) {
    RunManifest man{"dimension", kVersion, seed, d, n, mode_name, ms, 0, 0};
    emit_artifact(out,
                  json{{"variety", variety_to_string(*v)}, {"d", d}, {"n", n},
                       {"mode", mode_name}, {"trials", trials}, {"dimension", dim}},
                  man);
  }
  std::cout << dim << "\n";
  return 0;
}

int run_table(int dmax, int nmax, uint64_t seed, const std::string& out, bool timing) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<TableCell> cells = reproduce_dimension_table(dmax, nmax, seed);
  auto t1 = std::chrono::steady_clock::now();

  std::cout << "order-3 variety dimensions, computed (expected on mismatch)\n";
  std::cout << "     ";
  for (int n = 4; n <= nmax; ++n) {
    std::string h = "n=" + std::to_string(n);
    std::cout << std::string(6 - h.size(), ' ') << h;
  }
  std::cout << "\n";
  int fatal = 0;
  std::vector<std::string> notes;
  size_t idx = 0;
  for (int d = 4; d <= dmax; ++d) {
    std::cout << " d=" << d << " ";
    for (int n = 4; n <= nmax; ++n) {
      const TableCell& cell = cells.at(idx++);
      std::ostringstream e;
      e << cell.computed;
      if (cell.computed != cell.expected) {
        std::ostringstream note;
        note << "d=" << cell.d << " n=" << cell.n << ": computed " << cell.computed
             << ", expected " << cell.expected
             << (cell.mode == RankMode::floating ? " [float]" : " [exact]");
        if (cell.flagged) {
          e << "*";
          note << " (reported, not fatal)";
        } else {
          e << "!";
          ++fatal;
        }
        notes.push_back(note.str());
      }
      std::cout << std::string(e.str().size() < 6 ? 6 - e.str().size() : 1, ' ') << e.str();
    }
    std::cout << "\n";
  }
  for (const std::string& note : notes) std::cout << note << "\n";
  std::cout << "cells: " << cells.size() << ", mismatches: " << notes.size()
            << " (" << fatal << " fatal)\n";

  long ms = timing ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;
  if (!out.empty()) {
    RunManifest man{"table", kVersion, seed, dmax, nmax, dmax <= 7 ? "exact" : "mixed", ms,
                    static_cast<int>(cells.size()), fatal};
    json jcells = json::array();
    for (const TableCell& cell : cells)
      jcells.push_back(json{{"d", cell.d},
                            {"n", cell.n},
                            {"expected", cell.expected},
                            {"computed", cell.computed},
                            {"mode", cell.mode == RankMode::floating ? "float" : "exact"},
                            {"flagged", cell.flagged}});
    emit_artifact(out, json{{"cells", std::move(jcells)}}, man);
  }
  return fatal == 0 ? 0 : 1;
}

int run_report(const std::vector<std::string>& paths) {
  struct Tally {
    int pass = 0, total = 0;
  };
  std::map<std::string, Tally> by_rule;
  std::map<std::pair<int, int>, Tally> by_point;
  std::vector<std::string> failing;
  int checks = 0;
  for (const std::string& path : paths) {
    json j;
    try {
      j = json::parse(read_text_file(path));
    } catch (const std::exception& e) {
      throw std::invalid_argument("cannot read report " + path + ": " + e.what());
    }
    const int d = j.value("d", 0), n = j.value("n", 0);
    for (const json& c : j.at("checks")) {
      const bool pass = c.at("pass").get<bool>();
      Tally& tr = by_rule[c.at("rule").get<std::string>()];
      Tally& tp = by_point[{d, n}];
      ++tr.total;
      ++tp.total;
      ++checks;
      if (pass) {
        ++tr.pass;
        ++tp.pass;
      } else {
        failing.push_back(path + ": " + c.at("name").get<std::string>());
      }
    }
  }
  std::cout << "reports: " << paths.size() << " files, " << checks << " checks, "
            << failing.size() << " failures\n";
  if (!by_rule.empty()) {
    std::cout << "by rule:\n";
    for (const auto& [rule, t] : by_rule)
      std::cout << "  " << rule << ": " << t.pass << "/" << t.total << "\n";
    std::cout << "by point:\n";
    for (const auto& [dn, t] : by_point)
      std::cout << "  d=" << dn.first << " n=" << dn.second << ": " << t.pass << "/" << t.total
                << "\n";
  }
  for (const std::string& f : failing) std::cout << "FAIL " << f << "\n";
  return failing.empty() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact spinor-bracket toolkit for massless kinematics"};
  app.require_subcommand(1);

  // dirac
  int dirac_d = 0;
  bool dirac_json = false, dirac_pretty = false;
  auto* dirac_cmd = app.add_subcommand("dirac", "print the Dirac basis and check its relations");
  dirac_cmd->add_option("--d", dirac_d, "spacetime dimension")->required()->check(CLI::Range(2, 12));
  auto* dj = dirac_cmd->add_flag("--json", dirac_json, "machine-readable output");
  dirac_cmd->add_flag("--pretty", dirac_pretty, "human-readable output (default)")->excludes(dj);

  // conjugation
  int conj_d = 0, conj_trials = 10;
  bool conj_json = false, conj_verify = false;
  auto* conj_cmd = app.add_subcommand("conjugation", "print the conjugation matrix; optionally verify");
  conj_cmd->add_option("--d", conj_d, "spacetime dimension")->required()->check(CLI::Range(2, 12));
  conj_cmd->add_flag("--json", conj_json, "machine-readable output");
  conj_cmd->add_flag("--verify", conj_verify, "run the intertwining and taxonomy checks");
  conj_cmd->add_option("--trials", conj_trials, "random momenta per check")->check(CLI::Range(1, 10000));
  uint64_t conj_seed = 0;
  auto* conj_seed_opt = conj_cmd->add_option("--seed", conj_seed, "master seed");

  // sample
  int sample_d = 0, sample_n = 0;
  bool sample_conserve = false, sample_isotropic = false;
  uint64_t sample_seed = 0;
  std::string sample_out;
  DrawFlags sample_df;
  auto* sample_cmd = app.add_subcommand("sample", "sample an exact kinematic configuration");
  sample_cmd->add_option("--d", sample_d, "spacetime dimension")->required()->check(CLI::Range(3, 12));
  sample_cmd->add_option("--n", sample_n, "number of particles")->required()->check(CLI::Range(3, 64));
  sample_cmd->add_flag("--conserve", sample_conserve, "impose momentum conservation");
  sample_cmd->add_flag("--isotropic", sample_isotropic, "conserving three-particle sampler");
  auto* sample_seed_opt = sample_cmd->add_option("--seed", sample_seed, "master seed");
  sample_cmd->add_option("--out", sample_out, "output configuration path")->required();
  add_draw_flags(sample_cmd, sample_df);

  // brackets
  std::string br_config, br_out;
  uint64_t br_seed = 0;
  DrawFlags br_df;
  auto* br_cmd = app.add_subcommand("brackets", "build the bracket stack from a configuration");
  br_cmd->add_option("--config", br_config, "configuration json path")->required();
  auto* br_seed_opt = br_cmd->add_option("--seed", br_seed, "master seed for spinor parameters");
  br_cmd->add_option("--out", br_out, "output stack path")->required();
  add_draw_flags(br_cmd, br_df);

  // verify
  int ver_d = 0, ver_n = 0, ver_trials = 3, ver_jobs = 1;
  uint64_t ver_seed = 0;
  std::string ver_suite = "all", ver_json;
  bool ver_timing = false;
  auto* ver_cmd = app.add_subcommand("verify", "run the exact invariant suites at random points");
  ver_cmd->add_option("--d", ver_d, "spacetime dimension")->required()->check(CLI::Range(2, 12));
  ver_cmd->add_option("--n", ver_n, "number of particles")->required()->check(CLI::Range(3, 64));
  ver_cmd->add_option("--suite", ver_suite, "check family")
      ->check(CLI::IsMember({"all", "clifford", "brackets", "relations", "secant"}));
  ver_cmd->add_option("--trials", ver_trials, "sample points")->check(CLI::Range(1, 10000));
  auto* ver_seed_opt = ver_cmd->add_option("--seed", ver_seed, "master seed");
  ver_cmd->add_option("--json", ver_json, "write the report json here");
  ver_cmd->add_flag("--timing", ver_timing, "record wall time in the manifest");
  ver_cmd->add_option("--jobs", ver_jobs, "worker count (results are identical for any value)")
      ->check(CLI::Range(1, 256));

  // dimension
  std::string dim_variety, dim_mode = "exact", dim_out;
  int dim_d = 0, dim_n = 4, dim_trials = 3;
  uint64_t dim_seed = 0;
  bool dim_timing = false;
  auto* dim_cmd = app.add_subcommand("dimension", "Jacobian-rank dimension of a kinematic variety");
  dim_cmd->add_option("--variety", dim_variety, "k2 | k3 | mandelstam | spinor")
      ->required()
      ->check(CLI::IsMember({"k2", "k3", "mandelstam", "spinor"}));
  dim_cmd->add_option("--d", dim_d, "spacetime dimension")->required()->check(CLI::Range(3, 12));
  dim_cmd->add_option("--n", dim_n, "number of particles")->check(CLI::Range(1, 64));
  dim_cmd->add_option("--mode", dim_mode, "rank arithmetic")
      ->check(CLI::IsMember({"exact", "float"}));
  dim_cmd->add_option("--trials", dim_trials, "sample points")->check(CLI::Range(1, 10000));
  auto* dim_seed_opt = dim_cmd->add_option("--seed", dim_seed, "master seed");
  dim_cmd->add_option("--out", dim_out, "write a json artifact here");
  dim_cmd->add_flag("--timing", dim_timing, "record wall time in the manifest");

  // table
  std::string table_what, table_out;
  int table_dmax = 9, table_nmax = 7, table_jobs = 1;
  uint64_t table_seed = 0;
  bool table_timing = false;
  auto* table_cmd = app.add_subcommand("table", "reproduce the published dimension table");
  table_cmd->add_option("--reproduce", table_what, "which table")
      ->required()
      ->check(CLI::IsMember({"prop-dimensions"}));
  table_cmd->add_option("--dmax", table_dmax, "largest dimension")->check(CLI::Range(4, 9));
  table_cmd->add_option("--nmax", table_nmax, "largest particle count")->check(CLI::Range(4, 12));
  auto* table_seed_opt = table_cmd->add_option("--seed", table_seed, "master seed");
  table_cmd->add_option("--out", table_out, "write a json artifact here");
  table_cmd->add_flag("--timing", table_timing, "record wall time in the manifest");
  table_cmd->add_option("--jobs", table_jobs, "worker count (results are identical for any value)")
      ->check(CLI::Range(1, 256));

  // report
  std::vector<std::string> report_paths;
  auto* report_cmd = app.add_subcommand("report", "summarize verify reports by rule and point");
  report_cmd->add_option("files", report_paths, "report json files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto seed_of = [](const CLI::Option* opt, uint64_t value) {
    return effective_seed(opt->count() > 0 ? std::optional<uint64_t>(value) : std::nullopt);
  };

  try {
    if (dirac_cmd->parsed()) return run_dirac(dirac_d, dirac_json, 0);
    if (conj_cmd->parsed())
      return run_conjugation(conj_d, conj_json, conj_verify, conj_trials,
                             seed_of(conj_seed_opt, conj_seed));
    if (sample_cmd->parsed())
      return run_sample(sample_d, sample_n, sample_conserve, sample_isotropic,
                        seed_of(sample_seed_opt, sample_seed), sample_df, sample_out);
    if (br_cmd->parsed())
      return run_brackets(br_config, seed_of(br_seed_opt, br_seed), br_df, br_out);
    if (ver_cmd->parsed())
      return run_verify(ver_d, ver_n, ver_suite, ver_trials, seed_of(ver_seed_opt, ver_seed),
                        ver_json, ver_timing);
    if (dim_cmd->parsed())
      return run_dimension(dim_variety, dim_d, dim_n, dim_mode, dim_trials,
                           seed_of(dim_seed_opt, dim_seed), dim_out, dim_timing);
    if (table_cmd->parsed())
      return run_table(table_dmax, table_nmax, seed_of(table_seed_opt, table_seed), table_out,
                       table_timing);
    if (report_cmd->parsed()) return run_report(report_paths);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace kinvar
