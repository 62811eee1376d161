// dchase: command-line front end for diagram chasing over F_p and Q.
//
// Exit codes: 0 all verdicts hold, 1 a verdict failed, 2 input or hypothesis
// error, 3 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "dchase/error.hpp"
#include "dchase/io.hpp"
#include "dchase/selftest.hpp"

using namespace dchase;

namespace {

enum Exit { ok = 0, verdict_failed = 1, input_error = 2, usage_error = 3 };

struct Globals {
  bool json_out = false;
  bool no_timing = false;
  bool quiet = false;
  std::string field;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

std::optional<Field> parse_field_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "Q" || s == "q" || s == "rationals") return Field::rationals();
  std::size_t used = 0;
  long long p = 0;
  try {
    p = std::stoll(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != s.size()) throw CLI::ValidationError("--field", "expected a prime or Q, got \"" + s + "\"");
  try {
    return Field::prime(p);
  } catch (const Error& e) {
    throw CLI::ValidationError("--field", e.what());
  }
}

// Inputs read so far, their digest, and the report being built.
class Run {
 public:
  Run(const Globals& g, std::string command) : g_(g), start_(std::chrono::steady_clock::now()) {
    report_["command"] = std::move(command);
  }

  json load(const std::string& path) {
    std::string text = read_file(path);
    inputs_ += text;
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::parse, path + ": " + e.what());
    }
  }

  json& report() { return report_; }
  void verdict(const std::string& name, bool holds) {
    verdicts_.push_back({{"name", name}, {"holds", holds}});
    all_hold_ = all_hold_ && holds;
  }
  void say(const std::string& line) {
    if (!g_.json_out && !g_.quiet) std::cout << line << '\n';
  }

  int finish(int code = -1) {
    if (code < 0) code = all_hold_ ? ok : verdict_failed;
    json out;
    out["command"] = report_["command"];
    if (!inputs_.empty()) out["input_digest"] = sha256_hex(inputs_);
    out["verdicts"] = verdicts_;
    for (auto& [k, v] : report_.items())
      if (k != "command") out[k] = v;
    if (!g_.no_timing)
      out["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    out["exit_code"] = code;
    if (g_.json_out) {
      std::cout << out.dump(2) << '\n';
    } else if (!g_.quiet) {
      for (const auto& v : verdicts_)
        std::cout << (v["holds"].get<bool>() ? "holds   " : "FAILS   ") << v["name"].get<std::string>() << '\n';
    }
    return code;
  }

  int fail(const Error& e) {
    report_["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    int code = e.is_input_error() ? input_error : verdict_failed;
    if (!g_.json_out) std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return finish(code);
  }

 private:
  const Globals& g_;
  std::chrono::steady_clock::time_point start_;
  std::string inputs_;
  json report_ = json::object();
  json verdicts_ = json::array();
  bool all_hold_ = true;
};

std::string dims_text(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "]";
}

json validation_json(const ValidationReport& r) {
  json nc = json::array(), ne = json::array();
  for (Cell c : r.non_commuting) nc.push_back(cell_key(c));
  for (const auto& e : r.not_exact)
    ne.push_back({{"line", e.in_row ? "row" : "column"}, {"index", e.line + 1}, {"cell", cell_key(e.cell)}});
  return {{"valid", r.valid()}, {"non_commuting", std::move(nc)}, {"not_exact", std::move(ne)}};
}

void describe_validation(Run& run, const ValidationReport& r) {
  for (Cell c : r.non_commuting) run.say("square at " + cell_key(c) + " does not commute");
  for (const auto& e : r.not_exact)
    run.say(std::string(e.in_row ? "row " : "column ") + std::to_string(e.line + 1) + " is not exact at " +
            cell_key(e.cell));
}

json iso_json(const HomologyIso& iso) {
  return {{"position", iso.position},
          {"source_dim", iso.source.dim},
          {"target_dim", iso.target.dim},
          {"matrix", to_json(iso.matrix)}};
}

int cmd_validate(Run& run, const Globals& g, const std::string& path) {
  Grid grid = grid_from_json(run.load(path), parse_field_flag(g.field));
  ValidationReport r = validate(grid);
  run.report()["validation"] = validation_json(r);
  describe_validation(run, r);
  run.say(r.valid() ? "grid is commutative with exact rows and columns" : "grid is invalid");
  return run.finish(r.valid() ? ok : input_error);
}

int cmd_lemma(Run& run, const Globals& g, const std::string& path, bool kernel_side, std::size_t position, bool iso) {
  Grid grid = grid_from_json(run.load(path), parse_field_flag(g.field));
  HomologyTable t = kernel_side ? kcl_homology_dims(grid) : ccl_homology_dims(grid);
  const char* a = kernel_side ? "top" : "right";
  const char* b = kernel_side ? "left" : "bottom";
  if (position > t.first.size())
    throw Error(ErrorKind::region_missing, "position " + std::to_string(position) + " is not admissible (the shape admits 1.." +
                                               std::to_string(t.first.size()) + ")");
  run.report()["admissible_positions"] = t.first.size();
  run.report()["homology"] = {{a, t.first}, {b, t.second}};
  run.say(std::string(a) + " homology: " + dims_text(t.first));
  run.say(std::string(b) + " homology: " + dims_text(t.second));
  std::size_t lo = position ? position : 1, hi = position ? position : t.first.size();
  for (std::size_t n = lo; n <= hi; ++n)
    run.verdict("homology equal at position " + std::to_string(n), t.first[n - 1] == t.second[n - 1]);
  if (iso) {
    json isos = json::array();
    for (std::size_t n = lo; n <= hi; ++n) {
      HomologyIso h = kernel_side ? kcl_homology_iso(grid, n) : ccl_homology_iso(grid, n);
      bool invertible = h.matrix.rows() == h.matrix.cols() && rank(h.matrix) == h.matrix.rows();
      run.verdict("isomorphism at position " + std::to_string(n), invertible);
      run.say("position " + std::to_string(n) + ":\n" + h.matrix.to_string());
      isos.push_back(iso_json(h));
    }
    run.report()["isomorphisms"] = std::move(isos);
  }
  return run.finish();
}

int cmd_cross(Run& run, const Globals& g, const std::string& path) {
  json doc = run.load(path);
  Field f = document_field(doc, parse_field_flag(g.field));
  Cross c = cross_from_json(doc, f);
  CrossReport r = verify_cross_lemma(c.beta1, c.beta2, c.f, c.g);
  run.verdict("part (1)", r.part1);
  run.verdict("part (2a)", r.part2a);
  run.verdict("part (2b)", r.part2b);
  if (r.enumeration_agrees) run.verdict("element enumeration agrees", *r.enumeration_agrees);
  return run.finish();
}

json snake_json(const SnakeResult& r) {
  return {{"six_term_dims", r.six_term.dims()},
          {"homology", homology_dims(r.six_term)},
          {"delta", to_json(r.delta)},
          {"exact", r.exact},
          {"f_monic", r.f_monic_iff.first},
          {"ker_alpha_to_ker_beta_monic", r.f_monic_iff.second},
          {"gp_epi", r.gp_epi_iff.first},
          {"cok_beta_to_cok_gamma_epi", r.gp_epi_iff.second}};
}

void snake_verdicts(Run& run, const SnakeResult& r, const std::string& suffix) {
  const char* at[] = {"Ker beta", "Ker gamma", "Cok alpha", "Cok beta"};
  for (std::size_t k = 0; k < r.exact.size(); ++k) run.verdict(std::string("exact at ") + at[k] + suffix, r.exact[k]);
  run.verdict("f monic iff Ker alpha -> Ker beta monic" + suffix, r.f_monic_iff.first == r.f_monic_iff.second);
  run.verdict("g' epi iff Cok beta -> Cok gamma epi" + suffix, r.gp_epi_iff.first == r.gp_epi_iff.second);
}

int cmd_snake(Run& run, const Globals& g, const std::string& path, bool via_grids) {
  SnakeInput in = snake_from_json(run.load(path), parse_field_flag(g.field));
  SnakeResult r = snake(in);
  run.report()["result"] = snake_json(r);
  run.say("six-term dims: " + dims_text(r.six_term.dims()));
  run.say("delta:\n" + r.delta.to_string());
  snake_verdicts(run, r, "");
  if (via_grids) {
    SnakeResult v = snake_via_grids(in);
    run.report()["via_grids"] = snake_json(v);
    snake_verdicts(run, v, " (via grids)");
    run.verdict("direct and grid routes agree", snake_results_agree(r, v));
  }
  return run.finish();
}

int cmd_hom(Run& run, const Globals& g, const std::string& aseq, const std::string& eseq, bool additivity) {
  std::optional<Field> fo = parse_field_flag(g.field);
  json aj = run.load(aseq), ej = run.load(eseq);
  ShortExactSeq s = aseq_from_json(aj, fo);
  RightExactSeq e = eseq_from_json(ej, fo ? fo : std::optional<Field>(s.a.field()));
  Grid grid = hom_grid(s, e);
  ValidationReport v = validate(grid);
  run.report()["hom_grid"] = to_json(grid);
  run.verdict("Hom grid is commutative with exact rows and columns", v.valid());
  HomologyTable t = ccl_homology_dims(grid);
  run.report()["homology"] = {{"right", t.first}, {"bottom", t.second}};
  run.say("right homology: " + dims_text(t.first));
  run.say("bottom homology: " + dims_text(t.second));
  run.verdict("cokernel complexes have equal homology", t.equal());
  if (additivity) {
    AdditivityReport r = additivity_check(s, e);
    run.report()["additivity"] = {{"dim_E_A", r.dim_e_a},     {"dim_E_B", r.dim_e_b},
                                  {"dim_E_C", r.dim_e_c},     {"defect", r.defect},
                                  {"summand_flag", r.summand_flag}, {"summand_heuristic", r.summand_heuristic}};
    run.say("dim E(A), E(B), E(C) = " + std::to_string(r.dim_e_a) + ", " + std::to_string(r.dim_e_b) + ", " +
            std::to_string(r.dim_e_c) + "; defect " + std::to_string(r.defect));
    run.say(std::string("C is ") + (r.summand_flag ? "" : "not ") + "a summand of X+Y+Z" +
            (r.summand_heuristic ? " (randomized search)" : ""));
  }
  return run.finish();
}

struct GenOptions {
  std::string kind;
  std::uint64_t seed = 0;
  std::string shape = "3,3";
  std::size_t max_dim = 3;
  std::size_t length = 4;
  std::string orientation = "kernel";
  bool no_conjugate = false;
  std::string out, eseq_out;
};

void write_json(const std::string& path, const json& j) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream os(path);
  if (!os) throw Error(ErrorKind::parse, path + ": cannot write file");
  os << j.dump(2) << '\n';
}

int cmd_gen(const Globals& g, const GenOptions& o) {
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.field = parse_field_flag(g.field).value_or(Field::prime(2));
  if (o.max_dim < 1) throw Error(ErrorKind::shape, "--max-dim must be at least 1");
  cfg.max_dim = o.max_dim;
  cfg.conjugate = !o.no_conjugate;
  std::vector<std::size_t> lengths;
  std::stringstream ss(o.shape);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      lengths.push_back(std::stoul(part));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::shape, "--shape: expected comma-separated row lengths, got \"" + o.shape + "\"");
    }
  }
  cfg.shape = StaircaseShape(lengths);
  cfg.orientation = o.orientation == "cokernel" ? Orientation::cokernel : Orientation::kernel;

  json out;
  if (o.kind == "complex") {
    out = to_json(random_exact_complex(cfg, o.length));
  } else if (o.kind == "grid") {
    out = to_json(random_exact_grid(cfg));
  } else if (o.kind == "cross") {
    out = to_json(cfg.field, random_cross(cfg));
  } else if (o.kind == "snake") {
    out = to_json(random_snake_input(cfg));
  } else {
    QuiverInstance q = random_quiver_instance(cfg);
    if (!o.eseq_out.empty()) {
      write_json(o.out, to_json(q.a_seq));
      write_json(o.eseq_out, to_json(q.e_seq));
      return ok;
    }
    out = {{"aseq", to_json(q.a_seq)}, {"eseq", to_json(q.e_seq)}};
  }
  write_json(o.out, out);
  return ok;
}

int cmd_selftest(Run& run, std::size_t seeds, unsigned threads) {
  SelftestReport r = run_selftest(seeds, threads);
  json j = to_json(r);
  run.report()["prng"] = j["prng"];
  run.report()["seeds"] = j["seeds"];
  run.report()["suites"] = j["suites"];
  for (const auto& s : r.suites) {
    run.verdict(std::string(to_string(s.suite)) + " suite", s.failures.empty());
    run.say(std::string(to_string(s.suite)) + ": " + std::to_string(s.passed) + " passed, " +
            std::to_string(s.failures.size()) + " failed");
    for (const auto& [seed, msg] : s.failures) run.say("  seed " + std::to_string(seed) + ": " + msg);
  }
  return run.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diagram chasing over finite fields and the rationals"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_out, "Machine-readable JSON report on stdout");
  app.add_flag("--no-timing", g.no_timing, "Omit elapsed_ms so reports are byte-reproducible");
  app.add_flag("--quiet", g.quiet, "Suppress the human-readable report");
  app.add_option("--field", g.field, "Override the field: a prime p or Q");

  std::string grid_path, path2;
  std::size_t position = 0;
  bool iso = false, via_grids = false, additivity = false;
  std::size_t seeds = 200;
  unsigned threads = 0;
  GenOptions gen;

  auto* validate = app.add_subcommand("validate", "Check commutativity and exactness of a grid");
  validate->add_option("grid", grid_path, "Grid JSON")->required();
  for (const char* name : {"kcl", "ccl"}) {
    bool kernel = std::string(name) == "kcl";
    auto* sc = app.add_subcommand(name, kernel ? "Kernel complex homology of a kernel-oriented grid"
                                               : "Cokernel complex homology of a cokernel-oriented grid");
    sc->add_option("grid", grid_path, "Grid JSON")->required();
    sc->add_option("--position", position, "Only this (1-based) position");
    sc->add_flag("--iso", iso, "Print the homology isomorphisms");
  }
  auto* cross = app.add_subcommand("cross", "Check the three parts of the cross lemma");
  cross->add_option("cross", grid_path, "Cross JSON")->required();
  auto* snake_cmd = app.add_subcommand("snake", "Connecting map and six-term exact sequence");
  snake_cmd->add_option("snake", grid_path, "Snake JSON")->required();
  snake_cmd->add_flag("--via-grids", via_grids, "Also derive the result from the two complex lemmas");
  auto* hom = app.add_subcommand("hom", "Hom grid of a short exact and a right exact sequence");
  hom->add_option("aseq", grid_path, "Short exact sequence JSON")->required();
  hom->add_option("eseq", path2, "Right exact sequence JSON")->required();
  hom->add_flag("--additivity", additivity, "Report dim E on A, B, C and the summand search");
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
  gen_cmd->add_option("kind", gen.kind, "complex, grid, cross, snake or hom")
      ->required()
      ->check(CLI::IsMember({"complex", "grid", "cross", "snake", "hom"}));
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
  gen_cmd->add_option("--shape", gen.shape, "Row lengths, e.g. 3,3,2");
  gen_cmd->add_option("--max-dim", gen.max_dim, "Largest vertex dimension");
  gen_cmd->add_option("--length", gen.length, "Number of terms (complex)");
  gen_cmd->add_option("--orientation", gen.orientation, "kernel or cokernel (grid)")
      ->check(CLI::IsMember({"kernel", "cokernel"}));
  gen_cmd->add_flag("--no-conjugate", gen.no_conjugate, "Skip the random change of basis");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_option("--eseq-out", gen.eseq_out, "hom: write the right exact sequence here, the other to -o");
  auto* selftest = app.add_subcommand("selftest", "Run the property suite");
  selftest->add_option("--seeds", seeds, "Seeds per suite");
  selftest->add_option("--threads", threads, "Worker threads (0 = all cores)");
  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    app.parse(argc, argv);
    parse_field_flag(g.field);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage_error;
  }

  CLI::App* sc = app.get_subcommands().front();
  if (sc == gen_cmd) {
    try {
      return cmd_gen(g, gen);
    } catch (const Error& e) {
      std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
      return e.is_input_error() ? input_error : verdict_failed;
    }
  }
  Run run(g, sc->get_name());
  try {
    if (sc == validate) return cmd_validate(run, g, grid_path);
    if (sc->get_name() == "kcl" || sc->get_name() == "ccl")
      return cmd_lemma(run, g, grid_path, sc->get_name() == "kcl", position, iso);
    if (sc == cross) return cmd_cross(run, g, grid_path);
    if (sc == snake_cmd) return cmd_snake(run, g, grid_path, via_grids);
    if (sc == hom) return cmd_hom(run, g, grid_path, path2, additivity);
    return cmd_selftest(run, seeds, threads);
  } catch (const Error& e) {
    return run.fail(e);
  }
}
