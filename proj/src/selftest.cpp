#include "dchase/selftest.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "dchase/error.hpp"
#include "dchase/relation.hpp"

namespace dchase {

namespace {

std::string dims_string(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ']';
  return os.str();
}

StaircaseShape random_staircase(SplitMix64& rng, std::size_t max_side) {
  std::size_t rows = rng.between(2, static_cast<std::int64_t>(max_side));
  std::vector<std::size_t> lengths{static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(max_side)))};
  while (lengths.size() < rows) lengths.push_back(rng.between(1, static_cast<std::int64_t>(lengths.back())));
  return StaircaseShape(lengths);
}

std::optional<std::string> check_complex(const GenConfig& cfg, std::uint64_t seed) {
  std::size_t length = 2 + seed % 5;
  ChainComplex c = random_exact_complex(cfg, length);
  if (!is_complex(c)) return "not a complex";
  for (std::size_t k = 1; k + 1 < length; ++k)
    if (!is_exact_at(c, k)) return "not exact at position " + std::to_string(k);
  return std::nullopt;
}

std::optional<std::string> check_kcl(const GenConfig& cfg, std::uint64_t seed) {
  Grid g = random_exact_grid(cfg);
  HomologyTable t = kcl_homology_dims(g);
  if (!t.equal()) return "top " + dims_string(t.first) + " != left " + dims_string(t.second);
  for (std::size_t n = 1; n <= t.first.size(); ++n) {
    HomologyIso iso = kcl_homology_iso(g, n);
    if (iso.matrix.rows() != iso.matrix.cols() || rank(iso.matrix) != iso.matrix.rows())
      return "iso at position " + std::to_string(n) + " is not invertible";
    if (!(kcl_homology_iso(g, n, seed + 1).matrix == iso.matrix))
      return "iso at position " + std::to_string(n) + " depends on the chosen witness";
  }
  SplitMix64 rng(seed ^ 0xc0ffeeULL);
  HomologyTable c = kcl_homology_dims(conjugate_grid(g, rng));
  if (c.first != t.first || c.second != t.second) return "homology changed under conjugation";
  return std::nullopt;
}

std::optional<std::string> check_ccl(const GenConfig& cfg, std::uint64_t) {
  Grid g = random_exact_grid(cfg);
  HomologyTable t = ccl_homology_dims(g);
  if (!t.equal()) return "right " + dims_string(t.first) + " != bottom " + dims_string(t.second);
  // the duality route against homology of the cokernel complexes themselves
  ChainComplex right = cokernel_complex_right(g), bottom = cokernel_complex_bottom(g);
  for (std::size_t n = 1; n <= t.first.size(); ++n) {
    if (homology_at(right, g.shape().rows() - n).dim != t.first[n - 1] ||
        homology_at(bottom, g.shape().row_length(0) - n).dim != t.second[n - 1])
      return "duality dims disagree with the direct cokernel complexes at position " + std::to_string(n);
    HomologyIso iso = ccl_homology_iso(g, n);
    if (iso.matrix.rows() != iso.matrix.cols() || rank(iso.matrix) != iso.matrix.rows())
      return "iso at position " + std::to_string(n) + " is not invertible";
  }
  return std::nullopt;
}

std::optional<std::string> check_cross(const GenConfig& cfg, std::uint64_t) {
  Cross c = random_cross(cfg);
  CrossReport r = verify_cross_lemma(c.beta1, c.beta2, c.f, c.g);
  if (!r.part1) return "part (1) fails";
  if (!r.part2a) return "part (2a) fails";
  if (!r.part2b) return "part (2b) fails";
  if (r.enumeration_agrees == false) return "enumeration disagrees";
  return std::nullopt;
}

std::optional<std::string> check_corollary(const GenConfig& cfg, std::uint64_t) {
  CorollaryReport r = corollary_check(random_exact_grid(cfg));
  if (!r.holds()) return "top " + dims_string(r.top_dims) + " vs left " + dims_string(r.left_dims);
  return std::nullopt;
}

std::optional<std::string> check_snake(const GenConfig& cfg, std::uint64_t) {
  SnakeInput in = random_snake_input(cfg);
  SnakeResult direct = snake(in);
  SnakeResult grids = snake_via_grids(in);
  if (!direct.all_exact()) return "six-term sequence not exact";
  if (!grids.all_exact()) return "six-term sequence from the grids not exact";
  if (!snake_results_agree(direct, grids)) return "direct and grid-derived connecting maps differ";
  if (!direct.addenda_hold() || !grids.addenda_hold()) return "addenda fail";
  if (direct.f_monic_iff.first != *cfg.f_monic || direct.gp_epi_iff.first != *cfg.gp_epi)
    return "generator ignored the requested (monic, epi) pattern";
  return std::nullopt;
}

std::optional<std::string> check_hom(const GenConfig& cfg, std::uint64_t) {
  QuiverInstance inst = random_quiver_instance(cfg);
  AdditivityReport r = additivity_check(inst.a_seq, inst.e_seq);
  if (!r.cokernel_homology.equal())
    return "cokernel homology " + dims_string(r.cokernel_homology.first) + " vs " +
           dims_string(r.cokernel_homology.second);
  return std::nullopt;
}

}  // namespace

const char* to_string(Suite s) {
  switch (s) {
    case Suite::complex: return "complex";
    case Suite::kcl: return "kcl";
    case Suite::ccl: return "ccl";
    case Suite::cross: return "cross";
    case Suite::corollary: return "corollary";
    case Suite::snake: return "snake";
    case Suite::hom: return "hom";
  }
  return "?";
}

GenConfig suite_config(Suite s, std::uint64_t seed) {
  GenConfig cfg;
  // distinct streams per suite, except that ccl reuses the kcl grids
  Suite stream = s == Suite::ccl ? Suite::kcl : s;
  cfg.seed = seed * 16 + static_cast<std::uint64_t>(stream) + 1;
  SplitMix64 rng(cfg.seed ^ 0x5eedULL);
  Field f2 = Field::prime(2), f5 = Field::prime(5);
  switch (s) {
    case Suite::complex:
      cfg.field = seed % 3 == 0 ? f2 : seed % 3 == 1 ? f5 : Field::rationals();
      cfg.max_dim = 6;
      break;
    case Suite::kcl:
    case Suite::ccl:
      cfg.field = seed % 2 ? f5 : f2;
      cfg.max_dim = 6;
      cfg.shape = random_staircase(rng, 5);
      cfg.orientation = s == Suite::kcl ? Orientation::kernel : Orientation::cokernel;
      break;
    case Suite::cross:
      cfg.field = seed % 2 ? f5 : f2;
      cfg.max_dim = 3;
      break;
    case Suite::corollary:
      cfg.field = seed % 2 ? f5 : f2;
      cfg.max_dim = 4;
      cfg.shape = StaircaseShape({3, 3, 2});
      break;
    case Suite::snake:
      cfg.field = (seed >> 2) % 3 == 0 ? f5 : (seed >> 2) % 3 == 1 ? f2 : Field::rationals();
      cfg.max_dim = 2 + (seed >> 3) % 2;
      cfg.f_monic = (seed & 1) != 0;
      cfg.gp_epi = (seed & 2) != 0;
      break;
    case Suite::hom:
      cfg.field = seed % 4 == 3 ? f5 : f2;
      cfg.max_dim = 2;
      break;
  }
  return cfg;
}

std::optional<std::string> check_instance(Suite s, std::uint64_t seed) {
  GenConfig cfg = suite_config(s, seed);
  try {
    switch (s) {
      case Suite::complex: return check_complex(cfg, seed);
      case Suite::kcl: return check_kcl(cfg, seed);
      case Suite::ccl: return check_ccl(cfg, seed);
      case Suite::cross: return check_cross(cfg, seed);
      case Suite::corollary: return check_corollary(cfg, seed);
      case Suite::snake: return check_snake(cfg, seed);
      case Suite::hom: return check_hom(cfg, seed);
    }
  } catch (const Error& e) {
    return std::string(to_string(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  return std::nullopt;
}

bool SelftestReport::ok() const {
  for (const auto& s : suites)
    if (!s.failures.empty()) return false;
  return true;
}

SelftestReport run_selftest(std::size_t seeds, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t jobs = all_suites.size() * seeds;
  std::vector<std::optional<std::string>> outcome(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < jobs;) outcome[k] = check_instance(all_suites[k / seeds], k % seeds);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads && t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SelftestReport rep{seeds, {}};
  for (std::size_t s = 0; s < all_suites.size(); ++s) {
    SuiteResult r{all_suites[s], 0, {}};
    for (std::size_t seed = 0; seed < seeds; ++seed) {
      auto& o = outcome[s * seeds + seed];
      if (o)
        r.failures.push_back({seed, *o});
      else
        ++r.passed;
    }
    rep.suites.push_back(std::move(r));
  }
  return rep;
}

json to_json(const SelftestReport& r) {
  json suites = json::array();
  for (const auto& s : r.suites) {
    json failures = json::array();
    for (const auto& [seed, msg] : s.failures) failures.push_back({{"seed", seed}, {"message", msg}});
    suites.push_back({{"suite", to_string(s.suite)},
                      {"passed", s.passed},
                      {"failed", s.failures.size()},
                      {"failures", std::move(failures)}});
  }
  return {{"seeds", r.seeds}, {"prng", SplitMix64::algorithm}, {"suites", std::move(suites)}, {"ok", r.ok()}};
}

}  // namespace dchase
