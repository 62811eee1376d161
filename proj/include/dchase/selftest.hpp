#pragma once

// The built-in property suite behind `dchase selftest`. Instance recipes are
// exposed so the acceptance binary runs exactly the same instances.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dchase/genrand.hpp"
#include "dchase/io.hpp"

namespace dchase {

enum class Suite { complex, kcl, ccl, cross, corollary, snake, hom };

const char* to_string(Suite s);
inline constexpr std::array all_suites{Suite::complex, Suite::kcl,   Suite::ccl, Suite::cross,
                                       Suite::corollary, Suite::snake, Suite::hom};

// Deterministic config for instance `seed` of a suite: kcl/ccl alternate F_2
// and F_5 on staircases up to 5x5 with dims <= 6; snake forces the
// (f monic, g' epi) pattern from the two low bits of the seed.
GenConfig suite_config(Suite s, std::uint64_t seed);

// nullopt on success, otherwise a description of the failure. Library errors
// raised while checking count as failures.
std::optional<std::string> check_instance(Suite s, std::uint64_t seed);

struct SuiteResult {
  Suite suite;
  std::size_t passed = 0;
  std::vector<std::pair<std::uint64_t, std::string>> failures;  // ordered by seed
};

struct SelftestReport {
  std::size_t seeds;
  std::vector<SuiteResult> suites;
  bool ok() const;
};

// Seeds 0..seeds-1 of every suite, fanned out over `threads` workers
// (0 = hardware concurrency). The result does not depend on `threads`.
SelftestReport run_selftest(std::size_t seeds, unsigned threads = 0);

json to_json(const SelftestReport& r);

}  // namespace dchase
