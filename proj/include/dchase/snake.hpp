#pragma once

// The snake lemma for
//
//        A --f--> B --g--> C --> 0
//        |alpha   |beta    |gamma
//   0 -> A'-f'--> B'-g'--> C'
//
// computed twice: by chasing relations directly, and by running the kernel and
// cokernel complex lemmas on two auxiliary grids.

#include <optional>
#include <utility>
#include <vector>

#include "dchase/complex.hpp"
#include "dchase/grid.hpp"

namespace dchase {

struct SnakeInput {
  Field field;
  Matrix f, g, fp, gp, alpha, beta, gamma;
};

// Throws Error(dimension_mismatch) for incompatible shapes and
// Error(hypothesis_failure) naming the failing square or row position.
void require_snake_hypotheses(const SnakeInput& in);

struct SnakeResult {
  // Ker alpha -> Ker beta -> Ker gamma -> Cok alpha -> Cok beta -> Cok gamma
  ChainComplex six_term;
  Matrix delta;  // Ker gamma coordinates -> Cok alpha coordinates
  // exactness at Ker beta, Ker gamma, Cok alpha, Cok beta
  std::vector<bool> exact;
  std::pair<bool, bool> f_monic_iff;   // (f monic, Ker alpha -> Ker beta monic)
  std::pair<bool, bool> gp_epi_iff;    // (g' onto, Cok beta -> Cok gamma onto)

  bool all_exact() const;
  bool addenda_hold() const { return f_monic_iff.first == f_monic_iff.second && gp_epi_iff.first == gp_epi_iff.second; }
};

SnakeResult snake(const SnakeInput& in);

// The same result derived from the corollary on the Gamma grid
//   A  B  C / A' B' C' / Cok alpha  Cok beta
// and the cokernel complex lemma on the 4x4 grid with rows
//   Ker f~ Ker alpha Ker beta Ker gamma / Ker f A B C / 0 A' B' C'
// bordered by zeros; delta comes from the homology isomorphism at position 3.
SnakeResult snake_via_grids(const SnakeInput& in);

// The two auxiliary grids, exposed for inspection and tests.
Grid snake_kernel_grid(const SnakeInput& in);
Grid snake_cokernel_grid(const SnakeInput& in);

// Equal six-term homology dims and equal graph(delta).
bool snake_results_agree(const SnakeResult& a, const SnakeResult& b);

}  // namespace dchase
