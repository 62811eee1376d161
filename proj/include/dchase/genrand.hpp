#pragma once

// Seeded generators of valid instances. Every generator is a pure function of
// its config and re-checks its output with the owning module's validator.

#include <cstdint>
#include <optional>
#include <utility>

#include "dchase/complex.hpp"
#include "dchase/grid.hpp"
#include "dchase/prng.hpp"
#include "dchase/quiverhom.hpp"
#include "dchase/snake.hpp"

namespace dchase {

struct GenConfig {
  std::uint64_t seed = 0;
  Field field = Field::prime(2);
  std::size_t max_dim = 3;  // >= 1
  StaircaseShape shape = StaircaseShape::rectangle(3, 3);
  Orientation orientation = Orientation::kernel;
  bool conjugate = true;
  // Snake inputs: force f monic / g' onto (or their failure); nullopt = coin flip.
  std::optional<bool> f_monic;
  std::optional<bool> gp_epi;
};

// Uniform-ish scalar: any residue for F_p, an integer in [-3, 3] for Q.
Scalar random_scalar(const Field& field, SplitMix64& rng);
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, SplitMix64& rng);

// (P, P^-1), P a product of seeded elementary row operations.
std::pair<Matrix, Matrix> random_invertible(const Field& field, std::size_t n, SplitMix64& rng);

// `length` terms, exact at every interior position.
ChainComplex random_exact_complex(const GenConfig& cfg, std::size_t length);

// A valid grid of cfg.shape in cfg.orientation.
Grid random_exact_grid(const GenConfig& cfg);

// Conjugate every cell by a seeded invertible matrix, transporting the maps.
Grid conjugate_grid(const Grid& g, SplitMix64& rng);

struct Cross {
  Matrix beta1, beta2, f, g;
};

Cross random_cross(const GenConfig& cfg);

SnakeInput random_snake_input(const GenConfig& cfg);

struct QuiverInstance {
  ShortExactSeq a_seq;
  RightExactSeq e_seq;
};

// Both sequences on the quiver 1 -> 2 with vertex dims <= min(max_dim, 2).
QuiverInstance random_quiver_instance(const GenConfig& cfg);

}  // namespace dchase
