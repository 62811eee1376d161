#pragma once

// Representations of quivers (path algebras without relations), Hom spaces
// between them, and the 3x3 Hom grid built from a short exact sequence
// 0 -> A -> B -> C -> 0 and a right exact sequence X -> Y -> Z -> 0.

#include <optional>
#include <utility>
#include <vector>

#include "dchase/grid.hpp"

namespace dchase {

struct Quiver {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

class Representation {
 public:
  // Throws Error(dimension_mismatch) if an arrow map does not fit the vertex
  // spaces, Error(parse) if an arrow leaves the vertex range.
  Representation(Field field, Quiver quiver, std::vector<std::size_t> vertex_dims, std::vector<Matrix> arrow_maps);
  static Representation zero(Field field, Quiver quiver);

  const Field& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<std::size_t>& vertex_dims() const { return vertex_dims_; }
  const std::vector<Matrix>& arrow_maps() const { return arrow_maps_; }
  std::size_t total_dim() const;

 private:
  Field field_;
  Quiver quiver_;
  std::vector<std::size_t> vertex_dims_;
  std::vector<Matrix> arrow_maps_;
};

// Vertexwise components of a morphism of representations.
struct RepMap {
  std::vector<Matrix> components;
};

bool is_morphism(const RepMap& m, const Representation& source, const Representation& target);
RepMap compose(const RepMap& second, const RepMap& first);
RepMap identity_map(const Representation& r);

struct HomSpace {
  std::size_t dim;
  std::vector<RepMap> basis;
  // Solutions as vectors of stacked components, ordered by (vertex, row, col).
  Subspace solutions;

  // Coordinates of a morphism in `basis`; nullopt if it is not in the space.
  std::optional<Vector> coordinates(const RepMap& m) const;
};

// Throws Error(dimension_mismatch) on different quivers or fields.
HomSpace hom_space(const Representation& x, const Representation& y);

// Hom(w, b) -> Hom(w, c), phi -> g phi, in the canonical Hom bases.
Matrix hom_map_covariant(const Representation& w, const Representation& b, const Representation& c, const RepMap& g);
// Hom(y, a) -> Hom(x, a), psi -> psi u.
Matrix hom_map_contravariant(const Representation& x, const Representation& y, const RepMap& u, const Representation& a);

Representation direct_sum(const std::vector<Representation>& reps);

// 0 -> a -> b -> c -> 0
struct ShortExactSeq {
  Representation a, b, c;
  RepMap incl, proj;
};

// x -> y -> z -> 0
struct RightExactSeq {
  Representation x, y, z;
  RepMap u, proj;
};

// Vertexwise checks; throw Error(hypothesis_failure) naming the vertex.
void require_short_exact(const ShortExactSeq& s);
void require_right_exact(const RightExactSeq& e);

// The cokernel-oriented 4x4 grid with cell (i,j) = Hom(W_i, M_j), rows
// W = X, Y, Z, 0 from the bottom and columns M = C, B, A, 0 from the right.
Grid hom_grid(const ShortExactSeq& s, const RightExactSeq& e);

// dim Cok(Hom(u, a)) = dim E(a) for the functor presented by e.
std::size_t functor_dim(const RightExactSeq& e, const Representation& a);

struct SummandSearch {
  bool found;
  bool heuristic;  // true when the search was randomized and found nothing
};

// Whether c is isomorphic to a direct summand of m: a pair phi : c -> m,
// psi : m -> c with psi phi = id. The zero representation is never reported.
SummandSearch find_summand(const Representation& c, const Representation& m, std::uint64_t seed = 0);

struct AdditivityReport {
  std::size_t dim_e_a, dim_e_b, dim_e_c;
  long defect;  // dim E(A) + dim E(C) - dim E(B)
  HomologyTable cokernel_homology;  // (right column, bottom row) of the Hom grid
  bool summand_flag;
  bool summand_heuristic;
};

AdditivityReport additivity_check(const ShortExactSeq& s, const RightExactSeq& e);

}  // namespace dchase
