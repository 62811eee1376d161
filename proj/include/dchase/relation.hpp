#pragma once

// Relations on B x A, i.e. subspaces of B ⊕ A, with the calculus used for
// diagram chasing: graphs, inverses, composition and witness sets.

#include <optional>

#include "dchase/exactla.hpp"

namespace dchase {

// Coordinates of the ambient space are (left block, right block) = (B, A), so
// the graph of f : A -> B consists of the pairs (f(a), a).
class Relation {
 public:
  Relation(std::size_t left_dim, std::size_t right_dim, Subspace space);

  std::size_t left_dim() const { return left_dim_; }
  std::size_t right_dim() const { return right_dim_; }
  const Subspace& space() const { return space_; }
  const Field& field() const { return space_.field(); }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.left_dim_ == b.left_dim_ && a.right_dim_ == b.right_dim_ && a.space_ == b.space_;
  }

 private:
  std::size_t left_dim_;
  std::size_t right_dim_;
  Subspace space_;
};

Relation graph(const Matrix& f);
Relation inverse(const Relation& r);
Relation inverse_graph(const Matrix& f);
// r on B x A, s on A x C  ->  r ∘ s on B x C.
Relation compose(const Relation& r, const Relation& s);
bool member(const Relation& r, std::span<const Scalar> b, std::span<const Scalar> a);

// {a : (b, a) in r for some b}
Subspace right_projection(const Relation& r);
// {b : (b, a) in r for some a}
Subspace left_projection(const Relation& r);

// The set {b : (b, a) in r} as particular + homogeneous. `particular` is
// absent when the set is empty; `homogeneous` = {b : (b, 0) in r} always.
struct WitnessSet {
  std::optional<Vector> particular;
  Subspace homogeneous;
};

WitnessSet witnesses(const Relation& r, std::span<const Scalar> a);

// The single-valued map encoded by r, when r is the graph of a map defined on
// all of its right space.
std::optional<Matrix> as_map(const Relation& r);

// Verdicts for the three parts of the cross lemma on
//
//          B1
//          | beta1
//   A --f--> B2 --g--> C
//          | beta2
//          B3
struct CrossReport {
  bool part1;   // for (c, b3) in g∘beta2^-1: b3 in Im beta2 f  <=>  c in Im g beta1
  bool part2a;  // a in Ker beta2 f  <=>  (b1, a) in beta1^-1∘f for some b1
  bool part2b;  // b1 in Ker g beta1  <=>  (b1, a) in beta1^-1∘f for some a
  // Present when the cross is small enough (F_2, every dim <= 3) for an
  // element-by-element check; true iff that check agrees with the verdicts.
  std::optional<bool> enumeration_agrees;

  bool all_hold() const { return part1 && part2a && part2b && enumeration_agrees.value_or(true); }
};

// Throws Error(hypothesis_failure) when the row or the column is not exact at
// B2, Error(dimension_mismatch) when the maps do not form a cross.
CrossReport verify_cross_lemma(const Matrix& beta1, const Matrix& beta2, const Matrix& f, const Matrix& g);

}  // namespace dchase
