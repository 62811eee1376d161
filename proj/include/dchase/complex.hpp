#pragma once

#include <vector>

#include "dchase/exactla.hpp"

namespace dchase {

// dims[0] -> dims[1] -> ... -> dims[n], maps[i] : dims[i] -> dims[i+1].
// Finite, with no implicit zero extension: position 0 has no incoming
// boundaries and every vector at position n is a cycle.
class ChainComplex {
 public:
  ChainComplex(Field field, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  const Field& field() const { return field_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Matrix>& maps() const { return maps_; }
  // Number of terms.
  std::size_t size() const { return dims_.size(); }

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    return a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

struct HomologyAt {
  std::size_t position;
  Subspace cycles;      // in F^dims[position]
  Subspace boundaries;  // in F^dims[position]
  std::size_t dim;
  // Quotient of the cycle coordinates by the boundaries written in them.
  QuotientSpace quotient;
  // cycle coordinates -> homology coordinates
  Matrix class_of;

  // Representative cycle (ambient coordinates) of homology basis vector t.
  Vector representative(std::size_t t) const;
  // Homology class of an ambient cycle; throws Error(not_induced) if z is not a cycle.
  Vector class_of_cycle(std::span<const Scalar> z) const;
};

bool is_complex(const ChainComplex& c);
// Throws Error(not_complex) naming the first i with maps[i+1] maps[i] != 0.
void require_complex(const ChainComplex& c);
HomologyAt homology_at(const ChainComplex& c, std::size_t i);
bool is_exact_at(const ChainComplex& c, std::size_t i);
std::vector<std::size_t> homology_dims(const ChainComplex& c);

}  // namespace dchase
