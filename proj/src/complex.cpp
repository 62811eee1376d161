#include "dchase/complex.hpp"

#include "dchase/error.hpp"

namespace dchase {

ChainComplex::ChainComplex(Field field, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.empty()) throw Error(ErrorKind::dimension_mismatch, "a complex needs at least one term");
  if (maps_.size() + 1 != dims_.size())
    throw Error(ErrorKind::dimension_mismatch, "complex with " + std::to_string(dims_.size()) + " terms needs " +
                                                   std::to_string(dims_.size() - 1) + " maps");
  for (std::size_t i = 0; i < maps_.size(); ++i)
    if (maps_[i].cols() != dims_[i] || maps_[i].rows() != dims_[i + 1])
      throw Error(ErrorKind::dimension_mismatch, "map " + std::to_string(i) + " is " +
                                                     std::to_string(maps_[i].rows()) + "x" +
                                                     std::to_string(maps_[i].cols()) + ", expected " +
                                                     std::to_string(dims_[i + 1]) + "x" + std::to_string(dims_[i]));
}

Vector HomologyAt::representative(std::size_t t) const {
  return cycles.inclusion().apply(quotient.section.column(t));
}

Vector HomologyAt::class_of_cycle(std::span<const Scalar> z) const {
  auto coords = cycles.coordinates(z);
  if (!coords)
    throw Error(ErrorKind::not_induced, "vector " + format_vector(cycles.field(), z) + " is not a cycle");
  return class_of.apply(*coords);
}

bool is_complex(const ChainComplex& c) {
  for (std::size_t i = 0; i + 1 < c.maps().size(); ++i)
    if (!(c.maps()[i + 1] * c.maps()[i]).is_zero()) return false;
  return true;
}

void require_complex(const ChainComplex& c) {
  for (std::size_t i = 0; i + 1 < c.maps().size(); ++i)
    if (!(c.maps()[i + 1] * c.maps()[i]).is_zero())
      throw Error(ErrorKind::not_complex, "composite of maps " + std::to_string(i) + " and " +
                                              std::to_string(i + 1) + " is nonzero");
}

HomologyAt homology_at(const ChainComplex& c, std::size_t i) {
  require_complex(c);
  if (i >= c.size())
    throw Error(ErrorKind::dimension_mismatch, "position " + std::to_string(i) + " outside a complex of " +
                                                   std::to_string(c.size()) + " terms");
  const Field& f = c.field();
  std::size_t n = c.dims()[i];
  Subspace cycles = i + 1 < c.size() ? kernel(c.maps()[i]) : Subspace::full(f, n);
  Subspace boundaries = i > 0 ? image(c.maps()[i - 1]) : Subspace::zero(f, n);

  // boundaries rewritten in cycle coordinates
  std::vector<Vector> rel;
  for (std::size_t k = 0; k < boundaries.dim(); ++k) {
    auto coords = cycles.coordinates(boundaries.basis().row(k));
    if (!coords) throw Error(ErrorKind::not_complex, "boundary outside the cycles at position " + std::to_string(i));
    rel.push_back(std::move(*coords));
  }
  QuotientSpace q = quotient(cycles.dim(), Subspace::span(f, cycles.dim(), rel));
  std::size_t d = q.dim;
  Matrix class_of = q.projection;
  return HomologyAt{i, std::move(cycles), std::move(boundaries), d, std::move(q), std::move(class_of)};
}

bool is_exact_at(const ChainComplex& c, std::size_t i) { return homology_at(c, i).dim == 0; }

std::vector<std::size_t> homology_dims(const ChainComplex& c) {
  std::vector<std::size_t> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(homology_at(c, i).dim);
  return out;
}

}  // namespace dchase
