#pragma once

// Exact linear algebra over F_p and Q: dense matrices, canonical (RREF)
// subspaces, quotients and induced maps. Every other module computes on this.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dchase/field.hpp"

namespace dchase {

using Vector = std::vector<Scalar>;

// A linear map F^cols -> F^rows as a dense row-major matrix. Empty shapes
// (0 rows or 0 cols) are ordinary values.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return Matrix(field, rows, cols); }
  static Matrix identity(Field field, std::size_t n);
  // Integer literal entries, reduced into the field. rows x cols is taken from
  // the nested list; an empty list gives 0x0 unless cols is passed.
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols = 0);
  // Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;
  const std::vector<Scalar>& entries() const { return entries_; }

  Vector apply(std::span<const Scalar> v) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;
  Matrix row_range(std::size_t begin, std::size_t end) const;
  Matrix col_range(std::size_t begin, std::size_t end) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

// [a | b], same row count.
Matrix hstack(const Matrix& a, const Matrix& b);
// [a ; b], same column count.
Matrix vstack(const Matrix& a, const Matrix& b);
// diag(a, b)
Matrix block_diag(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Particular solution of m x = b with all free variables set to zero, or
// nullopt when b is outside the column space.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

// Inverse of a square matrix, nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

Vector zero_vector(const Field& field, std::size_t n);
bool is_zero_vector(const Field& field, std::span<const Scalar> v);

// A subspace of F^n in canonical form: its basis rows are the nonzero rows of
// a reduced row-echelon matrix, so equal subspaces have identical bases.
class Subspace {
 public:
  // Span of the rows of `generators` (any number of rows, cols == ambient).
  static Subspace span(const Matrix& generators);
  static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vector>& generators);
  static Subspace zero(const Field& field, std::size_t ambient);
  static Subspace full(const Field& field, std::size_t ambient);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  // dim x ambient, in RREF.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t k) const;

  bool contains(std::span<const Scalar> v) const;
  // Coordinates of v in the canonical basis, nullopt if v is not in the subspace.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  // ambient x dim; columns are the basis vectors.
  Matrix inclusion() const { return basis_.transpose(); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

// Lattice operations; both arguments must share an ambient space.
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, std::span<const Scalar> v);
bool leq(const Subspace& a, const Subspace& b);

// {x : <y, x> = 0 for all y in w}
Subspace annihilator(const Subspace& w);

// F^n / W with explicit coordinates. The section lifts quotient coordinate t
// to the t-th non-pivot unit vector of W's RREF basis.
struct QuotientSpace {
  std::size_t ambient_dim;
  Subspace subspace;
  std::size_t dim;
  Matrix projection;  // dim x ambient_dim
  Matrix section;     // ambient_dim x dim
};

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& w);

// Matrix of f : u -> w in the canonical bases of u and w. Throws
// Error(not_induced) naming the first basis vector of u whose image leaves w.
Matrix induced_map(const Matrix& f, const Subspace& u, const Subspace& w);

// Matrix of f between quotients: [x] -> [f x]. Requires f(src.subspace) in
// dst.subspace; throws Error(not_induced) otherwise.
Matrix induced_quotient_map(const Matrix& f, const QuotientSpace& src, const QuotientSpace& dst);

std::string format_vector(const Field& field, std::span<const Scalar> v);

}  // namespace dchase
