#include "dchase/exactla.hpp"

#include <sstream>

#include "dchase/error.hpp"

namespace dchase {

namespace {

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows_ * cols_, ErrorKind::dimension_mismatch,
          "matrix entry count " + std::to_string(entries_.size()) + " does not match " + dims(*this));
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (auto r : rows) v.emplace_back(r);
  return from_ints(field, v);
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::dimension_mismatch, "ragged integer matrix literal");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].size() == rows, ErrorKind::dimension_mismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::dimension_mismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, c));
  return v;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  require(v.size() == cols_, ErrorKind::dimension_mismatch,
          "vector of length " + std::to_string(v.size()) + " applied to " + dims(*this) + " matrix");
  Vector out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = field_.zero();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_zero(v[j])) continue;
      acc = field_.add(acc, field_.mul(at(i, j), v[j]));
    }
    out[i] = std::move(acc);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!field_.is_zero(e)) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !field_.is_one(at(i, j)) : !field_.is_zero(at(i, j))) return false;
  return true;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix m(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
  return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m.at(i, j) = at(i, idx[j]);
  return m;
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
  Matrix m(field_, end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i - begin, j) = at(i, j);
  return m;
}

Matrix Matrix::col_range(std::size_t begin, std::size_t end) const {
  Matrix m(field_, rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) m.at(i, j - begin) = at(i, j);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, ErrorKind::dimension_mismatch,
          "cannot compose " + dims(a) + " after " + dims(b));
  const Field& f = a.field_;
  Matrix c(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (f.is_zero(bkj)) continue;
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, bkj));
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::dimension_mismatch,
          "cannot add " + dims(a) + " and " + dims(b));
  Matrix c(a.field_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) c.entries_[k] = a.field_.add(a.entries_[k], b.entries_[k]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::dimension_mismatch,
          "cannot subtract " + dims(a) + " and " + dims(b));
  Matrix c(a.field_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) c.entries_[k] = a.field_.sub(a.entries_[k], b.entries_[k]);
  return c;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix c(field_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) c.entries_[k] = field_.mul(entries_[k], s);
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", " : "") << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_.format(at(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorKind::dimension_mismatch, "hstack of " + dims(a) + " and " + dims(b));
  Matrix c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), ErrorKind::dimension_mismatch, "vstack of " + dims(a) + " and " + dims(b));
  Matrix c(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && f.is_zero(r.at(p, col))) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(row, j));
    if (!f.is_one(r.at(row, col))) {
      Scalar s = f.inv(r.at(row, col));
      for (std::size_t j = col; j < r.cols(); ++j) r.at(row, j) = f.mul(r.at(row, j), s);
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || f.is_zero(r.at(i, col))) continue;
      Scalar factor = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) {
        if (f.is_zero(r.at(row, j))) continue;
        r.at(i, j) = f.sub(r.at(i, j), f.mul(factor, r.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), row, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  require(b.size() == m.rows(), ErrorKind::dimension_mismatch, "right-hand side length mismatch");
  const Field& f = m.field();
  Matrix aug = hstack(m, Matrix::from_columns(f, m.rows(), {Vector(b.begin(), b.end())}));
  auto [red, rk, piv] = rref(aug);
  if (rk > 0 && piv.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), f.zero());
  for (std::size_t k = 0; k < rk; ++k) x[piv[k]] = red.at(k, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorKind::dimension_mismatch, "inverse of non-square " + dims(m));
  std::size_t n = m.rows();
  auto [red, rk, piv] = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (rk < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  return red.col_range(n, 2 * n);
}

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

bool is_zero_vector(const Field& field, std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!field.is_zero(s)) return false;
  return true;
}

Subspace Subspace::span(const Matrix& generators) {
  auto [red, rk, piv] = rref(generators);
  return Subspace(red.row_range(0, rk), std::move(piv));
}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<Vector>& generators) {
  return span(Matrix::from_rows(field, ambient, generators));
}

Subspace Subspace::zero(const Field& field, std::size_t ambient) { return Subspace(Matrix(field, 0, ambient), {}); }

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(piv));
}

Vector Subspace::basis_vector(std::size_t k) const {
  auto r = basis_.row(k);
  return Vector(r.begin(), r.end());
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  require(v.size() == ambient_dim(), ErrorKind::ambient_mismatch,
          "vector of length " + std::to_string(v.size()) + " tested against subspace of F^" +
              std::to_string(ambient_dim()));
  const Field& f = field();
  Vector c(dim());
  Vector residual(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    c[k] = v[pivots_[k]];
    if (f.is_zero(c[k])) continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      residual[j] = f.sub(residual[j], f.mul(c[k], basis_.at(k, j)));
  }
  if (!is_zero_vector(f, residual)) return std::nullopt;
  return c;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  auto [red, rk, piv] = rref(m);
  std::vector<Vector> gens;
  std::size_t k = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    if (k < rk && piv[k] == col) {
      ++k;
      continue;
    }
    Vector x(m.cols(), f.zero());
    x[col] = f.one();
    for (std::size_t r = 0; r < rk; ++r) x[piv[r]] = f.neg(red.at(r, col));
    gens.push_back(std::move(x));
  }
  return Subspace::span(f, m.cols(), gens);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), ErrorKind::ambient_mismatch, "sum of subspaces in different ambients");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace annihilator(const Subspace& w) { return kernel(w.basis()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), ErrorKind::ambient_mismatch,
          "intersection of subspaces in different ambients");
  // a ∩ b = Ann(Ann a + Ann b); the standard pairing is nondegenerate.
  return annihilator(sum(annihilator(a), annihilator(b)));
}

bool contains(const Subspace& a, std::span<const Scalar> v) { return a.contains(v); }

bool leq(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), ErrorKind::ambient_mismatch, "comparison of subspaces in different ambients");
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!b.contains(a.basis().row(k))) return false;
  return true;
}

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& w) {
  require(w.ambient_dim() == ambient_dim, ErrorKind::ambient_mismatch,
          "quotient of F^" + std::to_string(ambient_dim) + " by a subspace of F^" + std::to_string(w.ambient_dim()));
  const Field& f = w.field();
  std::vector<std::size_t> free_cols;
  std::vector<std::ptrdiff_t> pivot_row(ambient_dim, -1);
  for (std::size_t k = 0; k < w.dim(); ++k) pivot_row[w.pivots()[k]] = static_cast<std::ptrdiff_t>(k);
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (pivot_row[j] < 0) free_cols.push_back(j);
  std::size_t q = free_cols.size();

  Matrix proj(f, q, ambient_dim);
  Matrix sec(f, ambient_dim, q);
  for (std::size_t t = 0; t < q; ++t) {
    proj.at(t, free_cols[t]) = f.one();
    sec.at(free_cols[t], t) = f.one();
    for (std::size_t k = 0; k < w.dim(); ++k)
      proj.at(t, w.pivots()[k]) = f.neg(w.basis().at(k, free_cols[t]));
  }
  return {ambient_dim, w, q, std::move(proj), std::move(sec)};
}

Matrix induced_map(const Matrix& f, const Subspace& u, const Subspace& w) {
  require(f.cols() == u.ambient_dim() && f.rows() == w.ambient_dim(), ErrorKind::dimension_mismatch,
          "induced map: " + dims(f) + " does not act F^" + std::to_string(u.ambient_dim()) + " -> F^" +
              std::to_string(w.ambient_dim()));
  std::vector<Vector> cols;
  cols.reserve(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) {
    Vector image_k = f.apply(u.basis().row(k));
    auto c = w.coordinates(image_k);
    if (!c)
      throw Error(ErrorKind::not_induced,
                  "basis vector " + format_vector(f.field(), u.basis().row(k)) + " maps to " +
                      format_vector(f.field(), image_k) + ", outside the target subspace");
    cols.push_back(std::move(*c));
  }
  return Matrix::from_columns(f.field(), w.dim(), cols);
}

Matrix induced_quotient_map(const Matrix& f, const QuotientSpace& src, const QuotientSpace& dst) {
  require(f.cols() == src.ambient_dim && f.rows() == dst.ambient_dim, ErrorKind::dimension_mismatch,
          "induced quotient map: shape " + dims(f) + " mismatch");
  Matrix killed = dst.projection * f * src.subspace.inclusion();
  if (!killed.is_zero())
    throw Error(ErrorKind::not_induced, "map does not send the source subspace into the target subspace");
  return dst.projection * f * src.section;
}

std::string format_vector(const Field& field, std::span<const Scalar> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + field.format(v[i]);
  return s + ")";
}

}  // namespace dchase
