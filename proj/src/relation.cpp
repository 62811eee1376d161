#include "dchase/relation.hpp"

#include <numeric>

#include "dchase/error.hpp"

namespace dchase {

namespace {

std::vector<std::size_t> index_range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> v(end - begin);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

Vector concat(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vector v(a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

// Every vector of F_p^n, in lexicographic order of residues.
std::vector<Vector> all_vectors(const Field& field, std::size_t n) {
  std::vector<Vector> out;
  Vector v(n, field.zero());
  auto p = field.characteristic();
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n) {
      auto r = v[i].residue() + 1;
      if (r < p) {
        v[i] = Scalar(r);
        break;
      }
      v[i] = field.zero();
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

bool in_image(const std::vector<Vector>& domain, const Matrix& m, const Vector& y) {
  for (const auto& x : domain)
    if (m.apply(x) == y) return true;
  return false;
}

}  // namespace

Relation::Relation(std::size_t left_dim, std::size_t right_dim, Subspace space)
    : left_dim_(left_dim), right_dim_(right_dim), space_(std::move(space)) {
  if (space_.ambient_dim() != left_dim_ + right_dim_)
    throw Error(ErrorKind::ambient_mismatch, "relation space does not live in F^" + std::to_string(left_dim_) +
                                                 " ⊕ F^" + std::to_string(right_dim_));
}

Relation graph(const Matrix& f) {
  // rows (f e_j, e_j)
  Matrix gens = hstack(f.transpose(), Matrix::identity(f.field(), f.cols()));
  return Relation(f.rows(), f.cols(), Subspace::span(gens));
}

Relation inverse(const Relation& r) {
  std::size_t b = r.left_dim(), a = r.right_dim();
  auto order = index_range(b, b + a);
  auto left = index_range(0, b);
  order.insert(order.end(), left.begin(), left.end());
  return Relation(a, b, Subspace::span(r.space().basis().select_cols(order)));
}

Relation inverse_graph(const Matrix& f) {
  Matrix gens = hstack(Matrix::identity(f.field(), f.cols()), f.transpose());
  return Relation(f.cols(), f.rows(), Subspace::span(gens));
}

Relation compose(const Relation& r, const Relation& s) {
  if (r.right_dim() != s.left_dim())
    throw Error(ErrorKind::dimension_mismatch, "cannot compose relations through F^" + std::to_string(r.right_dim()) +
                                                   " and F^" + std::to_string(s.left_dim()));
  const Field& f = r.field();
  std::size_t b = r.left_dim(), a = r.right_dim(), c = s.right_dim();
  // Inside B ⊕ A ⊕ C: (r ⊕ C) ∩ (B ⊕ s), then forget A.
  Matrix r_part = block_diag(r.space().basis(), Matrix::identity(f, c));
  Matrix s_part = block_diag(Matrix::identity(f, b), s.space().basis());
  Subspace meet = intersect(Subspace::span(r_part), Subspace::span(s_part));
  auto keep = index_range(0, b);
  auto tail = index_range(b + a, b + a + c);
  keep.insert(keep.end(), tail.begin(), tail.end());
  return Relation(b, c, Subspace::span(meet.basis().select_cols(keep)));
}

bool member(const Relation& r, std::span<const Scalar> b, std::span<const Scalar> a) {
  if (b.size() != r.left_dim() || a.size() != r.right_dim())
    throw Error(ErrorKind::dimension_mismatch, "membership query with wrong vector lengths");
  return r.space().contains(concat(b, a));
}

Subspace right_projection(const Relation& r) {
  auto cols = index_range(r.left_dim(), r.left_dim() + r.right_dim());
  return Subspace::span(r.space().basis().select_cols(cols));
}

Subspace left_projection(const Relation& r) {
  auto cols = index_range(0, r.left_dim());
  return Subspace::span(r.space().basis().select_cols(cols));
}

WitnessSet witnesses(const Relation& r, std::span<const Scalar> a) {
  if (a.size() != r.right_dim())
    throw Error(ErrorKind::dimension_mismatch, "witness query with wrong vector length");
  const Field& f = r.field();
  const Matrix& basis = r.space().basis();
  Matrix left = basis.col_range(0, r.left_dim()).transpose();                              // B x dim
  Matrix right = basis.col_range(r.left_dim(), r.left_dim() + r.right_dim()).transpose();  // A x dim

  Subspace coeff_kernel = kernel(right);
  std::vector<Vector> hom;
  for (std::size_t k = 0; k < coeff_kernel.dim(); ++k) hom.push_back(left.apply(coeff_kernel.basis().row(k)));
  WitnessSet out{std::nullopt, Subspace::span(f, r.left_dim(), hom)};

  if (auto x = solve(right, a)) out.particular = left.apply(*x);
  return out;
}

std::optional<Matrix> as_map(const Relation& r) {
  const Field& f = r.field();
  if (right_projection(r).dim() != r.right_dim()) return std::nullopt;
  Vector zero = zero_vector(f, r.right_dim());
  if (witnesses(r, zero).homogeneous.dim() != 0) return std::nullopt;
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < r.right_dim(); ++j) {
    Vector e = zero;
    e[j] = f.one();
    cols.push_back(*witnesses(r, e).particular);
  }
  return Matrix::from_columns(f, r.left_dim(), cols);
}

CrossReport verify_cross_lemma(const Matrix& beta1, const Matrix& beta2, const Matrix& f, const Matrix& g) {
  std::size_t b2 = f.rows();
  if (beta1.rows() != b2 || beta2.cols() != b2 || g.cols() != b2)
    throw Error(ErrorKind::dimension_mismatch, "maps do not meet at a common centre B_2");
  if (!(image(f) == kernel(g)))
    throw Error(ErrorKind::hypothesis_failure, "row A -> B_2 -> C is not exact at B_2");
  if (!(image(beta1) == kernel(beta2)))
    throw Error(ErrorKind::hypothesis_failure, "column B_1 -> B_2 -> B_3 is not exact at B_2");

  const Field& field = f.field();
  CrossReport rep{};

  Relation u = compose(graph(g), inverse_graph(beta2));
  auto direct_sum = [&](const Subspace& left, const Subspace& right) {
    return Subspace::span(block_diag(left.basis(), right.basis()));
  };
  Subspace lhs1 = intersect(u.space(), direct_sum(Subspace::full(field, g.rows()), image(beta2 * f)));
  Subspace rhs1 = intersect(u.space(), direct_sum(image(g * beta1), Subspace::full(field, beta2.rows())));
  rep.part1 = lhs1 == rhs1;

  Relation v = compose(inverse_graph(beta1), graph(f));
  rep.part2a = kernel(beta2 * f) == right_projection(v);
  rep.part2b = kernel(g * beta1) == left_projection(v);

  std::size_t dims[] = {f.cols(), beta1.cols(), b2, beta2.rows(), g.rows()};
  bool small = field.characteristic() == 2;
  for (auto d : dims) small = small && d <= 3;
  if (small) {
    auto as = all_vectors(field, f.cols());
    auto b1s = all_vectors(field, beta1.cols());
    auto b2s = all_vectors(field, b2);
    bool ok = true;
    for (const auto& x : b2s) {
      Vector c = g.apply(x), b3 = beta2.apply(x);
      bool in_bf = in_image(as, beta2 * f, b3);
      bool in_gb = in_image(b1s, g * beta1, c);
      ok = ok && (in_bf == in_gb) == rep.part1;
    }
    for (const auto& a : as) {
      bool killed = is_zero_vector(field, beta2.apply(f.apply(a)));
      bool lifted = in_image(b1s, beta1, f.apply(a));
      ok = ok && (killed == lifted) == rep.part2a;
    }
    for (const auto& b1 : b1s) {
      bool killed = is_zero_vector(field, g.apply(beta1.apply(b1)));
      bool lifted = in_image(as, f, beta1.apply(b1));
      ok = ok && (killed == lifted) == rep.part2b;
    }
    rep.enumeration_agrees = ok;
  }
  return rep;
}

}  // namespace dchase
