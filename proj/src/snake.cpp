#include "dchase/snake.hpp"

#include "dchase/error.hpp"

namespace dchase {

namespace {

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

struct Pieces {
  Subspace ker_alpha, ker_beta, ker_gamma;
  QuotientSpace cok_alpha, cok_beta, cok_gamma;
  Matrix f_ker, g_ker, f_cok, g_cok;  // f~, g~, f'', g''
};

Pieces pieces(const SnakeInput& in) {
  Subspace ka = kernel(in.alpha), kb = kernel(in.beta), kc = kernel(in.gamma);
  QuotientSpace qa = quotient(in.alpha.rows(), image(in.alpha));
  QuotientSpace qb = quotient(in.beta.rows(), image(in.beta));
  QuotientSpace qc = quotient(in.gamma.rows(), image(in.gamma));
  Matrix fk = induced_map(in.f, ka, kb);
  Matrix gk = induced_map(in.g, kb, kc);
  Matrix fc = induced_quotient_map(in.fp, qa, qb);
  Matrix gc = induced_quotient_map(in.gp, qb, qc);
  return {std::move(ka), std::move(kb), std::move(kc), std::move(qa), std::move(qb), std::move(qc),
          std::move(fk), std::move(gk), std::move(fc), std::move(gc)};
}

SnakeResult assemble(const SnakeInput& in, const Pieces& p, Matrix delta) {
  const Field& fld = in.field;
  ChainComplex six(fld,
                   {p.ker_alpha.dim(), p.ker_beta.dim(), p.ker_gamma.dim(), p.cok_alpha.dim, p.cok_beta.dim,
                    p.cok_gamma.dim},
                   {p.f_ker, p.g_ker, delta, p.f_cok, p.g_cok});
  if (!is_complex(six)) throw Error(ErrorKind::theorem_violation, "six-term sequence is not a complex");
  std::vector<bool> exact;
  for (std::size_t i = 1; i <= 4; ++i) exact.push_back(is_exact_at(six, i));
  return SnakeResult{std::move(six),
                     std::move(delta),
                     std::move(exact),
                     {kernel(in.f).dim() == 0, kernel(p.f_ker).dim() == 0},
                     {rank(in.gp) == in.gp.rows(), rank(p.g_cok) == p.g_cok.rows()}};
}

}  // namespace

bool SnakeResult::all_exact() const {
  for (bool e : exact)
    if (!e) return false;
  return true;
}

void require_snake_hypotheses(const SnakeInput& in) {
  std::size_t a = in.f.cols(), b = in.f.rows(), c = in.g.rows();
  std::size_t a2 = in.fp.cols(), b2 = in.fp.rows(), c2 = in.gp.rows();
  require(in.g.cols() == b, ErrorKind::dimension_mismatch, "g must start at B");
  require(in.gp.cols() == b2, ErrorKind::dimension_mismatch, "g' must start at B'");
  require(in.alpha.cols() == a && in.alpha.rows() == a2, ErrorKind::dimension_mismatch, "alpha must map A -> A'");
  require(in.beta.cols() == b && in.beta.rows() == b2, ErrorKind::dimension_mismatch, "beta must map B -> B'");
  require(in.gamma.cols() == c && in.gamma.rows() == c2, ErrorKind::dimension_mismatch, "gamma must map C -> C'");
  for (const Matrix* m : {&in.f, &in.g, &in.fp, &in.gp, &in.alpha, &in.beta, &in.gamma})
    require(m->field() == in.field, ErrorKind::dimension_mismatch, "all maps must share one field");

  require(in.fp * in.alpha == in.beta * in.f, ErrorKind::hypothesis_failure, "square A,B,A',B' does not commute");
  require(in.gp * in.beta == in.gamma * in.g, ErrorKind::hypothesis_failure, "square B,C,B',C' does not commute");
  require(image(in.f) == kernel(in.g), ErrorKind::hypothesis_failure, "top row is not exact at B");
  require(rank(in.g) == c, ErrorKind::hypothesis_failure, "top row is not exact at C (g is not onto)");
  require(image(in.fp) == kernel(in.gp), ErrorKind::hypothesis_failure, "bottom row is not exact at B'");
  require(kernel(in.fp).dim() == 0, ErrorKind::hypothesis_failure, "bottom row is not exact at A' (f' is not monic)");
}

SnakeResult snake(const SnakeInput& in) {
  require_snake_hypotheses(in);
  Pieces p = pieces(in);
  // [a'] <- a' <-f'- beta(b) <-beta- b <-g- c
  Relation chase = compose(graph(p.cok_alpha.projection),
                           compose(inverse_graph(in.fp),
                                   compose(graph(in.beta), compose(inverse_graph(in.g), graph(p.ker_gamma.inclusion())))));
  auto delta = as_map(chase);
  if (!delta) throw Error(ErrorKind::theorem_violation, "connecting relation is not single-valued on Ker gamma");
  return assemble(in, p, std::move(*delta));
}

Grid snake_kernel_grid(const SnakeInput& in) {
  require_snake_hypotheses(in);
  Pieces p = pieces(in);
  std::map<Cell, std::size_t> dims{{{0, 0}, in.f.cols()},       {{0, 1}, in.f.rows()},   {{0, 2}, in.g.rows()},
                                   {{1, 0}, in.fp.cols()},      {{1, 1}, in.fp.rows()},  {{1, 2}, in.gp.rows()},
                                   {{2, 0}, p.cok_alpha.dim},   {{2, 1}, p.cok_beta.dim}};
  std::map<Cell, Matrix> h{{{0, 0}, in.f}, {{0, 1}, in.g}, {{1, 0}, in.fp}, {{1, 1}, in.gp}, {{2, 0}, p.f_cok}};
  std::map<Cell, Matrix> v{{{0, 0}, in.alpha},
                           {{0, 1}, in.beta},
                           {{0, 2}, in.gamma},
                           {{1, 0}, p.cok_alpha.projection},
                           {{1, 1}, p.cok_beta.projection}};
  return Grid(in.field, StaircaseShape({3, 3, 2}), Orientation::kernel, dims, h, v);
}

Grid snake_cokernel_grid(const SnakeInput& in) {
  require_snake_hypotheses(in);
  const Field& fld = in.field;
  Pieces p = pieces(in);
  Subspace ker_f = kernel(in.f);
  Subspace ker_f_ker = kernel(p.f_ker);
  // Ker f~ sits in Ker alpha coordinates; Ker f sits in A. They agree inside A.
  Matrix iso = induced_map(p.ker_alpha.inclusion(), ker_f_ker, ker_f);

  std::map<Cell, std::size_t> dims{
      {{0, 0}, in.gp.rows()},        {{0, 1}, in.fp.rows()},       {{0, 2}, in.fp.cols()},       {{0, 3}, 0},
      {{1, 0}, in.g.rows()},         {{1, 1}, in.f.rows()},        {{1, 2}, in.f.cols()},        {{1, 3}, ker_f.dim()},
      {{2, 0}, p.ker_gamma.dim()},   {{2, 1}, p.ker_beta.dim()},   {{2, 2}, p.ker_alpha.dim()},  {{2, 3}, ker_f_ker.dim()},
  };
  std::map<Cell, Matrix> h{
      {{0, 0}, in.gp}, {{0, 1}, in.fp}, {{1, 0}, in.g}, {{1, 1}, in.f}, {{1, 2}, ker_f.inclusion()},
      {{2, 0}, p.g_ker}, {{2, 1}, p.f_ker}, {{2, 2}, ker_f_ker.inclusion()},
  };
  std::map<Cell, Matrix> v{
      {{0, 0}, in.gamma}, {{0, 1}, in.beta}, {{0, 2}, in.alpha},
      {{1, 0}, p.ker_gamma.inclusion()}, {{1, 1}, p.ker_beta.inclusion()}, {{1, 2}, p.ker_alpha.inclusion()},
      {{1, 3}, iso},
  };
  return Grid(fld, StaircaseShape::rectangle(4, 4), Orientation::cokernel, dims, h, v);
}

SnakeResult snake_via_grids(const SnakeInput& in) {
  require_snake_hypotheses(in);
  const Field& fld = in.field;
  Pieces p = pieces(in);

  CorollaryReport kernel_side = corollary_check(snake_kernel_grid(in));
  Grid cok_grid = snake_cokernel_grid(in);
  HomologyTable cokernel_dims = ccl_homology_dims(cok_grid);

  // Ker gamma -> Cok g~ = homology at position 3 on the right -> homology at
  // position 3 on the bottom = Ker f'' inside Cok alpha.
  HomologyIso iso = ccl_homology_iso(cok_grid, 3);
  QuotientSpace cok_g_ker = quotient(p.ker_gamma.dim(), image(p.g_ker));
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < p.ker_gamma.dim(); ++k) {
    Vector e = zero_vector(fld, p.ker_gamma.dim());
    e[k] = fld.one();
    Vector cls = iso.source.class_of_cycle(cok_g_ker.projection.apply(e));
    Vector target_cls = iso.matrix.apply(cls);
    Vector rep = zero_vector(fld, p.cok_alpha.dim);
    for (std::size_t t = 0; t < target_cls.size(); ++t) {
      Vector r = iso.target.representative(t);
      for (std::size_t i = 0; i < rep.size(); ++i) rep[i] = fld.add(rep[i], fld.mul(target_cls[t], r[i]));
    }
    cols.push_back(std::move(rep));
  }
  SnakeResult res = assemble(in, p, Matrix::from_columns(fld, p.cok_alpha.dim, cols));

  // The addenda as read off the two lemmas: homology at position 1.
  res.f_monic_iff = {kernel_side.left_dims[0] == 0, kernel_side.top_dims[0] == 0};
  res.gp_epi_iff = {cokernel_dims.first[0] == 0, cokernel_dims.second[0] == 0};
  return res;
}

bool snake_results_agree(const SnakeResult& a, const SnakeResult& b) {
  return homology_dims(a.six_term) == homology_dims(b.six_term) && graph(a.delta) == graph(b.delta);
}

}  // namespace dchase
