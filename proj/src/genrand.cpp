#include "dchase/genrand.hpp"

#include "dchase/error.hpp"

namespace dchase {

namespace {

std::size_t pick(SplitMix64& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

Scalar nonzero_scalar(const Field& f, SplitMix64& rng) {
  if (f.is_prime_field()) return f.from_int(static_cast<std::int64_t>(1 + rng.below(f.characteristic() - 1)));
  return f.from_int(rng.coin() ? 1 : -1);
}

// [I; 0] : F^n -> F^(n + extra)
Matrix top_inclusion(const Field& f, std::size_t n, std::size_t extra) {
  return vstack(Matrix::identity(f, n), Matrix::zero(f, extra, n));
}

void ensure(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::theorem_violation, "generator produced an invalid instance: " + what);
}

// Direct sum of pieces, each a copy of F^d sitting on a set of cells with
// identity maps along the listed edges. Generic over the cell type.
template <class Key>
struct Assembly {
  std::map<Key, std::size_t> dims;
  std::vector<std::vector<std::pair<Key, std::size_t>>> pieces;  // (cell, offset) per piece
  std::vector<std::size_t> piece_dim;

  void add(const std::vector<Key>& cells, std::size_t d) {
    std::vector<std::pair<Key, std::size_t>> at;
    for (const Key& k : cells) {
      at.push_back({k, dims[k]});
      dims[k] += d;
    }
    pieces.push_back(std::move(at));
    piece_dim.push_back(d);
  }

  // Block matrix dims[dst] x dims[src] with identities where a piece covers both.
  Matrix edge(const Field& f, const Key& src, const Key& dst) const {
    auto dim = [&](const Key& k) { return dims.contains(k) ? dims.at(k) : std::size_t{0}; };
    Matrix m(f, dim(dst), dim(src));
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      std::optional<std::size_t> so, to;
      for (const auto& [k, off] : pieces[p]) {
        if (k == src) so = off;
        if (k == dst) to = off;
      }
      if (!so || !to) continue;
      for (std::size_t t = 0; t < piece_dim[p]; ++t) m.at(*to + t, *so + t) = f.one();
    }
    return m;
  }
};

Matrix conj(const Matrix& m, const std::pair<Matrix, Matrix>& src, const std::pair<Matrix, Matrix>& dst) {
  return dst.first * m * src.second;
}

Representation random_rep(const Field& f, const Quiver& q, const std::vector<std::size_t>& dims, SplitMix64& rng) {
  std::vector<Matrix> maps;
  for (auto [s, t] : q.arrows) maps.push_back(random_matrix(f, dims[t], dims[s], rng));
  return Representation(f, q, dims, std::move(maps));
}

}  // namespace

Scalar random_scalar(const Field& field, SplitMix64& rng) {
  if (field.is_prime_field()) return field.from_int(static_cast<std::int64_t>(rng.below(field.characteristic())));
  return field.from_int(rng.between(-3, 3));
}

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, SplitMix64& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_scalar(field, rng);
  return m;
}

std::pair<Matrix, Matrix> random_invertible(const Field& field, std::size_t n, SplitMix64& rng) {
  Matrix p = Matrix::identity(field, n), pinv = Matrix::identity(field, n);
  if (n == 0) return {p, pinv};
  // p <- E p and pinv <- pinv E^-1 for each elementary E
  for (std::size_t step = 0; step < 3 * n; ++step) {
    std::size_t i = rng.below(n), j = rng.below(n);
    if (i != j && rng.below(3) != 0) {
      Scalar a = field.is_prime_field() ? random_scalar(field, rng) : field.from_int(rng.between(-2, 2));
      for (std::size_t c = 0; c < n; ++c) p.at(i, c) = field.add(p.at(i, c), field.mul(a, p.at(j, c)));
      for (std::size_t r = 0; r < n; ++r) pinv.at(r, j) = field.sub(pinv.at(r, j), field.mul(a, pinv.at(r, i)));
    } else if (i != j) {
      for (std::size_t c = 0; c < n; ++c) std::swap(p.at(i, c), p.at(j, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(pinv.at(r, i), pinv.at(r, j));
    } else {
      Scalar s = nonzero_scalar(field, rng), sinv = field.inv(s);
      for (std::size_t c = 0; c < n; ++c) p.at(i, c) = field.mul(s, p.at(i, c));
      for (std::size_t r = 0; r < n; ++r) pinv.at(r, i) = field.mul(pinv.at(r, i), sinv);
    }
  }
  return {std::move(p), std::move(pinv)};
}

ChainComplex random_exact_complex(const GenConfig& cfg, std::size_t length) {
  if (length < 2) throw Error(ErrorKind::shape, "an exact complex needs at least 2 terms");
  const Field& f = cfg.field;
  SplitMix64 rng(cfg.seed);
  // intervals k -> k+1 for k in [-1, length-1]; the ends may stick out
  Assembly<long> as;
  for (std::size_t attempt = 0; attempt < 2 * length; ++attempt) {
    long k = rng.between(-1, static_cast<std::int64_t>(length) - 1);
    std::vector<long> cells;
    for (long c : {k, k + 1})
      if (c >= 0 && c < static_cast<long>(length)) cells.push_back(c);
    std::size_t d = pick(rng, 1, 2);
    bool fits = true;
    for (long c : cells) fits = fits && as.dims[c] + d <= cfg.max_dim;
    if (fits) as.add(cells, d);
  }
  std::vector<std::size_t> dims;
  std::vector<std::pair<Matrix, Matrix>> p;
  for (std::size_t k = 0; k < length; ++k) {
    dims.push_back(as.dims[static_cast<long>(k)]);
    p.push_back(cfg.conjugate ? random_invertible(f, dims.back(), rng)
                              : std::pair{Matrix::identity(f, dims.back()), Matrix::identity(f, dims.back())});
  }
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k + 1 < length; ++k)
    maps.push_back(conj(as.edge(f, static_cast<long>(k), static_cast<long>(k + 1)), p[k], p[k + 1]));
  ChainComplex c(f, std::move(dims), std::move(maps));
  ensure(is_complex(c), "complex");
  for (std::size_t k = 1; k + 1 < length; ++k) ensure(is_exact_at(c, k), "complex exactness");
  return c;
}

Grid conjugate_grid(const Grid& g, SplitMix64& rng) {
  const Field& f = g.field();
  std::map<Cell, std::pair<Matrix, Matrix>> p;
  for (Cell c : g.shape().cells()) p.emplace(c, random_invertible(f, g.dim(c), rng));
  bool ker = g.orientation() == Orientation::kernel;
  std::map<Cell, Matrix> h, v;
  for (const auto& [c, m] : g.hmaps()) {
    Cell next{c.row, c.col + 1};
    h.emplace(c, ker ? conj(m, p.at(c), p.at(next)) : conj(m, p.at(next), p.at(c)));
  }
  for (const auto& [c, m] : g.vmaps()) {
    Cell next{c.row + 1, c.col};
    v.emplace(c, ker ? conj(m, p.at(c), p.at(next)) : conj(m, p.at(next), p.at(c)));
  }
  return Grid(f, g.shape(), g.orientation(), g.dims(), h, v);
}

Grid random_exact_grid(const GenConfig& cfg) {
  const Field& f = cfg.field;
  const auto& s = cfg.shape;
  SplitMix64 rng(cfg.seed);
  // Elementary squares on {i0, i0+1} x {j0, j0+1}, i0, j0 >= -1, keeping the
  // cells inside the shape. A truncated square always loses cells beyond the
  // end of a row or column, so exactness at interior positions survives.
  //
  // Squares alone only produce homology at the ends of the kernel complexes,
  // so a third of the pieces are antidiagonal zigzags: corners on i + j = d,
  // joined to their right and lower neighbours on i + j = d + 1. A zigzag
  // carries the homology class at position d + 2 (1-based) on both sides.
  Assembly<Cell> as;
  std::size_t attempts = 2 * s.cells().size();
  long rows = static_cast<long>(s.rows()), cols = static_cast<long>(s.row_length(0));
  auto keep = [&](long i, long j, std::vector<Cell>& cells) {
    if (i >= 0 && j >= 0 && s.contains({std::size_t(i), std::size_t(j)})) cells.push_back({std::size_t(i), std::size_t(j)});
  };
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Cell> cells;
    if (rng.below(3) == 0) {
      long d = rng.between(-1, rows + cols - 2);
      for (long k = 0; k <= d + 1; ++k) {
        keep(k, d - k, cells);
        keep(k, d + 1 - k, cells);
      }
    } else {
      long i0 = rng.between(-1, rows - 1), j0 = rng.between(-1, cols - 1);
      for (long i : {i0, i0 + 1})
        for (long j : {j0, j0 + 1}) keep(i, j, cells);
    }
    if (cells.empty()) continue;
    std::size_t d = pick(rng, 1, 2);
    bool fits = true;
    for (Cell c : cells) fits = fits && as.dims[c] + d <= cfg.max_dim;
    if (fits) as.add(cells, d);
  }
  bool ker = cfg.orientation == Orientation::kernel;
  std::map<Cell, std::size_t> dims;
  std::map<Cell, Matrix> h, v;
  for (Cell c : s.cells()) {
    dims[c] = as.dims[c];
    Cell right{c.row, c.col + 1}, below{c.row + 1, c.col};
    if (s.contains(right)) h.emplace(c, ker ? as.edge(f, c, right) : as.edge(f, right, c));
    if (s.contains(below)) v.emplace(c, ker ? as.edge(f, c, below) : as.edge(f, below, c));
  }
  Grid g(f, s, cfg.orientation, dims, h, v);
  if (cfg.conjugate) g = conjugate_grid(g, rng);
  ensure(validate(g).valid(), "grid");
  return g;
}

Cross random_cross(const GenConfig& cfg) {
  const Field& f = cfg.field;
  SplitMix64 rng(cfg.seed);
  std::size_t b2 = pick(rng, 0, cfg.max_dim);
  // in : X -> B2 random, out : B2 -> Y with kernel exactly Im in
  auto exact_pair = [&]() {
    Matrix in = random_matrix(f, b2, pick(rng, 0, cfg.max_dim), rng);
    QuotientSpace q = quotient(b2, image(in));
    std::size_t extra = pick(rng, 0, cfg.max_dim - q.dim);
    Matrix out = top_inclusion(f, q.dim, extra) * q.projection;
    if (cfg.conjugate) out = random_invertible(f, q.dim + extra, rng).first * out;
    return std::pair{std::move(in), std::move(out)};
  };
  auto [beta1, beta2] = exact_pair();
  auto [fm, gm] = exact_pair();
  if (cfg.conjugate) {
    auto p = random_invertible(f, b2, rng);
    beta1 = p.first * beta1;
    beta2 = beta2 * p.second;
    fm = p.first * fm;
    gm = gm * p.second;
  }
  ensure(image(beta1) == kernel(beta2) && image(fm) == kernel(gm), "cross");
  return {std::move(beta1), std::move(beta2), std::move(fm), std::move(gm)};
}

SnakeInput random_snake_input(const GenConfig& cfg) {
  const Field& fld = cfg.field;
  SplitMix64 rng(cfg.seed);
  std::size_t mx = cfg.max_dim;
  bool f_monic = cfg.f_monic.value_or(rng.coin());
  bool gp_epi = cfg.gp_epi.value_or(rng.coin());

  // top row A -f-> B -g-> C = B / Im f
  std::size_t b = pick(rng, 0, mx);
  std::size_t a = f_monic ? pick(rng, 0, b) : pick(rng, 1, mx);
  Matrix f(fld, b, a);
  if (f_monic) {
    f = vstack(random_invertible(fld, a, rng).first, random_matrix(fld, b - a, a, rng));
    f = random_invertible(fld, b, rng).first * f;
  } else {
    Matrix m = random_matrix(fld, b, a - 1, rng);
    Matrix dependent = m * random_matrix(fld, a - 1, 1, rng);
    f = hstack(m, dependent) * random_invertible(fld, a, rng).first;
  }
  QuotientSpace q = quotient(b, image(f));
  Matrix g = q.projection;

  // bottom row 0 -> A' -f'-> B' -g'-> C' with C' = B'/Im f' plus `extra`
  std::size_t ap = pick(rng, 0, mx), bp = pick(rng, ap, mx);
  if (!gp_epi && bp - ap == mx) --bp;
  Matrix fp = random_invertible(fld, bp, rng).first *
              vstack(random_invertible(fld, ap, rng).first, random_matrix(fld, bp - ap, ap, rng));
  QuotientSpace qp = quotient(bp, image(fp));
  std::size_t extra = gp_epi ? 0 : pick(rng, 1, std::max<std::size_t>(1, mx - qp.dim));
  Matrix gp = top_inclusion(fld, qp.dim, extra) * qp.projection;

  // alpha must kill Ker f, so alpha = T f; then beta = f'T + R g solves
  // f' alpha = beta f, and gamma = g'R is the unique map with gamma g = g' beta.
  Matrix t = random_matrix(fld, ap, b, rng);
  Matrix r = random_matrix(fld, bp, q.dim, rng);
  SnakeInput in{fld, f, g, fp, gp, t * f, fp * t + r * g, gp * r};

  if (cfg.conjugate) {
    auto pa = random_invertible(fld, a, rng), pb = random_invertible(fld, b, rng),
         pc = random_invertible(fld, q.dim, rng), pap = random_invertible(fld, ap, rng),
         pbp = random_invertible(fld, bp, rng), pcp = random_invertible(fld, qp.dim + extra, rng);
    in.f = conj(in.f, pa, pb);
    in.g = conj(in.g, pb, pc);
    in.fp = conj(in.fp, pap, pbp);
    in.gp = conj(in.gp, pbp, pcp);
    in.alpha = conj(in.alpha, pa, pap);
    in.beta = conj(in.beta, pb, pbp);
    in.gamma = conj(in.gamma, pc, pcp);
  }
  require_snake_hypotheses(in);
  ensure((kernel(in.f).dim() == 0) == f_monic, "snake f monic flag");
  ensure((rank(in.gp) == in.gp.rows()) == gp_epi, "snake g' epi flag");
  return in;
}

QuiverInstance random_quiver_instance(const GenConfig& cfg) {
  const Field& f = cfg.field;
  SplitMix64 rng(cfg.seed);
  Quiver q{2, {{0, 1}}};
  std::size_t mx = std::min<std::size_t>(cfg.max_dim, 2);

  // B = A (+) C with an extension block C_1 -> A_2 in the arrow map
  std::vector<std::size_t> ad(2), cd(2), bd(2);
  for (std::size_t v = 0; v < 2; ++v) {
    ad[v] = pick(rng, 0, mx);
    cd[v] = pick(rng, 0, mx - ad[v]);
    bd[v] = ad[v] + cd[v];
  }
  Representation a = random_rep(f, q, ad, rng), c = random_rep(f, q, cd, rng);
  Matrix ext = random_matrix(f, ad[1], cd[0], rng);
  Matrix b_arrow = hstack(vstack(a.arrow_maps()[0], Matrix::zero(f, cd[1], ad[0])), vstack(ext, c.arrow_maps()[0]));
  Representation bb(f, q, bd, {b_arrow});
  RepMap incl, proj;
  for (std::size_t v = 0; v < 2; ++v) {
    incl.components.push_back(top_inclusion(f, ad[v], cd[v]));
    proj.components.push_back(hstack(Matrix::zero(f, cd[v], ad[v]), Matrix::identity(f, cd[v])));
  }

  // X -u-> Y -> Z = Cok u
  std::vector<std::size_t> xd{pick(rng, 0, mx), pick(rng, 0, mx)}, yd{pick(rng, 0, mx), pick(rng, 0, mx)};
  Representation x = random_rep(f, q, xd, rng), y = random_rep(f, q, yd, rng);
  HomSpace hxy = hom_space(x, y);
  RepMap u;
  for (std::size_t v = 0; v < 2; ++v) u.components.push_back(Matrix::zero(f, yd[v], xd[v]));
  for (const auto& phi : hxy.basis) {
    Scalar s = random_scalar(f, rng);
    for (std::size_t v = 0; v < 2; ++v) u.components[v] = u.components[v] + phi.components[v].scaled(s);
  }
  std::vector<QuotientSpace> qs;
  for (std::size_t v = 0; v < 2; ++v) qs.push_back(quotient(yd[v], image(u.components[v])));
  Representation z(f, q, {qs[0].dim, qs[1].dim}, {induced_quotient_map(y.arrow_maps()[0], qs[0], qs[1])});
  RepMap zproj{{qs[0].projection, qs[1].projection}};

  QuiverInstance inst{{a, bb, c, incl, proj}, {x, y, z, u, zproj}};
  require_short_exact(inst.a_seq);
  require_right_exact(inst.e_seq);
  return inst;
}

}  // namespace dchase
