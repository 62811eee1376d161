#include "dchase/grid.hpp"

#include "dchase/error.hpp"
#include "dchase/prng.hpp"

namespace dchase {

std::string format_cell(Cell c) { return std::to_string(c.row + 1) + "," + std::to_string(c.col + 1); }

const char* to_string(Orientation o) { return o == Orientation::kernel ? "kernel" : "cokernel"; }

StaircaseShape::StaircaseShape(std::vector<std::size_t> row_lengths) : row_lengths_(std::move(row_lengths)) {
  if (row_lengths_.empty()) throw Error(ErrorKind::shape, "staircase shape needs at least one row");
  for (std::size_t i = 0; i < row_lengths_.size(); ++i) {
    if (row_lengths_[i] == 0) throw Error(ErrorKind::shape, "row " + std::to_string(i + 1) + " is empty");
    if (i > 0 && row_lengths_[i] > row_lengths_[i - 1])
      throw Error(ErrorKind::shape, "row lengths must be non-increasing (row " + std::to_string(i + 1) + ")");
  }
}

StaircaseShape StaircaseShape::rectangle(std::size_t rows, std::size_t cols) {
  return StaircaseShape(std::vector<std::size_t>(rows, cols));
}

std::size_t StaircaseShape::col_length(std::size_t j) const {
  std::size_t n = 0;
  while (n < rows() && row_lengths_[n] > j) ++n;
  return n;
}

std::vector<Cell> StaircaseShape::cells() const {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < row_lengths_[i]; ++j) out.push_back({i, j});
  return out;
}

namespace {

// Endpoints of the map stored at c, in arrow direction.
std::pair<Cell, Cell> hmap_ends(Orientation o, Cell c) {
  Cell right{c.row, c.col + 1};
  return o == Orientation::kernel ? std::pair{c, right} : std::pair{right, c};
}

std::pair<Cell, Cell> vmap_ends(Orientation o, Cell c) {
  Cell below{c.row + 1, c.col};
  return o == Orientation::kernel ? std::pair{c, below} : std::pair{below, c};
}

void check_map_keys(const std::map<Cell, Matrix>& maps, const StaircaseShape& s, bool horizontal) {
  for (const auto& [c, m] : maps) {
    Cell next = horizontal ? Cell{c.row, c.col + 1} : Cell{c.row + 1, c.col};
    if (!s.contains(c) || !s.contains(next))
      throw Error(ErrorKind::shape, std::string(horizontal ? "horizontal" : "vertical") + " map at " +
                                        format_cell(c) + " leaves the staircase");
  }
}

}  // namespace

Grid::Grid(Field field, StaircaseShape shape, Orientation orientation, const std::map<Cell, std::size_t>& dims,
           const std::map<Cell, Matrix>& hmaps, const std::map<Cell, Matrix>& vmaps)
    : field_(field), shape_(std::move(shape)), orientation_(orientation) {
  for (const auto& [c, d] : dims)
    if (!shape_.contains(c)) throw Error(ErrorKind::shape, "space at " + format_cell(c) + " lies outside the staircase");
  check_map_keys(hmaps, shape_, true);
  check_map_keys(vmaps, shape_, false);
  for (Cell c : shape_.cells()) {
    auto it = dims.find(c);
    dims_[c] = it == dims.end() ? 0 : it->second;
  }
  auto install = [&](const std::map<Cell, Matrix>& given, std::map<Cell, Matrix>& out, bool horizontal) {
    for (Cell c : shape_.cells()) {
      Cell next = horizontal ? Cell{c.row, c.col + 1} : Cell{c.row + 1, c.col};
      if (!shape_.contains(next)) continue;
      auto [src, dst] = horizontal ? hmap_ends(orientation_, c) : vmap_ends(orientation_, c);
      auto it = given.find(c);
      if (it == given.end()) {
        out.emplace(c, Matrix::zero(field_, dims_[dst], dims_[src]));
        continue;
      }
      const Matrix& m = it->second;
      if (m.rows() != dims_[dst] || m.cols() != dims_[src])
        throw Error(ErrorKind::dimension_mismatch,
                    std::string(horizontal ? "horizontal" : "vertical") + " map at " + format_cell(c) + " is " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                        std::to_string(dims_[dst]) + "x" + std::to_string(dims_[src]));
      if (!(m.field() == field_))
        throw Error(ErrorKind::dimension_mismatch, "map at " + format_cell(c) + " is over another field");
      out.emplace(c, m);
    }
  };
  install(hmaps, hmaps_, true);
  install(vmaps, vmaps_, false);
}

Grid Grid::zero(Field field, StaircaseShape shape, Orientation orientation) {
  return Grid(field, std::move(shape), orientation, {}, {}, {});
}

const Matrix& Grid::hmap(Cell c) const {
  auto it = hmaps_.find(c);
  if (it == hmaps_.end()) throw Error(ErrorKind::region_missing, "no horizontal map at " + format_cell(c));
  return it->second;
}

const Matrix& Grid::vmap(Cell c) const {
  auto it = vmaps_.find(c);
  if (it == vmaps_.end()) throw Error(ErrorKind::region_missing, "no vertical map at " + format_cell(c));
  return it->second;
}

ValidationReport validate(const Grid& g) {
  ValidationReport rep;
  const auto& s = g.shape();
  bool ker = g.orientation() == Orientation::kernel;

  for (Cell c : s.cells()) {
    Cell diag{c.row + 1, c.col + 1};
    if (!s.contains(diag)) continue;
    Cell right{c.row, c.col + 1}, below{c.row + 1, c.col};
    bool commutes = ker ? g.vmap(right) * g.hmap(c) == g.hmap(below) * g.vmap(c)
                        : g.hmap(c) * g.vmap(right) == g.vmap(c) * g.hmap(below);
    if (!commutes) rep.non_commuting.push_back(c);
  }

  // interior positions of every row: incoming image == outgoing kernel
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 1; j + 1 < s.row_length(i); ++j) {
      const Matrix& in = ker ? g.hmap({i, j - 1}) : g.hmap({i, j});
      const Matrix& out = ker ? g.hmap({i, j}) : g.hmap({i, j - 1});
      if (!(image(in) == kernel(out))) rep.not_exact.push_back({true, i, {i, j}});
    }
  for (std::size_t j = 0; j < s.row_length(0); ++j)
    for (std::size_t i = 1; i + 1 < s.col_length(j); ++i) {
      const Matrix& in = ker ? g.vmap({i - 1, j}) : g.vmap({i, j});
      const Matrix& out = ker ? g.vmap({i, j}) : g.vmap({i - 1, j});
      if (!(image(in) == kernel(out))) rep.not_exact.push_back({false, j, {i, j}});
    }
  return rep;
}

void require_valid(const Grid& g) {
  auto rep = validate(g);
  if (!rep.non_commuting.empty())
    throw Error(ErrorKind::hypothesis_failure,
                "square with top-left cell " + format_cell(rep.non_commuting.front()) + " does not commute");
  if (!rep.not_exact.empty()) {
    const auto& e = rep.not_exact.front();
    throw Error(ErrorKind::hypothesis_failure, std::string(e.in_row ? "row " : "column ") +
                                                   std::to_string(e.line + 1) + " is not exact at " +
                                                   format_cell(e.cell));
  }
}

std::vector<Cell> missing_region_cells(const StaircaseShape& s, std::size_t n) {
  // 1-based i + j <= n + 2  <=>  0-based i + j <= n
  std::vector<Cell> missing;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j)
      if (!s.contains({i, j})) missing.push_back({i, j});
  return missing;
}

std::size_t admissible_positions(const StaircaseShape& s) {
  std::size_t n = 0;
  while (missing_region_cells(s, n + 1).empty()) ++n;
  return n;
}

namespace {

void require_orientation(const Grid& g, Orientation o) {
  if (g.orientation() != o)
    throw Error(ErrorKind::hypothesis_failure,
                std::string("operation needs a ") + to_string(o) + "-oriented grid, got " + to_string(g.orientation()));
}

Matrix induced_or_violation(const Matrix& f, const Subspace& u, const Subspace& w, const std::string& where) {
  try {
    return induced_map(f, u, w);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_induced) throw;
    throw Error(ErrorKind::theorem_violation, "kernel map undefined at " + where + ": " + e.what());
  }
}

// Kernel terms as subspaces of their cells (index = position - 1) together
// with the complex 0 -> terms.
struct KernelSide {
  std::vector<Subspace> terms;
  ChainComplex complex;
};

KernelSide kernel_side(const Grid& g, bool top) {
  const auto& s = g.shape();
  const Field& f = g.field();
  std::size_t len = top ? s.row_length(0) : s.rows();
  auto cell = [&](std::size_t k) { return top ? Cell{0, k} : Cell{k, 0}; };

  std::vector<Subspace> terms;
  for (std::size_t k = 0; k < len; ++k) {
    Cell c = cell(k);
    Cell across = top ? Cell{1, k} : Cell{k, 1};
    if (s.contains(across))
      terms.push_back(kernel(top ? g.vmap(c) : g.hmap(c)));
    else
      terms.push_back(Subspace::full(f, g.dim(c)));
  }
  std::vector<std::size_t> dims{0};
  std::vector<Matrix> maps{Matrix::zero(f, terms.front().dim(), 0)};
  for (std::size_t k = 0; k < len; ++k) {
    dims.push_back(terms[k].dim());
    if (k + 1 < len)
      maps.push_back(induced_or_violation(top ? g.hmap(cell(k)) : g.vmap(cell(k)), terms[k], terms[k + 1],
                                          format_cell(cell(k))));
  }
  return {std::move(terms), ChainComplex(f, std::move(dims), std::move(maps))};
}

struct CokernelSide {
  std::vector<QuotientSpace> terms;  // index = position - 1
  ChainComplex complex;              // arrow order, ends in 0
};

CokernelSide cokernel_side(const Grid& g, bool right) {
  const auto& s = g.shape();
  const Field& f = g.field();
  std::size_t len = right ? s.rows() : s.row_length(0);
  auto cell = [&](std::size_t k) { return right ? Cell{k, 0} : Cell{0, k}; };

  std::vector<QuotientSpace> terms;
  for (std::size_t k = 0; k < len; ++k) {
    Cell c = cell(k);
    Cell across = right ? Cell{k, 1} : Cell{1, k};
    Subspace killed = s.contains(across) ? image(right ? g.hmap(c) : g.vmap(c)) : Subspace::zero(f, g.dim(c));
    terms.push_back(quotient(g.dim(c), killed));
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;
  for (std::size_t k = len; k-- > 0;) {
    dims.push_back(terms[k].dim);
    if (k > 0) {
      const Matrix& m = right ? g.vmap(cell(k - 1)) : g.hmap(cell(k - 1));
      try {
        maps.push_back(induced_quotient_map(m, terms[k], terms[k - 1]));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::not_induced) throw;
        throw Error(ErrorKind::theorem_violation, "cokernel map undefined at " + format_cell(cell(k - 1)));
      }
    }
  }
  dims.push_back(0);
  maps.push_back(Matrix::zero(f, 0, terms.front().dim));
  return {std::move(terms), ChainComplex(f, std::move(dims), std::move(maps))};
}

void require_position(const Grid& g, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::region_missing, "positions are numbered from 1");
  auto missing = missing_region_cells(g.shape(), n);
  if (missing.empty()) return;
  std::string cells;
  for (Cell c : missing) cells += (cells.empty() ? "" : " ") + format_cell(c);
  throw Error(ErrorKind::region_missing,
              "position " + std::to_string(n) + " needs the antidiagonal region; missing cells: " + cells);
}

Scalar seeded_scalar(const Field& f, SplitMix64& rng) {
  if (f.is_prime_field()) return f.from_int(static_cast<std::int64_t>(rng.below(f.characteristic())));
  return f.from_int(rng.between(-3, 3));
}

Scalar dot(const Field& f, std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar acc = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

}  // namespace

ChainComplex kernel_complex_top(const Grid& g) {
  require_orientation(g, Orientation::kernel);
  require_valid(g);
  return kernel_side(g, true).complex;
}

ChainComplex kernel_complex_left(const Grid& g) {
  require_orientation(g, Orientation::kernel);
  require_valid(g);
  return kernel_side(g, false).complex;
}

namespace {

Relation chase_relation(const Grid& g, std::size_t n, const Subspace& top_term, const Subspace& left_term) {
  // Start at the top term inside cell (0, n-1) and walk to cell (n-1, 0).
  Relation chain = graph(top_term.inclusion());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    Cell left{k, n - 2 - k};
    chain = compose(inverse_graph(g.hmap(left)), chain);
    chain = compose(graph(g.vmap(left)), chain);
  }
  return compose(inverse_graph(left_term.inclusion()), chain);
}

}  // namespace

Relation antidiagonal_relation(const Grid& g, std::size_t n) {
  require_orientation(g, Orientation::kernel);
  require_valid(g);
  require_position(g, n);
  auto top = kernel_side(g, true);
  auto left = kernel_side(g, false);
  return chase_relation(g, n, top.terms[n - 1], left.terms[n - 1]);
}

HomologyIso kcl_homology_iso(const Grid& g, std::size_t n, std::uint64_t witness_seed) {
  require_orientation(g, Orientation::kernel);
  require_valid(g);
  require_position(g, n);
  const Field& f = g.field();
  auto top = kernel_side(g, true);
  auto left = kernel_side(g, false);
  Relation u = chase_relation(g, n, top.terms[n - 1], left.terms[n - 1]);
  HomologyAt source = homology_at(top.complex, n);
  HomologyAt target = homology_at(left.complex, n);

  Subspace ambiguity = witnesses(u, zero_vector(f, u.right_dim())).homogeneous;
  if (!leq(ambiguity, target.boundaries))
    throw Error(ErrorKind::theorem_violation,
                "witness ambiguity at position " + std::to_string(n) + " is not made of boundaries");

  SplitMix64 rng(witness_seed);
  auto witness = [&](std::span<const Scalar> c) {
    auto w = witnesses(u, c);
    if (!w.particular)
      throw Error(ErrorKind::theorem_violation, "cycle " + format_vector(f, c) + " at position " +
                                                    std::to_string(n) + " has no witness on the left");
    Vector z = std::move(*w.particular);
    if (witness_seed != 0)
      for (std::size_t k = 0; k < w.homogeneous.dim(); ++k) {
        Scalar a = seeded_scalar(f, rng);
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = f.add(z[i], f.mul(a, w.homogeneous.basis().at(k, i)));
      }
    return z;
  };
  auto class_or_violation = [&](std::span<const Scalar> z) {
    try {
      return target.class_of_cycle(z);
    } catch (const Error&) {
      throw Error(ErrorKind::theorem_violation,
                  "witness " + format_vector(f, z) + " at position " + std::to_string(n) + " is not a cycle");
    }
  };

  // Boundaries on top must land in boundaries on the left.
  for (std::size_t k = 0; k < source.boundaries.dim(); ++k) {
    Vector z = witness(source.boundaries.basis().row(k));
    if (!is_zero_vector(f, class_or_violation(z)))
      throw Error(ErrorKind::theorem_violation, "a boundary at position " + std::to_string(n) +
                                                    " is sent to a nonzero homology class");
  }

  std::vector<Vector> cols;
  for (std::size_t t = 0; t < source.dim; ++t) cols.push_back(class_or_violation(witness(source.representative(t))));
  Matrix m = Matrix::from_columns(f, target.dim, cols);
  if (m.rows() != m.cols() || rank(m) != m.rows())
    throw Error(ErrorKind::theorem_violation, "induced map on homology at position " + std::to_string(n) +
                                                  " is not invertible (" + std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()) + ", rank " + std::to_string(rank(m)) + ")");
  return {n, std::move(source), std::move(target), std::move(m)};
}

HomologyTable kcl_homology_dims(const Grid& g) {
  require_orientation(g, Orientation::kernel);
  require_valid(g);
  auto top = kernel_side(g, true);
  auto left = kernel_side(g, false);
  HomologyTable t;
  std::size_t n = admissible_positions(g.shape());
  for (std::size_t k = 1; k <= n; ++k) {
    t.first.push_back(homology_at(top.complex, k).dim);
    t.second.push_back(homology_at(left.complex, k).dim);
  }
  return t;
}

Grid dualize(const Grid& g) {
  std::map<Cell, Matrix> h, v;
  for (const auto& [c, m] : g.hmaps()) h.emplace(c, m.transpose());
  for (const auto& [c, m] : g.vmaps()) v.emplace(c, m.transpose());
  Orientation o = g.orientation() == Orientation::kernel ? Orientation::cokernel : Orientation::kernel;
  return Grid(g.field(), g.shape(), o, g.dims(), h, v);
}

ChainComplex cokernel_complex_right(const Grid& g) {
  require_orientation(g, Orientation::cokernel);
  require_valid(g);
  return cokernel_side(g, true).complex;
}

ChainComplex cokernel_complex_bottom(const Grid& g) {
  require_orientation(g, Orientation::cokernel);
  require_valid(g);
  return cokernel_side(g, false).complex;
}

HomologyIso ccl_homology_iso(const Grid& g, std::size_t n) {
  require_orientation(g, Orientation::cokernel);
  require_valid(g);
  require_position(g, n);
  const Field& f = g.field();
  Grid d = dualize(g);
  // dual top row pairs with the bottom row, dual left column with the right column
  HomologyIso dual = kcl_homology_iso(d, n);
  auto dual_top = kernel_side(d, true);
  auto dual_left = kernel_side(d, false);
  auto right = cokernel_side(g, true);
  auto bottom = cokernel_side(g, false);
  HomologyAt h_right = homology_at(right.complex, g.shape().rows() - n);
  HomologyAt h_bottom = homology_at(bottom.complex, g.shape().row_length(0) - n);

  // pairing between homology of a kernel term of the dual and of the matching cokernel term
  auto pairing = [&](const HomologyAt& dual_h, const Subspace& kernel_term, const HomologyAt& h,
                     const QuotientSpace& quot) {
    Matrix p(f, dual_h.dim, h.dim);
    Matrix kin = kernel_term.inclusion();
    for (std::size_t s = 0; s < dual_h.dim; ++s) {
      Vector y = kin.apply(dual_h.representative(s));
      for (std::size_t t = 0; t < h.dim; ++t) p.at(s, t) = dot(f, y, quot.section.apply(h.representative(t)));
    }
    return p;
  };
  Matrix pi_right = pairing(dual.target, dual_left.terms[n - 1], h_right, right.terms[n - 1]);
  Matrix pi_bottom = pairing(dual.source, dual_top.terms[n - 1], h_bottom, bottom.terms[n - 1]);
  auto pi_bottom_inv = inverse(pi_bottom);
  if (!pi_bottom_inv || rank(pi_right) != pi_right.rows() || pi_right.rows() != pi_right.cols())
    throw Error(ErrorKind::theorem_violation,
                "duality pairing on homology at position " + std::to_string(n) + " is degenerate");
  Matrix m = *pi_bottom_inv * dual.matrix.transpose() * pi_right;
  return {n, std::move(h_right), std::move(h_bottom), std::move(m)};
}

HomologyTable ccl_homology_dims(const Grid& g) {
  require_orientation(g, Orientation::cokernel);
  auto dual = kcl_homology_dims(dualize(g));
  return {std::move(dual.second), std::move(dual.first)};
}

CorollaryReport corollary_check(const Grid& g) {
  if (g.shape() != StaircaseShape({3, 3, 2}))
    throw Error(ErrorKind::shape, "corollary check needs the Gamma shape with rows 3, 3, 2");
  require_orientation(g, Orientation::kernel);
  require_valid(g);
  auto top = kernel_side(g, true);
  auto left = kernel_side(g, false);
  CorollaryReport rep;
  for (std::size_t k = 1; k <= 3; ++k) {
    rep.top_dims.push_back(homology_at(top.complex, k).dim);
    rep.left_dims.push_back(homology_at(left.complex, k).dim);
  }
  return rep;
}

Grid truncate(const Grid& g, const StaircaseShape& shape) {
  std::map<Cell, std::size_t> dims;
  std::map<Cell, Matrix> h, v;
  for (Cell c : shape.cells()) {
    if (!g.shape().contains(c)) throw Error(ErrorKind::shape, "cell " + format_cell(c) + " is not in the grid");
    dims[c] = g.dim(c);
    if (shape.contains({c.row, c.col + 1})) h.emplace(c, g.hmap(c));
    if (shape.contains({c.row + 1, c.col})) v.emplace(c, g.vmap(c));
  }
  return Grid(g.field(), shape, g.orientation(), dims, h, v);
}

}  // namespace dchase
