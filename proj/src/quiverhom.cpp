#include "dchase/quiverhom.hpp"

#include "dchase/error.hpp"
#include "dchase/prng.hpp"

namespace dchase {

namespace {

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

void require_same_setting(const Representation& a, const Representation& b) {
  require(a.quiver() == b.quiver(), ErrorKind::dimension_mismatch, "representations of different quivers");
  require(a.field() == b.field(), ErrorKind::dimension_mismatch, "representations over different fields");
}

void require_morphism(const RepMap& m, const Representation& s, const Representation& t, const std::string& name) {
  require(m.components.size() == s.quiver().vertex_count, ErrorKind::dimension_mismatch,
          name + " needs one component per vertex");
  for (std::size_t v = 0; v < m.components.size(); ++v)
    require(m.components[v].cols() == s.vertex_dims()[v] && m.components[v].rows() == t.vertex_dims()[v],
            ErrorKind::dimension_mismatch, name + " has a mis-sized component at vertex " + std::to_string(v));
  require(is_morphism(m, s, t), ErrorKind::hypothesis_failure, name + " does not commute with the arrow maps");
}

Vector flatten(const RepMap& m) {
  Vector v;
  for (const auto& c : m.components) v.insert(v.end(), c.entries().begin(), c.entries().end());
  return v;
}

RepMap unflatten(const Field& f, std::span<const Scalar> v, const Representation& x, const Representation& y) {
  RepMap m;
  std::size_t off = 0;
  for (std::size_t k = 0; k < x.vertex_dims().size(); ++k) {
    std::size_t r = y.vertex_dims()[k], c = x.vertex_dims()[k];
    m.components.emplace_back(f, r, c, std::vector<Scalar>(v.begin() + off, v.begin() + off + r * c));
    off += r * c;
  }
  return m;
}

RepMap combination(const Field& f, const std::vector<RepMap>& basis, std::span<const Scalar> coeffs,
                   const Representation& x, const Representation& y) {
  RepMap m;
  for (std::size_t k = 0; k < x.vertex_dims().size(); ++k) m.components.emplace_back(f, y.vertex_dims()[k], x.vertex_dims()[k]);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    for (std::size_t k = 0; k < m.components.size(); ++k)
      m.components[k] = m.components[k] + basis[i].components[k].scaled(coeffs[i]);
  }
  return m;
}

// Does psi phi = id have a solution psi in the span of psi_basis?
bool solve_left_inverse(const Field& f, const RepMap& phi, const std::vector<RepMap>& psi_basis, const Representation& c) {
  std::vector<Vector> cols;
  for (const auto& psi : psi_basis) cols.push_back(flatten(compose(psi, phi)));
  Vector id = flatten(identity_map(c));
  return solve(Matrix::from_columns(f, id.size(), cols), id).has_value();
}

bool solve_right_inverse(const Field& f, const RepMap& psi, const std::vector<RepMap>& phi_basis, const Representation& c) {
  std::vector<Vector> cols;
  for (const auto& phi : phi_basis) cols.push_back(flatten(compose(psi, phi)));
  Vector id = flatten(identity_map(c));
  return solve(Matrix::from_columns(f, id.size(), cols), id).has_value();
}

}  // namespace

Representation::Representation(Field field, Quiver quiver, std::vector<std::size_t> vertex_dims,
                               std::vector<Matrix> arrow_maps)
    : field_(field), quiver_(std::move(quiver)), vertex_dims_(std::move(vertex_dims)), arrow_maps_(std::move(arrow_maps)) {
  require(vertex_dims_.size() == quiver_.vertex_count, ErrorKind::dimension_mismatch,
          "representation needs one dimension per vertex");
  require(arrow_maps_.size() == quiver_.arrows.size(), ErrorKind::dimension_mismatch,
          "representation needs one map per arrow");
  for (std::size_t a = 0; a < arrow_maps_.size(); ++a) {
    auto [s, t] = quiver_.arrows[a];
    require(s < quiver_.vertex_count && t < quiver_.vertex_count, ErrorKind::parse,
            "arrow " + std::to_string(a) + " leaves the vertex range");
    require(arrow_maps_[a].cols() == vertex_dims_[s] && arrow_maps_[a].rows() == vertex_dims_[t],
            ErrorKind::dimension_mismatch, "map of arrow " + std::to_string(a) + " does not fit its vertices");
  }
}

Representation Representation::zero(Field field, Quiver quiver) {
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver.arrows.size(); ++a) maps.push_back(Matrix::zero(field, 0, 0));
  std::size_t n = quiver.vertex_count;
  return Representation(field, std::move(quiver), std::vector<std::size_t>(n, 0), std::move(maps));
}

std::size_t Representation::total_dim() const {
  std::size_t n = 0;
  for (auto d : vertex_dims_) n += d;
  return n;
}

bool is_morphism(const RepMap& m, const Representation& s, const Representation& t) {
  for (std::size_t a = 0; a < s.quiver().arrows.size(); ++a) {
    auto [src, dst] = s.quiver().arrows[a];
    if (!(t.arrow_maps()[a] * m.components[src] == m.components[dst] * s.arrow_maps()[a])) return false;
  }
  return true;
}

RepMap compose(const RepMap& second, const RepMap& first) {
  RepMap m;
  for (std::size_t v = 0; v < first.components.size(); ++v)
    m.components.push_back(second.components[v] * first.components[v]);
  return m;
}

RepMap identity_map(const Representation& r) {
  RepMap m;
  for (auto d : r.vertex_dims()) m.components.push_back(Matrix::identity(r.field(), d));
  return m;
}

std::optional<Vector> HomSpace::coordinates(const RepMap& m) const { return solutions.coordinates(flatten(m)); }

HomSpace hom_space(const Representation& x, const Representation& y) {
  require_same_setting(x, y);
  const Field& f = x.field();
  const auto& q = x.quiver();
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    offset.push_back(unknowns);
    unknowns += y.vertex_dims()[v] * x.vertex_dims()[v];
  }
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * x.vertex_dims()[v] + c; };

  // y_a phi_s - phi_t x_a = 0, one equation per entry
  std::vector<Vector> equations;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    const Matrix& ya = y.arrow_maps()[a];
    const Matrix& xa = x.arrow_maps()[a];
    for (std::size_t r = 0; r < y.vertex_dims()[t]; ++r)
      for (std::size_t c = 0; c < x.vertex_dims()[s]; ++c) {
        Vector eq(unknowns, f.zero());
        for (std::size_t k = 0; k < y.vertex_dims()[s]; ++k) eq[var(s, k, c)] = f.add(eq[var(s, k, c)], ya.at(r, k));
        for (std::size_t k = 0; k < x.vertex_dims()[t]; ++k) eq[var(t, r, k)] = f.sub(eq[var(t, r, k)], xa.at(k, c));
        equations.push_back(std::move(eq));
      }
  }
  Subspace sol = kernel(Matrix::from_rows(f, unknowns, equations));
  std::vector<RepMap> basis;
  for (std::size_t k = 0; k < sol.dim(); ++k) basis.push_back(unflatten(f, sol.basis().row(k), x, y));
  return {sol.dim(), std::move(basis), std::move(sol)};
}

Matrix hom_map_covariant(const Representation& w, const Representation& b, const Representation& c, const RepMap& g) {
  require_same_setting(w, b);
  require_same_setting(b, c);
  require_morphism(g, b, c, "covariant map");
  HomSpace from = hom_space(w, b), to = hom_space(w, c);
  std::vector<Vector> cols;
  for (const auto& phi : from.basis) cols.push_back(*to.coordinates(compose(g, phi)));
  return Matrix::from_columns(w.field(), to.dim, cols);
}

Matrix hom_map_contravariant(const Representation& x, const Representation& y, const RepMap& u, const Representation& a) {
  require_same_setting(x, y);
  require_same_setting(y, a);
  require_morphism(u, x, y, "contravariant map");
  HomSpace from = hom_space(y, a), to = hom_space(x, a);
  std::vector<Vector> cols;
  for (const auto& psi : from.basis) cols.push_back(*to.coordinates(compose(psi, u)));
  return Matrix::from_columns(x.field(), to.dim, cols);
}

Representation direct_sum(const std::vector<Representation>& reps) {
  require(!reps.empty(), ErrorKind::dimension_mismatch, "direct sum of no representations");
  const auto& q = reps.front().quiver();
  const Field& f = reps.front().field();
  std::vector<std::size_t> dims(q.vertex_count, 0);
  std::vector<Matrix> maps(q.arrows.size(), Matrix::zero(f, 0, 0));
  for (const auto& r : reps) {
    require_same_setting(reps.front(), r);
    for (std::size_t v = 0; v < q.vertex_count; ++v) dims[v] += r.vertex_dims()[v];
    for (std::size_t a = 0; a < q.arrows.size(); ++a) maps[a] = block_diag(maps[a], r.arrow_maps()[a]);
  }
  return Representation(f, q, std::move(dims), std::move(maps));
}

void require_short_exact(const ShortExactSeq& s) {
  require_same_setting(s.a, s.b);
  require_same_setting(s.b, s.c);
  require_morphism(s.incl, s.a, s.b, "A -> B");
  require_morphism(s.proj, s.b, s.c, "B -> C");
  for (std::size_t v = 0; v < s.a.quiver().vertex_count; ++v) {
    const Matrix &i = s.incl.components[v], &p = s.proj.components[v];
    std::string at = " at vertex " + std::to_string(v);
    require(kernel(i).dim() == 0, ErrorKind::hypothesis_failure, "A -> B is not injective" + at);
    require(image(i) == kernel(p), ErrorKind::hypothesis_failure, "sequence is not exact at B" + at);
    require(rank(p) == p.rows(), ErrorKind::hypothesis_failure, "B -> C is not onto" + at);
  }
}

void require_right_exact(const RightExactSeq& e) {
  require_same_setting(e.x, e.y);
  require_same_setting(e.y, e.z);
  require_morphism(e.u, e.x, e.y, "u : X -> Y");
  require_morphism(e.proj, e.y, e.z, "Y -> Z");
  for (std::size_t v = 0; v < e.x.quiver().vertex_count; ++v) {
    const Matrix &u = e.u.components[v], &p = e.proj.components[v];
    std::string at = " at vertex " + std::to_string(v);
    require(image(u) == kernel(p), ErrorKind::hypothesis_failure, "sequence is not exact at Y" + at);
    require(rank(p) == p.rows(), ErrorKind::hypothesis_failure, "Y -> Z is not onto" + at);
  }
}

Grid hom_grid(const ShortExactSeq& s, const RightExactSeq& e) {
  require_short_exact(s);
  require_right_exact(e);
  require_same_setting(s.a, e.x);
  const Field& f = s.a.field();
  const Representation* rows[] = {&e.x, &e.y, &e.z};
  const Representation* cols[] = {&s.c, &s.b, &s.a};

  std::map<Cell, std::size_t> dims;
  std::map<Cell, Matrix> h, v;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) dims[{i, j}] = hom_space(*rows[i], *cols[j]).dim;
  for (std::size_t i = 0; i < 3; ++i) {
    h.emplace(Cell{i, 0}, hom_map_covariant(*rows[i], s.b, s.c, s.proj));
    h.emplace(Cell{i, 1}, hom_map_covariant(*rows[i], s.a, s.b, s.incl));
  }
  for (std::size_t j = 0; j < 3; ++j) {
    v.emplace(Cell{0, j}, hom_map_contravariant(e.x, e.y, e.u, *cols[j]));
    v.emplace(Cell{1, j}, hom_map_contravariant(e.y, e.z, e.proj, *cols[j]));
  }
  Grid g(f, StaircaseShape::rectangle(4, 4), Orientation::cokernel, dims, h, v);
  auto rep = validate(g);
  if (!rep.valid()) throw Error(ErrorKind::theorem_violation, "Hom grid fails validation although both sequences are exact");
  return g;
}

std::size_t functor_dim(const RightExactSeq& e, const Representation& a) {
  require_right_exact(e);
  Matrix m = hom_map_contravariant(e.x, e.y, e.u, a);
  return m.rows() - rank(m);
}

SummandSearch find_summand(const Representation& c, const Representation& m, std::uint64_t seed) {
  require_same_setting(c, m);
  if (c.total_dim() == 0) return {false, false};
  const Field& f = c.field();
  HomSpace to = hom_space(c, m), from = hom_space(m, c);
  if (to.dim == 0 || from.dim == 0) return {false, false};

  constexpr std::uint64_t exhaustive_limit = 1u << 16;
  std::uint64_t count = 1;
  bool exhaustive = f.is_prime_field();
  for (std::size_t k = 0; exhaustive && k < to.dim; ++k) {
    count *= static_cast<std::uint64_t>(f.characteristic());
    exhaustive = count <= exhaustive_limit;
  }
  if (exhaustive) {
    // every phi; psi is then a linear solve
    Vector coeffs(to.dim, f.zero());
    auto p = f.characteristic();
    for (std::uint64_t n = 1; n < count; ++n) {
      std::uint64_t r = n;
      for (std::size_t k = 0; k < to.dim; ++k, r /= static_cast<std::uint64_t>(p))
        coeffs[k] = f.from_int(static_cast<std::int64_t>(r % static_cast<std::uint64_t>(p)));
      if (solve_left_inverse(f, combination(f, to.basis, coeffs, c, m), from.basis, c)) return {true, false};
    }
    return {false, false};
  }

  SplitMix64 rng(seed);
  auto random_coeffs = [&](std::size_t n) {
    Vector v(n);
    for (auto& s : v)
      s = f.is_prime_field() ? f.from_int(static_cast<std::int64_t>(rng.below(f.characteristic())))
                             : f.from_int(rng.between(-3, 3));
    return v;
  };
  for (int restart = 0; restart < 64; ++restart) {
    if (solve_left_inverse(f, combination(f, to.basis, random_coeffs(to.dim), c, m), from.basis, c)) return {true, false};
    if (solve_right_inverse(f, combination(f, from.basis, random_coeffs(from.dim), m, c), to.basis, c))
      return {true, false};
  }
  return {false, true};
}

AdditivityReport additivity_check(const ShortExactSeq& s, const RightExactSeq& e) {
  Grid g = hom_grid(s, e);
  AdditivityReport rep{};
  rep.dim_e_a = functor_dim(e, s.a);
  rep.dim_e_b = functor_dim(e, s.b);
  rep.dim_e_c = functor_dim(e, s.c);
  rep.defect = static_cast<long>(rep.dim_e_a + rep.dim_e_c) - static_cast<long>(rep.dim_e_b);
  rep.cokernel_homology = ccl_homology_dims(g);
  auto found = find_summand(s.c, direct_sum({e.x, e.y, e.z}));
  rep.summand_flag = found.found;
  rep.summand_heuristic = found.heuristic;
  return rep;
}

}  // namespace dchase
