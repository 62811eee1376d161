#pragma once

// Brute-force F_2 oracles. Vectors are bitmasks (bit i = coordinate i) and
// subspaces are explicit sets of vectors; nothing here touches the RREF code.

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "dchase/exactla.hpp"
#include "dchase/genrand.hpp"
#include "dchase/grid.hpp"
#include "dchase/relation.hpp"

namespace oracle {

using dchase::Field;
using dchase::Matrix;
using dchase::Scalar;
using dchase::Subspace;
using dchase::Vector;
using Mask = std::uint32_t;
using Set = std::set<Mask>;
using PairSet = std::set<std::pair<Mask, Mask>>;

inline const Field& f2() {
  static const Field f = Field::prime(2);
  return f;
}

inline Mask to_mask(std::span<const Scalar> v) {
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].residue()) m |= Mask{1} << i;
  return m;
}

inline Vector to_vector(Mask m, std::size_t n) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f2().from_int((m >> i) & 1));
  return v;
}

inline Mask apply(const Matrix& a, Mask x) {
  Mask y = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    unsigned bit = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) bit ^= static_cast<unsigned>(a.at(r, c).residue()) & ((x >> c) & 1);
    if (bit) y |= Mask{1} << r;
  }
  return y;
}

inline Mask all(std::size_t n) { return Mask{1} << n; }

inline Set span(const std::vector<Mask>& gens) {
  Set s{0};
  for (Mask g : gens) {
    Set next = s;
    for (Mask v : s) next.insert(v ^ g);
    s = std::move(next);
  }
  return s;
}

inline Set elements(const Subspace& w) {
  std::vector<Mask> gens;
  for (std::size_t k = 0; k < w.dim(); ++k) gens.push_back(to_mask(w.basis().row(k)));
  return span(gens);
}

inline Set ker(const Matrix& a) {
  Set s;
  for (Mask x = 0; x < all(a.cols()); ++x)
    if (apply(a, x) == 0) s.insert(x);
  return s;
}

inline Set im(const Matrix& a) {
  Set s;
  for (Mask x = 0; x < all(a.cols()); ++x) s.insert(apply(a, x));
  return s;
}

inline Set intersect(const Set& a, const Set& b) {
  Set s;
  for (Mask v : a)
    if (b.contains(v)) s.insert(v);
  return s;
}

inline Set sum(const Set& a, const Set& b) {
  Set s;
  for (Mask x : a)
    for (Mask y : b) s.insert(x ^ y);
  return s;
}

inline Set annihilator(const Set& w, std::size_t n) {
  Set s;
  for (Mask x = 0; x < all(n); ++x) {
    bool ok = true;
    for (Mask y : w) ok = ok && __builtin_popcount(x & y) % 2 == 0;
    if (ok) s.insert(x);
  }
  return s;
}

// Relation on B x A as pairs (b, a).
inline PairSet pairs(const dchase::Relation& r) {
  PairSet out;
  Mask lo = all(r.left_dim()) - 1;
  for (Mask v : elements(r.space())) out.insert({v & lo, v >> r.left_dim()});
  return out;
}

inline PairSet graph_pairs(const Matrix& f) {
  PairSet out;
  for (Mask a = 0; a < all(f.cols()); ++a) out.insert({apply(f, a), a});
  return out;
}

inline PairSet inverse(const PairSet& r) {
  PairSet out;
  for (auto [b, a] : r) out.insert({a, b});
  return out;
}

// r on B x A, s on A x C
inline PairSet compose(const PairSet& r, const PairSet& s) {
  PairSet out;
  for (auto [b, a] : r)
    for (auto [a2, c] : s)
      if (a == a2) out.insert({b, c});
  return out;
}

// The three statements of the cross lemma decided element by element.
struct CrossVerdicts {
  bool part1 = true, part2a = true, part2b = true;
};

inline CrossVerdicts cross_by_enumeration(const Matrix& beta1, const Matrix& beta2, const Matrix& f, const Matrix& g) {
  CrossVerdicts v;
  Set im_b2f = im(beta2 * f), im_gb1 = im(g * beta1), im_f = im(f), im_b1 = im(beta1);
  for (Mask b2 = 0; b2 < all(f.rows()); ++b2) {
    Mask c = apply(g, b2), b3 = apply(beta2, b2);
    v.part1 = v.part1 && (im_b2f.contains(b3) == im_gb1.contains(c));
  }
  for (Mask a = 0; a < all(f.cols()); ++a) {
    bool related = im_b1.contains(apply(f, a));  // some b1 with beta1 b1 = f a
    v.part2a = v.part2a && ((apply(beta2, apply(f, a)) == 0) == related);
  }
  for (Mask b1 = 0; b1 < all(beta1.cols()); ++b1) {
    bool related = im_f.contains(apply(beta1, b1));
    v.part2b = v.part2b && ((apply(g, apply(beta1, b1)) == 0) == related);
  }
  return v;
}


// ---- grids ---------------------------------------------------------------

inline std::size_t log2_size(const Set& s) {
  std::size_t d = 0;
  while ((std::size_t{1} << d) < s.size()) ++d;
  return d;
}

inline Set whole(std::size_t n) {
  Set s;
  for (Mask x = 0; x < all(n); ++x) s.insert(x);
  return s;
}

inline Set preimage(const Matrix& f, const Set& target) {
  Set s;
  for (Mask x = 0; x < all(f.cols()); ++x)
    if (target.contains(apply(f, x))) s.insert(x);
  return s;
}

inline Set image_of(const Matrix& f, const Set& src) {
  Set s;
  for (Mask x : src) s.insert(apply(f, x));
  return s;
}

// Homology dims of the top (first) and left (second) kernel complexes of a
// kernel-oriented grid at positions 1..n, from element sets only.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> kernel_dims_by_enumeration(const dchase::Grid& g,
                                                                                                 std::size_t n) {
  using dchase::Cell;
  auto side = [&](bool top) {
    auto cell = [&](std::size_t k) { return top ? Cell{0, k} : Cell{k, 0}; };
    auto across = [&](std::size_t k) { return top ? Cell{1, k} : Cell{k, 1}; };
    auto along = [&](std::size_t k) -> const Matrix& { return top ? g.hmap(cell(k)) : g.vmap(cell(k)); };
    auto cross_map = [&](std::size_t k) -> const Matrix& { return top ? g.vmap(cell(k)) : g.hmap(cell(k)); };
    auto term = [&](std::size_t k) {
      return g.shape().contains(across(k)) ? ker(cross_map(k)) : whole(g.dim(cell(k)));
    };
    std::vector<std::size_t> dims;
    for (std::size_t p = 1; p <= n; ++p) {
      std::size_t k = p - 1;
      Set t = term(k);
      Set cycles = g.shape().contains(cell(k + 1)) ? intersect(t, preimage(along(k), Set{0})) : t;
      Set bounds = k == 0 ? Set{0} : image_of(along(k - 1), term(k - 1));
      dims.push_back(log2_size(cycles) - log2_size(bounds));
    }
    return dims;
  };
  return {side(true), side(false)};
}

// Homology dims of the right (first) and bottom (second) cokernel complexes of
// a cokernel-oriented grid at positions 1..n. The term at position p is the
// cell at distance p - 1 from the corner modulo the image of the map coming in
// across; everything is computed on representatives in the ambient cell.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> cokernel_dims_by_enumeration(const dchase::Grid& g,
                                                                                                   std::size_t n) {
  using dchase::Cell;
  auto side = [&](bool right) {
    auto cell = [&](std::size_t k) { return right ? Cell{k, 0} : Cell{0, k}; };
    auto across = [&](std::size_t k) { return right ? Cell{k, 1} : Cell{1, k}; };
    // along(k) : cell(k+1) -> cell(k), across map : across(k) -> cell(k)
    auto along = [&](std::size_t k) -> const Matrix& { return right ? g.vmap(cell(k)) : g.hmap(cell(k)); };
    auto cross_map = [&](std::size_t k) -> const Matrix& { return right ? g.hmap(cell(k)) : g.vmap(cell(k)); };
    auto w = [&](std::size_t k) { return g.shape().contains(across(k)) ? im(cross_map(k)) : Set{0}; };
    std::vector<std::size_t> dims;
    for (std::size_t p = 1; p <= n; ++p) {
      std::size_t k = p - 1;
      Set cycles = k == 0 ? whole(g.dim(cell(k))) : preimage(along(k - 1), w(k - 1));
      Set bounds = g.shape().contains(cell(k + 1)) ? sum(im(along(k)), w(k)) : w(k);
      dims.push_back(log2_size(cycles) - log2_size(bounds));
    }
    return dims;
  };
  return {side(true), side(false)};
}

// The antidiagonal relation at position n as pairs (left kernel term coords,
// top kernel term coords), by pushing element sets down the antidiagonal.
inline PairSet antidiagonal_by_enumeration(const dchase::Grid& g, std::size_t n, const Subspace& top_term,
                                           const Subspace& left_term) {
  using dchase::Cell;
  PairSet out;
  for (Mask c = 0; c < all(top_term.dim()); ++c) {
    Set current{apply(top_term.inclusion(), c)};
    for (std::size_t k = 0; k + 1 < n; ++k) {
      Cell at{k, n - 2 - k};
      current = image_of(g.vmap(at), preimage(g.hmap(at), current));
    }
    for (Mask z = 0; z < all(left_term.dim()); ++z)
      if (current.contains(apply(left_term.inclusion(), z))) out.insert({z, c});
  }
  return out;
}


// ---- snake and quiver representations ------------------------------------

// Every lift of every c in Ker gamma (chase back through g, across beta, back
// through f') ends in the Cok alpha class named by delta, and lifts exist.
inline bool delta_matches_enumeration(const dchase::SnakeInput& in, const Matrix& delta) {
  Subspace kc = dchase::kernel(in.gamma);
  dchase::QuotientSpace qa = dchase::quotient(in.alpha.rows(), dchase::image(in.alpha));
  for (Mask x = 0; x < all(kc.dim()); ++x) {
    Mask c = apply(kc.inclusion(), x), want = apply(delta, x);
    std::size_t chains = 0;
    for (Mask b : preimage(in.g, Set{c}))
      for (Mask a2 : preimage(in.fp, Set{apply(in.beta, b)})) {
        ++chains;
        if (apply(qa.projection, a2) != want) return false;
      }
    if (chains == 0) return false;
  }
  return true;
}

// All morphisms x -> y of F_2 representations, by trying every component tuple.
inline std::vector<dchase::RepMap> morphisms(const dchase::Representation& x, const dchase::Representation& y) {
  std::size_t n = x.quiver().vertex_count, bits = 0;
  for (std::size_t v = 0; v < n; ++v) bits += x.vertex_dims()[v] * y.vertex_dims()[v];
  std::vector<dchase::RepMap> out;
  for (Mask m = 0; m < all(bits); ++m) {
    dchase::RepMap phi;
    std::size_t k = 0;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix c = Matrix::zero(f2(), y.vertex_dims()[v], x.vertex_dims()[v]);
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t col = 0; col < c.cols(); ++col, ++k) c.at(r, col) = f2().from_int((m >> k) & 1);
      phi.components.push_back(std::move(c));
    }
    bool ok = true;
    for (std::size_t a = 0; a < x.quiver().arrows.size(); ++a) {
      auto [s, t] = x.quiver().arrows[a];
      for (Mask e = 0; ok && e < all(x.vertex_dims()[s]); ++e)
        ok = apply(y.arrow_maps()[a], apply(phi.components[s], e)) ==
             apply(phi.components[t], apply(x.arrow_maps()[a], e));
    }
    if (ok) out.push_back(std::move(phi));
  }
  return out;
}

// dim Hom(X, a) - dim {psi u : psi in Hom(Y, a)}
inline std::size_t functor_dim_by_enumeration(const dchase::RightExactSeq& e, const dchase::Representation& a) {
  std::set<std::vector<Mask>> restricted;
  for (const auto& psi : morphisms(e.y, a)) {
    std::vector<Mask> key;
    for (std::size_t v = 0; v < e.x.vertex_dims().size(); ++v)
      for (Mask x = 0; x < all(e.x.vertex_dims()[v]); ++x)
        key.push_back(apply(psi.components[v], apply(e.u.components[v], x)));
    restricted.insert(std::move(key));
  }
  std::size_t hx = morphisms(e.x, a).size();
  std::size_t d = 0, r = 0;
  while ((std::size_t{1} << d) < hx) ++d;
  while ((std::size_t{1} << r) < restricted.size()) ++r;
  return d - r;
}

inline Matrix random_f2(std::size_t rows, std::size_t cols, dchase::SplitMix64& rng) {
  return dchase::random_matrix(f2(), rows, cols, rng);
}

}  // namespace oracle
