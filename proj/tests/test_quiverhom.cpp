#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dchase/error.hpp"
#include "dchase/genrand.hpp"
#include "dchase/quiverhom.hpp"
#include "instances.hpp"
#include "oracle.hpp"

using namespace dchase;

namespace {

const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);
const Quiver A2{2, {{0, 1}}};           // 1 -> 2
const Quiver KRONECKER{2, {{0, 1}, {0, 1}}};

Representation rep(const Quiver& q, std::vector<std::size_t> dims, std::vector<Matrix> maps, const Field& f = F2) {
  return Representation(f, q, std::move(dims), std::move(maps));
}

using instances::ar_sequence;
using instances::p1;
using instances::s1;
using instances::s2;

RepMap map_of(std::vector<Matrix> cs) { return {std::move(cs)}; }

Representation random_rep(const Quiver& q, std::size_t max_dim, SplitMix64& rng) {
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count; ++v) dims.push_back(rng.below(max_dim + 1));
  std::vector<Matrix> maps;
  for (auto [s, t] : q.arrows) maps.push_back(oracle::random_f2(dims[t], dims[s], rng));
  return rep(q, dims, maps);
}

std::vector<RepMap> all_morphisms(const Representation& x, const Representation& y) { return oracle::morphisms(x, y); }

}  // namespace

TEST_CASE("representations") {
  CHECK(p1().total_dim() == 2);
  CHECK_THROWS_AS(rep(A2, {1, 2}, {Matrix::zero(F2, 1, 1)}), Error);
  CHECK_THROWS_AS(rep(Quiver{2, {{0, 2}}}, {1, 1}, {Matrix::zero(F2, 1, 1)}), Error);
  Representation sum = direct_sum({s1(), s2(), p1()});
  CHECK(sum.vertex_dims() == std::vector<std::size_t>{2, 2});
}

TEST_CASE("Hom examples on 1 -> 2") {
  CHECK(hom_space(p1(), p1()).dim == 1);
  CHECK(hom_space(s2(), p1()).dim == 1);
  CHECK(hom_space(p1(), s1()).dim == 1);
  CHECK(hom_space(s1(), p1()).dim == 0);
  CHECK(hom_space(p1(), s2()).dim == 0);
  CHECK(hom_space(s1(), s2()).dim == 0);
  HomSpace h = hom_space(p1(), p1());
  CHECK(is_morphism(h.basis[0], p1(), p1()));
  CHECK(h.coordinates(identity_map(p1())).has_value());
  CHECK_FALSE(h.coordinates(map_of({Matrix::identity(F2, 1), Matrix::zero(F2, 1, 1)})).has_value());
  CHECK_THROWS_AS(hom_space(p1(), rep(A2, {1, 1}, {Matrix::identity(F5, 1)}, F5)), Error);
}

TEST_CASE("Hom dimensions match enumeration over F_2") {
  SplitMix64 rng(31);
  for (const Quiver& q : {A2, KRONECKER}) {
    for (int t = 0; t < 60; ++t) {
      Representation x = random_rep(q, 2, rng), y = random_rep(q, 2, rng);
      HomSpace h = hom_space(x, y);
      auto morphisms = all_morphisms(x, y);
      CHECK((std::size_t{1} << h.dim) == morphisms.size());
      for (const auto& phi : h.basis) CHECK(is_morphism(phi, x, y));
      for (const auto& phi : morphisms) CHECK(h.coordinates(phi).has_value());
    }
  }
}

TEST_CASE("induced Hom maps") {
  SplitMix64 rng(8);
  for (int t = 0; t < 40; ++t) {
    Representation w = random_rep(A2, 2, rng), a = random_rep(A2, 2, rng), b = random_rep(A2, 2, rng),
                   c = random_rep(A2, 2, rng);
    CHECK(hom_map_covariant(w, a, a, identity_map(a)).is_identity());
    CHECK(hom_map_contravariant(w, w, identity_map(w), a).is_identity());
    HomSpace ab = hom_space(a, b), bc = hom_space(b, c);
    for (const auto& f : ab.basis)
      for (const auto& g : bc.basis) {
        CHECK(hom_map_covariant(w, a, c, compose(g, f)) ==
              hom_map_covariant(w, b, c, g) * hom_map_covariant(w, a, b, f));
        CHECK(hom_map_contravariant(a, c, compose(g, f), w) ==
              hom_map_contravariant(a, b, f, w) * hom_map_contravariant(b, c, g, w));
      }
    RepMap zero;
    for (std::size_t v = 0; v < 2; ++v) zero.components.push_back(Matrix::zero(F2, b.vertex_dims()[v], a.vertex_dims()[v]));
    CHECK(hom_map_covariant(w, a, b, zero).is_zero());
  }
}

TEST_CASE("functor dims match enumeration over F_2") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_dim = 2;
    QuiverInstance inst = random_quiver_instance(cfg);
    const RightExactSeq& e = inst.e_seq;
    for (const Representation* a : {&inst.a_seq.a, &inst.a_seq.b, &inst.a_seq.c}) {
      std::size_t expected = oracle::functor_dim_by_enumeration(e, *a);
      CHECK(functor_dim(e, *a) == expected);
    }
  }
}

TEST_CASE("exactness requirements") {
  CHECK_NOTHROW(require_short_exact(ar_sequence()));
  ShortExactSeq broken = ar_sequence();
  broken.incl = map_of({Matrix::zero(F2, 1, 0), Matrix::zero(F2, 1, 1)});
  CHECK_THROWS_AS(require_short_exact(broken), Error);
  RightExactSeq e{s2(), p1(), s1(), ar_sequence().incl, ar_sequence().proj};
  CHECK_NOTHROW(require_right_exact(e));
}

TEST_CASE("a sequence whose end term is a summand") {
  // E = Cok Hom(u, -) for S2 -> P1 -> S1 -> 0: E(S2) = 1, E(P1) = 0, E(S1) = 0
  ShortExactSeq s = ar_sequence();
  RightExactSeq e = instances::summand_presentation();
  AdditivityReport r = additivity_check(s, e);
  CHECK(r.dim_e_a == 1);
  CHECK(r.dim_e_b == 0);
  CHECK(r.dim_e_c == 0);
  CHECK(r.defect == 1);
  CHECK(r.summand_flag);
  CHECK_FALSE(r.summand_heuristic);
  CHECK(r.cokernel_homology.equal());
}

TEST_CASE("a sequence with nothing in common") {
  // X = S2, Y = Z = 0: E = Hom(S2, -), which is exact on the sequence
  ShortExactSeq s = ar_sequence();
  RightExactSeq e = instances::disjoint_presentation();
  AdditivityReport r = additivity_check(s, e);
  CHECK(r.defect == 0);
  CHECK_FALSE(r.summand_flag);
  CHECK(r.cokernel_homology.equal());
}

TEST_CASE("summand search") {
  CHECK(find_summand(s1(), direct_sum({s2(), s1()})).found);
  CHECK_FALSE(find_summand(s1(), p1()).found);
  CHECK(find_summand(p1(), direct_sum({p1(), p1()})).found);
  CHECK_FALSE(find_summand(Representation::zero(F2, A2), p1()).found);
}

TEST_CASE("Hom grids") {
  SUBCASE("A = 0") {
    ShortExactSeq s{Representation::zero(F2, A2), p1(), p1(), map_of({Matrix::zero(F2, 1, 0), Matrix::zero(F2, 1, 0)}),
                    identity_map(p1())};
    RightExactSeq e{s2(), p1(), s1(), ar_sequence().incl, ar_sequence().proj};
    Grid g = hom_grid(s, e);
    CHECK(g.orientation() == Orientation::cokernel);
    CHECK(validate(g).valid());
    CHECK(g.dim({0, 2}) == 0);
    CHECK(g.dim({1, 1}) == 1);  // Hom(P1, P1)
  }
  SUBCASE("generated") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      GenConfig cfg;
      cfg.seed = seed;
      cfg.field = seed % 4 == 3 ? F5 : F2;
      cfg.max_dim = 2;
      QuiverInstance inst = random_quiver_instance(cfg);
      Grid g = hom_grid(inst.a_seq, inst.e_seq);
      CHECK(validate(g).valid());
      CHECK(ccl_homology_dims(g).equal());
      AdditivityReport r = additivity_check(inst.a_seq, inst.e_seq);
      CHECK(r.defect == static_cast<long>(r.dim_e_a + r.dim_e_c) - static_cast<long>(r.dim_e_b));
    }
  }
}
