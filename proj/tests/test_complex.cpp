#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dchase/complex.hpp"
#include "dchase/error.hpp"
#include "dchase/genrand.hpp"
#include "oracle.hpp"

using namespace dchase;

namespace {

const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);

long euler(const std::vector<std::size_t>& v) {
  long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i % 2 ? -1 : 1) * static_cast<long>(v[i]);
  return s;
}

}  // namespace

TEST_CASE("is_complex examples") {
  CHECK(is_complex(ChainComplex(F2, {2, 1, 3}, {Matrix::zero(F2, 1, 2), Matrix::zero(F2, 3, 1)})));
  CHECK(is_complex(ChainComplex(F2, {0, 2, 2, 0},
                                {Matrix::zero(F2, 2, 0), Matrix::identity(F2, 2), Matrix::zero(F2, 0, 2)})));
  ChainComplex bad(F5, {1, 1, 1}, {Matrix::identity(F5, 1), Matrix::identity(F5, 1)});
  CHECK_FALSE(is_complex(bad));
  try {
    require_complex(bad);
    FAIL("expected not_complex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_complex);
  }
  CHECK_THROWS_AS(homology_at(bad, 1), Error);
  CHECK_THROWS_AS(ChainComplex(F2, {1, 2}, {Matrix::zero(F2, 1, 1)}), Error);
}

TEST_CASE("homology examples") {
  ChainComplex exact(F2, {0, 2, 2, 0}, {Matrix::zero(F2, 2, 0), Matrix::identity(F2, 2), Matrix::zero(F2, 0, 2)});
  CHECK(homology_dims(exact) == std::vector<std::size_t>{0, 0, 0, 0});

  ChainComplex zeros(F2, {1, 1, 1}, {Matrix::zero(F2, 1, 1), Matrix::zero(F2, 1, 1)});
  CHECK(homology_dims(zeros) == std::vector<std::size_t>{1, 1, 1});
  CHECK_FALSE(is_exact_at(zeros, 1));

  Matrix d0 = Matrix::from_ints(F2, {{1, 0}, {0, 0}}), d1 = Matrix::from_ints(F2, {{0, 0}, {0, 1}});
  ChainComplex c(F2, {2, 2, 2}, {d0, d1});
  HomologyAt h = homology_at(c, 1);
  CHECK(h.dim == 0);
  CHECK(oracle::elements(h.cycles) == oracle::ker(d1));
  CHECK(oracle::elements(h.boundaries) == oracle::im(d0));
  CHECK(is_exact_at(c, 1));
  // ends: nothing comes into position 0, everything at the last position is a cycle
  CHECK(homology_at(c, 0).dim == 1);
  CHECK(homology_at(c, 2).dim == 1);
}

TEST_CASE("homology classes and representatives") {
  // F_5^1 -> F_5^3 -> F_5^1 with a 1-dim middle homology
  Matrix d0 = Matrix::from_ints(F5, {{1}, {1}, {0}}), d1 = Matrix::from_ints(F5, {{1, 4, 0}});
  ChainComplex c(F5, {1, 3, 1}, {d0, d1});
  HomologyAt h = homology_at(c, 1);
  REQUIRE(h.dim == 1);
  Vector rep = h.representative(0);
  CHECK(is_zero_vector(F5, d1.apply(rep)));
  CHECK(h.class_of_cycle(rep) == Vector{F5.one()});
  // boundaries have class zero, cycles differing by a boundary share a class
  Vector b = d0.apply(Vector{F5.from_int(3)});
  CHECK(is_zero_vector(F5, h.class_of_cycle(b)));
  Vector shifted = rep;
  for (std::size_t i = 0; i < 3; ++i) shifted[i] = F5.add(shifted[i], b[i]);
  CHECK(h.class_of_cycle(shifted) == Vector{F5.one()});
  CHECK_THROWS_AS(h.class_of_cycle(Vector{F5.one(), F5.zero(), F5.zero()}), Error);
}

TEST_CASE("generated complexes") {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.field = F5;
  cfg.max_dim = 6;
  ChainComplex c = random_exact_complex(cfg, 5);
  CHECK(c.size() == 5);
  for (std::size_t k = 1; k <= 3; ++k) CHECK(is_exact_at(c, k));

  cfg.conjugate = false;
  ChainComplex plain = random_exact_complex(cfg, 5);
  CHECK(homology_dims(plain) == homology_dims(c));
  CHECK(random_exact_complex(cfg, 5) == plain);
  CHECK_THROWS_AS(random_exact_complex(cfg, 1), Error);
}

TEST_CASE("Euler characteristic and base change on random complexes") {
  SplitMix64 rng(5);
  for (const Field& f : {F2, F5, Field::rationals()}) {
    for (int t = 0; t < 40; ++t) {
      // d1 d0 = 0 by construction: d0 = K x with K spanning Ker d1
      std::size_t n0 = rng.below(4), n1 = rng.below(5), n2 = rng.below(4);
      Matrix d1 = random_matrix(f, n2, n1, rng);
      Matrix d0 = kernel(d1).inclusion() * random_matrix(f, kernel(d1).dim(), n0, rng);
      ChainComplex c(f, {n0, n1, n2}, {d0, d1});
      REQUIRE(is_complex(c));
      auto h = homology_dims(c);
      CHECK(euler(c.dims()) == euler(h));

      auto p0 = random_invertible(f, n0, rng), p1 = random_invertible(f, n1, rng), p2 = random_invertible(f, n2, rng);
      ChainComplex moved(f, {n0, n1, n2}, {p1.first * d0 * p0.second, p2.first * d1 * p1.second});
      CHECK(homology_dims(moved) == h);
    }
  }
}
