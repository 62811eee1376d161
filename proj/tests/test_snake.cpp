#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dchase/error.hpp"
#include "dchase/genrand.hpp"
#include "dchase/snake.hpp"
#include "instances.hpp"
#include "oracle.hpp"

using namespace dchase;

namespace {

const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);

SnakeInput worked() { return instances::snake_worked(); }

std::string error_text(const SnakeInput& in) {
  try {
    require_snake_hypotheses(in);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::hypothesis_failure);
    return e.what();
  }
  FAIL("hypotheses accepted");
  return {};
}

void check_delta_by_enumeration(const SnakeInput& in, const Matrix& delta) {
  CHECK(oracle::delta_matches_enumeration(in, delta));
}

}  // namespace

TEST_CASE("worked example") {
  SnakeInput in = worked();
  require_snake_hypotheses(in);
  SnakeResult r = snake(in);
  CHECK(r.delta == Matrix::identity(F2, 1));
  CHECK(r.six_term.dims() == std::vector<std::size_t>{0, 0, 1, 1, 0, 0});
  CHECK(r.all_exact());
  CHECK(r.addenda_hold());
  check_delta_by_enumeration(in, r.delta);
  SnakeResult v = snake_via_grids(in);
  CHECK(snake_results_agree(r, v));
  CHECK(v.delta == r.delta);
}

TEST_CASE("zero input") {
  Matrix z = Matrix::zero(F5, 0, 0);
  SnakeResult r = snake({F5, z, z, z, z, z, z, z});
  CHECK(r.six_term.dims() == std::vector<std::size_t>{0, 0, 0, 0, 0, 0});
  CHECK(r.all_exact());
  CHECK(snake_results_agree(r, snake_via_grids({F5, z, z, z, z, z, z, z})));
}

TEST_CASE("zero vertical maps give the two rows back with delta = 0") {
  Matrix f = Matrix::from_ints(F2, {{1}, {0}}), g = Matrix::from_ints(F2, {{0, 1}});
  SnakeInput in{F2, f, g, f, g, Matrix::zero(F2, 1, 1), Matrix::zero(F2, 2, 2), Matrix::zero(F2, 1, 1)};
  SnakeResult r = snake(in);
  CHECK(r.six_term.dims() == std::vector<std::size_t>{1, 2, 1, 1, 2, 1});
  CHECK(r.delta.is_zero());
  CHECK(r.all_exact());
  CHECK(r.f_monic_iff == std::pair{true, true});
  CHECK(r.gp_epi_iff == std::pair{true, true});
  check_delta_by_enumeration(in, r.delta);
}

TEST_CASE("hypothesis failures name the problem") {
  SnakeInput in = worked();
  in.g = Matrix::zero(F2, 1, 1);
  CHECK(error_text(in).find("top row") != std::string::npos);

  Matrix id = Matrix::identity(F2, 1);
  SnakeInput sq{F2, id, Matrix::zero(F2, 0, 1), id, Matrix::zero(F2, 0, 1), Matrix::zero(F2, 1, 1), id,
                Matrix::zero(F2, 0, 0)};
  CHECK(error_text(sq).find("square A,B,A',B'") != std::string::npos);

  in = worked();
  in.fp = Matrix::zero(F2, 1, 1);
  in.beta = Matrix::zero(F2, 1, 1);
  CHECK(error_text(in).find("bottom row") != std::string::npos);

  in = worked();
  in.alpha = Matrix::zero(F2, 2, 0);
  try {
    require_snake_hypotheses(in);
    FAIL("expected dimension_mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::dimension_mismatch);
  }
}

TEST_CASE("generated inputs over F_2: delta by enumeration") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_dim = 2;
    cfg.f_monic = seed & 1;
    cfg.gp_epi = (seed >> 1) & 1;
    SnakeInput in = random_snake_input(cfg);
    SnakeResult r = snake(in);
    CHECK(r.all_exact());
    CHECK(r.addenda_hold());
    CHECK(r.f_monic_iff.first == static_cast<bool>(seed & 1));
    CHECK(r.gp_epi_iff.first == static_cast<bool>((seed >> 1) & 1));
    check_delta_by_enumeration(in, r.delta);
  }
}

TEST_CASE("the two routes agree") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.field = seed % 3 == 0 ? F2 : seed % 3 == 1 ? F5 : Field::rationals();
    cfg.max_dim = 3;
    SnakeInput in = random_snake_input(cfg);
    SnakeResult a = snake(in), b = snake_via_grids(in);
    CHECK(b.all_exact());
    CHECK(snake_results_agree(a, b));
    CHECK(a.delta == b.delta);
    CHECK(validate(snake_kernel_grid(in)).valid());
    CHECK(validate(snake_cokernel_grid(in)).valid());
  }
}
