#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dchase/error.hpp"
#include "dchase/genrand.hpp"
#include "dchase/io.hpp"

using namespace dchase;

namespace {

const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

std::string parse_error(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::parse || e.kind() == ErrorKind::dimension_mismatch || e.kind() == ErrorKind::shape));
    return e.what();
  }
  FAIL("document accepted");
  return {};
}

}  // namespace

TEST_CASE("matrices") {
  Matrix m = Matrix::from_ints(Q, {{1, 2}, {3, 4}}).scaled(Q.from_fraction(1, 3));
  json j = to_json(m);
  CHECK(j["entries"][0][0] == "1/3");
  CHECK(matrix_from_json(j, Q, "m") == m);
  CHECK(matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[[-1,"7"]]})"), F5, "m") ==
        Matrix::from_ints(F5, {{4, 2}}));
  CHECK(matrix_from_json(json::parse(R"({"rows":0,"cols":3,"entries":[]})"), F2, "m").cols() == 3);
  CHECK(parse_error([] { matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[[1]]})"), F2, "m"); })
            .starts_with("m.entries[0]"));
  CHECK(parse_error([] { matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["x"]]})"), Q, "m"); })
            .starts_with("m.entries[0][0]"));
  CHECK(parse_error([] { matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["1/0"]]})"), Q, "m"); })
            .starts_with("m.entries[0][0]"));
}

TEST_CASE("fields") {
  CHECK(field_from_json(json::parse(R"({"prime":7})"), "field") == Field::prime(7));
  CHECK(field_from_json(json::parse(R"({"rationals":true})"), "field") == Q);
  CHECK(parse_error([] { field_from_json(json::parse(R"({"prime":6})"), "field"); }).starts_with("field.prime"));
  CHECK(parse_error([] { field_from_json(json::parse("3"), "field"); }).starts_with("field"));
}

TEST_CASE("cell keys") {
  CHECK(cell_key({0, 2}) == "1,3");
  CHECK(parse_cell_key("2,1", "k") == Cell{1, 0});
  CHECK(parse_error([] { parse_cell_key("0,1", "k"); }).starts_with("k"));
  CHECK(parse_error([] { parse_cell_key("1;1", "k"); }).starts_with("k"));
  CHECK(parse_error([] { parse_cell_key("1,1x", "k"); }).starts_with("k"));
}

TEST_CASE("round trips") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.field = seed % 3 == 0 ? F2 : seed % 3 == 1 ? F5 : Q;
    cfg.shape = StaircaseShape({4, 3, 3});
    cfg.orientation = seed % 2 ? Orientation::cokernel : Orientation::kernel;
    Grid g = random_exact_grid(cfg);
    CHECK(grid_from_json(to_json(g)) == g);
    CHECK(grid_from_json(json::parse(to_json(g).dump())) == g);

    ChainComplex c = random_exact_complex(cfg, 4);
    CHECK(complex_from_json(to_json(c)) == c);

    SnakeInput s = random_snake_input(cfg);
    SnakeInput s2 = snake_from_json(to_json(s));
    CHECK(s2.alpha == s.alpha);
    CHECK(s2.gp == s.gp);
    CHECK(to_json(s2) == to_json(s));

    Cross x = random_cross(cfg);
    CHECK(to_json(cfg.field, cross_from_json(to_json(cfg.field, x))) == to_json(cfg.field, x));

    QuiverInstance q = random_quiver_instance(cfg);
    CHECK(to_json(aseq_from_json(to_json(q.a_seq))) == to_json(q.a_seq));
    CHECK(to_json(eseq_from_json(to_json(q.e_seq))) == to_json(q.e_seq));
  }
}

TEST_CASE("field override") {
  Grid g = Grid::zero(F2, StaircaseShape::rectangle(2, 2), Orientation::kernel);
  json j = to_json(g);
  CHECK(grid_from_json(j, F5).field() == F5);
  j.erase("field");
  CHECK(parse_error([&] { grid_from_json(j); }).starts_with("field"));
  CHECK(grid_from_json(j, Q).field() == Q);
}

TEST_CASE("grid documents") {
  json j = to_json(Grid::zero(F2, StaircaseShape::rectangle(2, 2), Orientation::kernel));
  json bad = j;
  bad["hmaps"]["1,1"] = json::parse(R"({"rows":1,"cols":1,"entries":[[1]]})");
  CHECK(parse_error([&] { grid_from_json(bad); }).find("hmaps.1,1") != std::string::npos);
  bad = j;
  bad["spaces"]["3,1"] = 1;
  CHECK(parse_error([&] { grid_from_json(bad); }).find("3,1") != std::string::npos);
  bad = j;
  bad["orientation"] = "sideways";
  CHECK(parse_error([&] { grid_from_json(bad); }).starts_with("orientation"));
  bad = j;
  bad["shape"] = json::array({1, 2});
  parse_error([&] { grid_from_json(bad); });
}
