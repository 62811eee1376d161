#include "dchase/io.hpp"

#include "dchase/error.hpp"

namespace dchase {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::parse, (path.empty() ? std::string("document") : path) + ": " + what);
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(join(path, key), "missing");
  return *it;
}

std::size_t nat(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar scalar_from_json(const json& j, const Field& f, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      fail(path, "integer out of range");
    return f.from_int(j.get<std::int64_t>());
  }
  if (!j.is_string()) fail(path, "expected an integer or a \"num/den\" string");
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  mpz_class num, den(1);
  try {
    num = mpz_class(s.substr(0, slash));
    if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1));
  } catch (const std::invalid_argument&) {
    fail(path, "malformed number \"" + s + "\"");
  }
  try {
    return f.from_fraction(num, den);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

std::vector<std::size_t> nat_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(nat(j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

Matrix expect_shape(Matrix m, std::size_t rows, std::size_t cols, const std::string& path) {
  if (m.rows() != rows || m.cols() != cols)
    throw Error(ErrorKind::dimension_mismatch, path + ": expected a " + std::to_string(rows) + "x" +
                                                   std::to_string(cols) + " matrix, got " +
                                                   std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return m;
}

Quiver quiver_from_json(const json& j, const std::string& path) {
  Quiver q;
  q.vertex_count = nat(member(j, "vertices", path), join(path, "vertices"));
  const json& arrows = member(j, "arrows", path);
  if (!arrows.is_array()) fail(join(path, "arrows"), "expected an array");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    std::string p = join(path, "arrows") + "[" + std::to_string(k) + "]";
    if (!arrows[k].is_array() || arrows[k].size() != 2) fail(p, "expected [source, target]");
    std::size_t s = nat(arrows[k][0], p + "[0]"), t = nat(arrows[k][1], p + "[1]");
    if (s >= q.vertex_count || t >= q.vertex_count) fail(p, "vertex out of range");
    q.arrows.push_back({s, t});
  }
  return q;
}

Representation rep_from_json(const json& j, const Field& f, const std::string& path) {
  Quiver q = quiver_from_json(member(j, "quiver", path), join(path, "quiver"));
  std::vector<std::size_t> dims = nat_list(member(j, "dims", path), join(path, "dims"));
  if (dims.size() != q.vertex_count) fail(join(path, "dims"), "expected one dimension per vertex");
  const json& maps = member(j, "maps", path);
  if (!maps.is_array() || maps.size() != q.arrows.size()) fail(join(path, "maps"), "expected one matrix per arrow");
  std::vector<Matrix> ms;
  for (std::size_t a = 0; a < maps.size(); ++a) {
    std::string p = join(path, "maps") + "[" + std::to_string(a) + "]";
    auto [s, t] = q.arrows[a];
    ms.push_back(expect_shape(matrix_from_json(maps[a], f, p), dims[t], dims[s], p));
  }
  return Representation(f, std::move(q), std::move(dims), std::move(ms));
}

RepMap repmap_from_json(const json& j, const Field& f, const Representation& src, const Representation& dst,
                        const std::string& path) {
  if (!j.is_array() || j.size() != src.quiver().vertex_count) fail(path, "expected one matrix per vertex");
  RepMap m;
  for (std::size_t v = 0; v < j.size(); ++v) {
    std::string p = path + "[" + std::to_string(v) + "]";
    m.components.push_back(expect_shape(matrix_from_json(j[v], f, p), dst.vertex_dims()[v], src.vertex_dims()[v], p));
  }
  return m;
}

json repmap_to_json(const RepMap& m) {
  json out = json::array();
  for (const auto& c : m.components) out.push_back(to_json(c));
  return out;
}

}  // namespace

std::string cell_key(Cell c) { return format_cell(c); }

Cell parse_cell_key(const std::string& key, const std::string& path) {
  auto comma = key.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(key);
    std::size_t used1 = 0, used2 = 0;
    long i = std::stol(key.substr(0, comma), &used1), j = std::stol(key.substr(comma + 1), &used2);
    if (used1 != comma || used2 != key.size() - comma - 1 || i < 1 || j < 1) throw std::invalid_argument(key);
    return {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)};
  } catch (const std::logic_error&) {
    fail(path, "bad cell key \"" + key + "\", expected \"i,j\" with 1-based indices");
  }
}

json to_json(const Field& f) {
  json j = json::object();
  if (f.is_prime_field())
    j["prime"] = f.characteristic();
  else
    j["rationals"] = true;
  return j;
}

json to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.field().is_prime_field())
        row.push_back(m.at(r, c).residue());
      else
        row.push_back(m.field().format(m.at(r, c)));
    }
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json to_json(const ChainComplex& c) {
  json maps = json::array();
  for (const auto& m : c.maps()) maps.push_back(to_json(m));
  return {{"field", to_json(c.field())}, {"dims", c.dims()}, {"maps", std::move(maps)}};
}

json to_json(const Grid& g) {
  json spaces = json::object(), h = json::object(), v = json::object();
  for (Cell c : g.shape().cells()) spaces[cell_key(c)] = g.dim(c);
  for (const auto& [c, m] : g.hmaps()) h[cell_key(c)] = to_json(m);
  for (const auto& [c, m] : g.vmaps()) v[cell_key(c)] = to_json(m);
  return {{"field", to_json(g.field())}, {"shape", g.shape().row_lengths()}, {"orientation", to_string(g.orientation())},
          {"spaces", std::move(spaces)},  {"hmaps", std::move(h)},             {"vmaps", std::move(v)}};
}

json to_json(const SnakeInput& s) {
  return {{"field", to_json(s.field)}, {"f", to_json(s.f)},         {"g", to_json(s.g)},
          {"fp", to_json(s.fp)},       {"gp", to_json(s.gp)},       {"alpha", to_json(s.alpha)},
          {"beta", to_json(s.beta)},   {"gamma", to_json(s.gamma)}};
}

json to_json(const Field& f, const Cross& c) {
  return {{"field", to_json(f)},       {"beta1", to_json(c.beta1)}, {"beta2", to_json(c.beta2)},
          {"f", to_json(c.f)},         {"g", to_json(c.g)}};
}

json to_json(const Representation& r) {
  json arrows = json::array();
  for (auto [s, t] : r.quiver().arrows) arrows.push_back({s, t});
  json maps = json::array();
  for (const auto& m : r.arrow_maps()) maps.push_back(to_json(m));
  return {{"quiver", {{"vertices", r.quiver().vertex_count}, {"arrows", std::move(arrows)}}},
          {"dims", r.vertex_dims()},
          {"maps", std::move(maps)}};
}

json to_json(const ShortExactSeq& s) {
  return {{"field", to_json(s.a.field())}, {"A", to_json(s.a)}, {"B", to_json(s.b)}, {"C", to_json(s.c)},
          {"incl", repmap_to_json(s.incl)}, {"g", repmap_to_json(s.proj)}};
}

json to_json(const RightExactSeq& e) {
  return {{"field", to_json(e.x.field())}, {"X", to_json(e.x)}, {"Y", to_json(e.y)}, {"Z", to_json(e.z)},
          {"u", repmap_to_json(e.u)}, {"proj", repmap_to_json(e.proj)}};
}

Field field_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected {\"prime\": p} or {\"rationals\": true}");
  if (j.contains("prime")) {
    const json& p = j["prime"];
    if (!p.is_number_integer()) fail(join(path, "prime"), "expected an integer");
    try {
      return Field::prime(p.get<std::int64_t>());
    } catch (const Error& e) {
      fail(join(path, "prime"), e.what());
    }
  }
  if (j.contains("rationals") && j["rationals"] == true) return Field::rationals();
  fail(path, "expected {\"prime\": p} or {\"rationals\": true}");
}

Field document_field(const json& j, std::optional<Field> field) {
  if (field) return *field;
  return field_from_json(member(j, "field", ""), "field");
}

Matrix matrix_from_json(const json& j, const Field& f, const std::string& path) {
  std::size_t rows = nat(member(j, "rows", path), join(path, "rows"));
  std::size_t cols = nat(member(j, "cols", path), join(path, "cols"));
  const json& e = member(j, "entries", path);
  std::string ep = join(path, "entries");
  if (!e.is_array() || e.size() != rows) fail(ep, "expected " + std::to_string(rows) + " rows");
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string rp = ep + "[" + std::to_string(r) + "]";
    if (!e[r].is_array() || e[r].size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      entries.push_back(scalar_from_json(e[r][c], f, rp + "[" + std::to_string(c) + "]"));
  }
  return Matrix(f, rows, cols, std::move(entries));
}

ChainComplex complex_from_json(const json& j, std::optional<Field> field) {
  Field f = document_field(j, field);
  std::vector<std::size_t> dims = nat_list(member(j, "dims", ""), "dims");
  const json& maps = member(j, "maps", "");
  if (!maps.is_array() || maps.size() + 1 != dims.size()) fail("maps", "expected dims.size() - 1 matrices");
  std::vector<Matrix> ms;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    std::string p = "maps[" + std::to_string(k) + "]";
    ms.push_back(expect_shape(matrix_from_json(maps[k], f, p), dims[k + 1], dims[k], p));
  }
  return ChainComplex(f, std::move(dims), std::move(ms));
}

Grid grid_from_json(const json& j, std::optional<Field> field) {
  Field f = document_field(j, field);
  std::vector<std::size_t> lengths = nat_list(member(j, "shape", ""), "shape");
  StaircaseShape shape(lengths);
  Orientation o = Orientation::kernel;
  if (j.contains("orientation")) {
    const json& oj = j["orientation"];
    if (oj == "kernel")
      o = Orientation::kernel;
    else if (oj == "cokernel")
      o = Orientation::cokernel;
    else
      fail("orientation", "expected \"kernel\" or \"cokernel\"");
  }
  auto cells_of = [&](const char* key) {
    const json& obj = member(j, key, "");
    if (!obj.is_object()) fail(key, "expected an object keyed by \"i,j\"");
    return &obj;
  };
  std::map<Cell, std::size_t> dims;
  for (const auto& [k, v] : cells_of("spaces")->items()) {
    std::string p = std::string("spaces.") + k;
    Cell c = parse_cell_key(k, p);
    if (!shape.contains(c)) throw Error(ErrorKind::shape, p + ": cell lies outside the shape");
    dims[c] = nat(v, p);
  }
  auto maps = [&](const char* key, bool horizontal) {
    std::map<Cell, Matrix> out;
    bool ker = o == Orientation::kernel;
    for (const auto& [k, v] : cells_of(key)->items()) {
      std::string p = std::string(key) + "." + k;
      Cell c = parse_cell_key(k, p);
      Cell next = horizontal ? Cell{c.row, c.col + 1} : Cell{c.row + 1, c.col};
      if (!shape.contains(c) || !shape.contains(next))
        throw Error(ErrorKind::shape, p + ": map leaves the shape");
      auto d = [&](Cell x) { return dims.contains(x) ? dims[x] : std::size_t{0}; };
      Matrix m = matrix_from_json(v, f, p);
      out.emplace(c, ker ? expect_shape(std::move(m), d(next), d(c), p) : expect_shape(std::move(m), d(c), d(next), p));
    }
    return out;
  };
  auto h = maps("hmaps", true);
  auto v = maps("vmaps", false);
  return Grid(f, std::move(shape), o, dims, h, v);
}

SnakeInput snake_from_json(const json& j, std::optional<Field> field) {
  Field f = document_field(j, field);
  auto m = [&](const char* key) { return matrix_from_json(member(j, key, ""), f, key); };
  return {f, m("f"), m("g"), m("fp"), m("gp"), m("alpha"), m("beta"), m("gamma")};
}

Cross cross_from_json(const json& j, std::optional<Field> field) {
  Field f = document_field(j, field);
  auto m = [&](const char* key) { return matrix_from_json(member(j, key, ""), f, key); };
  return {m("beta1"), m("beta2"), m("f"), m("g")};
}

ShortExactSeq aseq_from_json(const json& j, std::optional<Field> field) {
  Field f = document_field(j, field);
  Representation a = rep_from_json(member(j, "A", ""), f, "A");
  Representation b = rep_from_json(member(j, "B", ""), f, "B");
  Representation c = rep_from_json(member(j, "C", ""), f, "C");
  RepMap incl = repmap_from_json(member(j, "incl", ""), f, a, b, "incl");
  RepMap g = repmap_from_json(member(j, "g", ""), f, b, c, "g");
  return {std::move(a), std::move(b), std::move(c), std::move(incl), std::move(g)};
}

RightExactSeq eseq_from_json(const json& j, std::optional<Field> field) {
  Field f = document_field(j, field);
  Representation x = rep_from_json(member(j, "X", ""), f, "X");
  Representation y = rep_from_json(member(j, "Y", ""), f, "Y");
  Representation z = rep_from_json(member(j, "Z", ""), f, "Z");
  RepMap u = repmap_from_json(member(j, "u", ""), f, x, y, "u");
  RepMap p = repmap_from_json(member(j, "proj", ""), f, y, z, "proj");
  return {std::move(x), std::move(y), std::move(z), std::move(u), std::move(p)};
}

}  // namespace dchase
