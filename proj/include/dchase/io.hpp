#pragma once

// JSON encodings of every instance type. Decoders throw Error(parse) whose
// message starts with the JSON path of the offending value, e.g.
// "hmaps.1,2.entries[0][1]: expected an integer".

#include <optional>
#include <string>

#include <json.hpp>

#include "dchase/complex.hpp"
#include "dchase/genrand.hpp"
#include "dchase/grid.hpp"
#include "dchase/quiverhom.hpp"
#include "dchase/snake.hpp"

namespace dchase {

using json = nlohmann::ordered_json;

json to_json(const Field& f);
json to_json(const Matrix& m);
json to_json(const ChainComplex& c);
json to_json(const Grid& g);
json to_json(const SnakeInput& s);
json to_json(const Field& f, const Cross& c);
json to_json(const Representation& r);
json to_json(const ShortExactSeq& s);
json to_json(const RightExactSeq& e);

// `field` overrides (or supplies) the field recorded in the document.
Field field_from_json(const json& j, const std::string& path);
Matrix matrix_from_json(const json& j, const Field& f, const std::string& path);
ChainComplex complex_from_json(const json& j, std::optional<Field> field = {});
Grid grid_from_json(const json& j, std::optional<Field> field = {});
SnakeInput snake_from_json(const json& j, std::optional<Field> field = {});
Cross cross_from_json(const json& j, std::optional<Field> field = {});
ShortExactSeq aseq_from_json(const json& j, std::optional<Field> field = {});
RightExactSeq eseq_from_json(const json& j, std::optional<Field> field = {});

// Field of a document: the override if given, else its "field" member.
Field document_field(const json& j, std::optional<Field> field);

// "i,j" (1-based) <-> Cell
std::string cell_key(Cell c);
Cell parse_cell_key(const std::string& key, const std::string& path);

}  // namespace dchase
