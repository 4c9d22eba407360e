#pragma once

#include <json.hpp>

#include "diptych/chain.hpp"

namespace diptych {

using nlohmann::json;

// Exact rationals serialise as "p/q" strings, exponent maps as sorted sparse
// lists; output is byte-deterministic.
json to_json(const Monomial& m);
json to_json(const DiptychParams& p);
json to_json(const MatrixPair& p);
json to_json(const Classification& c);
json to_json(const LongRectangle& r);
json to_json(const CornerEquation& c);
json to_json(const ConeFacets& f);
json to_json(const WeightTable& t);
json to_json(const PaddedCell& c);
json to_json(const ProjectionStep& s);
json to_json(const Spreadsheet& s);
json to_json(const SkewMatrix5& m);
json to_json(const Trinomial& t);
json to_json(const EquationStore& s);
json to_json(const MeetResult& m);

Monomial monomial_from_json(const json& j);
DiptychParams params_from_json(const json& j);
LongRectangle rectangle_from_json(const json& j);
WeightTable weight_table_from_json(const json& j);
Spreadsheet spreadsheet_from_json(const json& j);
Trinomial trinomial_from_json(const json& j);
EquationStore store_from_json(const json& j);

// "x_1y_0 = A^4B^7 + Lx_0^4"; factors are ordered A, B, L, M, x_0, x_1, ...,
// y_0, ... and the L,M-free term comes first.
std::string equation_string(const Trinomial& t);

std::string render_rectangle(const LongRectangle& r);
std::string render_matrix(const SkewMatrix5& m);
std::string render_pentagram(const PentagramStep& step);
std::string render_store(const EquationStore& store);
std::string render_weights(const WeightTable& table);
std::string render_schedule(const Spreadsheet& sheet);
std::string render_deconstruction(const std::vector<RectangleSnapshot>& snaps);

std::string weights_csv(const WeightTable& table);
std::string scissors_csv(const WeightTable& table);

}  // namespace diptych
