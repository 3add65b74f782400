#ifndef LRHIVE_JSON_IO_HPP
#define LRHIVE_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "lrhive/bijections.hpp"

namespace lrhive {

// JSON schemas:
//   DominantWeight  {"n": 4, "parts": [5,3,1,0]}
//   TArray          {"n": 4, "rows": [[1],[2,1],[4,1,0],[5,3,1,0]]}
//   HArray          {"n": 4, "rows": [[0],[5,11],...]}
//   Shape           {"n": 4, "outer": [...], "inner": [...]}
//   SkewTableau     {"shape": {...}, "matrix": [[...], ...]}
//   LRTriple        {"mu": [...], "nu": [...], "lambda": [...]}
// Malformed documents throw std::invalid_argument naming the problem.

nlohmann::json to_json(const DominantWeight& w);
nlohmann::json to_json(const TArray& t);
nlohmann::json to_json(const HArray& h);
nlohmann::json to_json(const Shape& s);
nlohmann::json to_json(const SkewTableau& y);
nlohmann::json to_json(const LRTriple& t);

DominantWeight dominant_weight_from_json(const nlohmann::json& j);
TArray tarray_from_json(const nlohmann::json& j);
HArray harray_from_json(const nlohmann::json& j);
Shape shape_from_json(const nlohmann::json& j);
SkewTableau skew_tableau_from_json(const nlohmann::json& j);
LRTriple lr_triple_from_json(const nlohmann::json& j);

}  // namespace lrhive

#endif
