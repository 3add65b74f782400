#include "lrhive/json_io.hpp"

namespace lrhive {

using nlohmann::json;

namespace {

std::vector<Int> int_vector(const json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + ": expected an array of integers");
  std::vector<Int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw std::invalid_argument(std::string(what) + ": expected an array of integers");
    v.push_back(x.get<Int>());
  }
  return v;
}

std::vector<std::vector<Int>> int_matrix(const json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + ": expected an array of arrays");
  std::vector<std::vector<Int>> m;
  for (const auto& row : j) m.push_back(int_vector(row, what));
  return m;
}

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string(what) + ": missing field \"" + key + "\"");
  return j.at(key);
}

void check_declared_rank(const json& j, int actual, const char* what) {
  if (j.contains("n")) {
    const json& n = j.at("n");
    if (!n.is_number_integer() || n.get<int>() != actual)
      throw std::invalid_argument(std::string(what) +
                                  ": field \"n\" disagrees with the data");
  }
}

}  // namespace

json to_json(const DominantWeight& w) {
  return json{{"n", w.rank()}, {"parts", w.parts()}};
}

json to_json(const TArray& t) {
  json rows = json::array();
  for (int i = 1; i <= t.rank(); ++i) rows.push_back(t.row(i));
  return json{{"n", t.rank()}, {"rows", rows}};
}

json to_json(const HArray& h) {
  json rows = json::array();
  for (int b = 0; b <= h.rank(); ++b) rows.push_back(h.row(b));
  return json{{"n", h.rank()}, {"rows", rows}};
}

json to_json(const Shape& s) {
  return json{{"n", s.rank()}, {"outer", s.outer().parts()}, {"inner", s.inner().parts()}};
}

json to_json(const SkewTableau& y) {
  return json{{"shape", to_json(y.shape())}, {"matrix", y.matrix().rows()}};
}

json to_json(const LRTriple& t) {
  return json{{"mu", t.mu.parts()}, {"nu", t.nu.parts()}, {"lambda", t.lambda.parts()}};
}

DominantWeight dominant_weight_from_json(const json& j) {
  if (j.is_array()) return DominantWeight(int_vector(j, "DominantWeight"));
  DominantWeight w(int_vector(field(j, "parts", "DominantWeight"), "DominantWeight"));
  check_declared_rank(j, w.rank(), "DominantWeight");
  return w;
}

TArray tarray_from_json(const json& j) {
  TArray t(int_matrix(field(j, "rows", "TArray"), "TArray"));
  check_declared_rank(j, t.rank(), "TArray");
  return t;
}

HArray harray_from_json(const json& j) {
  HArray h(int_matrix(field(j, "rows", "HArray"), "HArray"));
  check_declared_rank(j, h.rank(), "HArray");
  return h;
}

Shape shape_from_json(const json& j) {
  Shape s(dominant_weight_from_json(field(j, "outer", "Shape")),
          dominant_weight_from_json(field(j, "inner", "Shape")));
  check_declared_rank(j, s.rank(), "Shape");
  return s;
}

SkewTableau skew_tableau_from_json(const json& j) {
  Shape s = shape_from_json(field(j, "shape", "SkewTableau"));
  ContentMatrix a(int_matrix(field(j, "matrix", "SkewTableau"), "SkewTableau"));
  return SkewTableau(std::move(s), std::move(a));
}

LRTriple lr_triple_from_json(const json& j) {
  return LRTriple(dominant_weight_from_json(field(j, "mu", "LRTriple")),
                  dominant_weight_from_json(field(j, "nu", "LRTriple")),
                  dominant_weight_from_json(field(j, "lambda", "LRTriple")));
}

}  // namespace lrhive
