#ifndef LRHIVE_ENUMERATION_HPP
#define LRHIVE_ENUMERATION_HPP

#include <functional>
#include <optional>
#include <string>

#include "lrhive/bijections.hpp"

namespace lrhive {

enum class Model { lr, hive, gz1, gz2 };

Model model_from_string(const std::string& s);
std::string to_string(Model m);

struct EnumerationRequest {
  Model model;
  LRTriple triple;
  bool count_only = false;
  std::optional<long long> limit;  // >= 1 when present
};

// Each enumerator emits every member of its family exactly once, in a
// deterministic order. The callback returns false to stop early.

void enumerate_gz(const GZTriple& spec,
                  const std::function<bool(const TArray&)>& emit);
void enumerate_lr(const LRTriple& t,
                  const std::function<bool(const SkewTableau&)>& emit);
// Default strategy: image of enumerate_gz(gz1) under reconstruct_from_t1.
void enumerate_hives(const LRTriple& t,
                     const std::function<bool(const HArray&)>& emit);
// Independent cross-check strategy: backtracking over the interior holes.
void enumerate_hives_direct(const LRTriple& t,
                            const std::function<bool(const HArray&)>& emit);

long long count(Model model, const LRTriple& t);

}  // namespace lrhive

#endif
