#ifndef LRHIVE_RENDER_HPP
#define LRHIVE_RENDER_HPP

#include <string>

#include "lrhive/core.hpp"
#include "lrhive/tableaux.hpp"

namespace lrhive {

// Reversed pyramid: row n on top, entries interleaving downwards.
std::string render(const TArray& t);
// Pyramid: h_{0,0} on top, row n at the bottom.
std::string render(const HArray& h);
// English-convention rows; empty (inner) boxes drawn as dots.
std::string render(const SkewTableau& y);

}  // namespace lrhive

#endif
