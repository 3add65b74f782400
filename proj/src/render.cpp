#include "lrhive/render.hpp"

#include <algorithm>
#include <sstream>

namespace lrhive {

namespace {

int entry_width(Int lo, Int hi) {
  int w = 1;
  for (Int v : {lo, hi}) w = std::max(w, static_cast<int>(std::to_string(v).size()));
  return w;
}

std::string padded(Int v, int w) {
  std::string s = std::to_string(v);
  return std::string(static_cast<std::size_t>(w) - s.size(), ' ') + s;
}

}  // namespace

std::string render(const TArray& t) {
  const int n = t.rank();
  Int lo = 0, hi = 0;
  for (int i = 1; i <= n; ++i)
    for (Int x : t.row(i)) lo = std::min(lo, x), hi = std::max(hi, x);
  const int w = entry_width(lo, hi);
  std::ostringstream out;
  for (int i = n; i >= 1; --i) {
    out << std::string(static_cast<std::size_t>((n - i) * (w + 1)), ' ');
    for (int j = 1; j <= i; ++j) {
      if (j > 1) out << std::string(static_cast<std::size_t>(w + 2), ' ');
      out << padded(t.at(i, j), w);
    }
    out << '\n';
  }
  return out.str();
}

std::string render(const HArray& h) {
  const int n = h.rank();
  Int lo = 0, hi = 0;
  for (int b = 0; b <= n; ++b)
    for (Int x : h.row(b)) lo = std::min(lo, x), hi = std::max(hi, x);
  const int w = entry_width(lo, hi);
  std::ostringstream out;
  for (int b = 0; b <= n; ++b) {
    out << std::string(static_cast<std::size_t>((n - b) * (w + 1)), ' ');
    for (int a = 0; a <= b; ++a) {
      if (a > 0) out << std::string(static_cast<std::size_t>(w + 2), ' ');
      out << padded(h.at(a, b), w);
    }
    out << '\n';
  }
  return out.str();
}

std::string render(const SkewTableau& y) {
  const int n = y.rank();
  std::ostringstream out;
  for (int j = 1; j <= n; ++j) {
    if (y.shape().outer()[j] == 0 && y.shape().inner()[j] == 0) continue;
    for (Int c = 0; c < y.shape().inner()[j]; ++c) out << ". ";
    for (int i = 1; i <= n; ++i)
      for (Int c = 0; c < y.matrix().at(i, j); ++c) out << i << ' ';
    out << '\n';
  }
  return out.str();
}

}  // namespace lrhive
