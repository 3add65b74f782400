#ifndef LRHIVE_ORACLE_HPP
#define LRHIVE_ORACLE_HPP

#include <map>

#include "lrhive/bijections.hpp"

namespace lrhive {

// A symmetric polynomial in n variables as a finitely supported map from
// exponent vectors to integer coefficients.
class SchurPoly {
 public:
  using TermMap = std::map<std::vector<Int>, long long>;

  SchurPoly(int n, TermMap terms);
  static SchurPoly unit(int n);  // the constant 1

  int rank() const { return n_; }
  const TermMap& terms() const { return terms_; }
  long long coefficient(const std::vector<Int>& exponent) const;

  friend bool operator==(const SchurPoly&, const SchurPoly&) = default;

 private:
  int n_;
  TermMap terms_;
};

// Monomial expansion of s_lambda: the coefficient of x^alpha is the number
// of semistandard tableaux of shape lambda and content alpha, generated here
// by GT-pattern enumeration (independent of the tableau backtracker).
SchurPoly schur(const DominantWeight& lambda);

SchurPoly multiply(const SchurPoly& p, const SchurPoly& q);

// Leading-monomial elimination. Valid because s_lambda has coefficient 1 at
// x^lambda and all its other exponents are lexicographically smaller.
std::map<std::vector<Int>, long long> schur_decompose(SchurPoly p);

// Coefficient of s_lambda in s_mu * s_nu.
long long lr_coefficient_oracle(const LRTriple& t);

}  // namespace lrhive

#endif
