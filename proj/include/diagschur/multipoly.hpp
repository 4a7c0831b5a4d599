#pragma once

#include <map>
#include <vector>

#include "diagschur/polynomial.hpp"

namespace diagschur {

using Exponent = std::vector<int>;

// Sparse polynomial in z_1, ..., z_n. Used to lift product-variable
// polynomials (z = z_1 ... z_n) and diagonal prefactors back to n variables.
class MultiPoly {
 public:
  explicit MultiPoly(int n = 1) : n_(n) {}

  static MultiPoly monomial(const Exponent& e, const Rational& c = Rational(1));
  // p(z_1 ... z_n): z^k becomes the monomial (k, ..., k).
  static MultiPoly lift(const Polynomial& p, int n);

  int variables() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  std::map<Exponent, Rational> terms_;
};

}  // namespace diagschur
