#pragma once

#include <optional>
#include <vector>

#include "diagschur/polynomial.hpp"
#include "diagschur/rational.hpp"

namespace diagschur {

// Truncated Laurent series in 1/z:
//   sum_{e = -order}^{top} c_e z^e + O(z^{-order-1}).
// Every stored coefficient is trusted. `order` counts the trusted negative
// powers and may itself be negative when a quotient loses precision above z^0.
class LaurentSeries {
 public:
  LaurentSeries() = default;

  // Coefficients listed from z^top downwards, trusted down to z^{-order}.
  static LaurentSeries from_descending(int top, std::vector<Rational> desc, int order);
  // Coefficients of z^{-1}, z^{-2}, ...; order = size.
  static LaurentSeries from_negative(std::vector<Rational> neg);
  // Exact polynomial viewed as a series trusted down to z^{-order}.
  static LaurentSeries from_polynomial(const Polynomial& p, int order);
  static LaurentSeries zero(int order);

  int order() const { return order_; }
  bool is_zero() const { return c_.empty(); }
  // Highest exponent with a nonzero coefficient; empty for a series that is
  // zero to its trusted order.
  std::optional<int> valuation() const;
  // Coefficient of z^e; throws when e lies below the trusted range.
  Rational coeff(int e) const;

  Polynomial polynomial_part() const;
  // Coefficients of z^{-1} ... z^{-order} (empty when order <= 0).
  std::vector<Rational> negative_coefficients() const;

  LaurentSeries truncated(int order) const;
  LaurentSeries reciprocal() const;
  // Multiply by z^k.
  LaurentSeries shifted(int k) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator+(const LaurentSeries& a, const Polynomial& p);
  friend LaurentSeries operator-(const LaurentSeries& a, const Polynomial& p);
  friend LaurentSeries operator*(const LaurentSeries& a, const Polynomial& p);
  friend LaurentSeries operator*(const Rational& s, const LaurentSeries& a);

  // Same trusted range and coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  int lead_exponent_bound() const { return c_.empty() ? -order_ - 1 : top_; }
  void normalize();

  int top_ = -1;
  int order_ = 0;
  std::vector<Rational> c_;  // exponents top_, top_-1, ..., -order_
};

LaurentSeries series_from_moments(const std::vector<Rational>& s);
LaurentSeries series_div(const LaurentSeries& num, const LaurentSeries& den);

}  // namespace diagschur
