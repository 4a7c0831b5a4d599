#include "diagschur/laurent_series.hpp"

#include <algorithm>
#include <string>

#include "diagschur/errors.hpp"

namespace diagschur {

LaurentSeries LaurentSeries::from_descending(int top, std::vector<Rational> desc, int order) {
  LaurentSeries s;
  s.order_ = order;
  s.top_ = top;
  s.c_ = std::move(desc);
  int keep = top + order + 1;
  if (keep < 0) keep = 0;
  if (static_cast<int>(s.c_.size()) > keep) s.c_.resize(keep);
  if (static_cast<int>(s.c_.size()) < keep) s.c_.resize(keep);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::from_negative(std::vector<Rational> neg) {
  int order = static_cast<int>(neg.size());
  return from_descending(-1, std::move(neg), order);
}

LaurentSeries LaurentSeries::from_polynomial(const Polynomial& p, int order) {
  std::vector<Rational> desc(p.coeffs().rbegin(), p.coeffs().rend());
  return from_descending(p.degree(), std::move(desc), order);
}

LaurentSeries LaurentSeries::zero(int order) {
  LaurentSeries s;
  s.order_ = order;
  s.top_ = -order - 1;
  return s;
}

void LaurentSeries::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    top_ = -order_ - 1;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + lead);
  top_ -= static_cast<int>(lead);
}

std::optional<int> LaurentSeries::valuation() const {
  if (c_.empty()) return std::nullopt;
  return top_;
}

Rational LaurentSeries::coeff(int e) const {
  if (e < -order_)
    throw InvalidArgument("coefficient of z^" + std::to_string(e) + " lies beyond the trusted order " +
                          std::to_string(order_));
  if (c_.empty() || e > top_) return Rational();
  return c_[top_ - e];
}

Polynomial LaurentSeries::polynomial_part() const {
  if (c_.empty() || top_ < 0) return {};
  std::vector<Rational> asc(top_ + 1);
  for (int e = std::max(0, -order_); e <= top_; ++e) asc[e] = c_[top_ - e];
  return Polynomial(std::move(asc));
}

std::vector<Rational> LaurentSeries::negative_coefficients() const {
  std::vector<Rational> out;
  for (int e = -1; e >= -order_; --e) out.push_back(coeff(e));
  return out;
}

LaurentSeries LaurentSeries::truncated(int order) const {
  if (order > order_) throw InvalidArgument("cannot extend a series beyond its trusted order");
  return from_descending(top_, c_, order);
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries s = *this;
  s.top_ += k;
  s.order_ -= k;
  return s;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

namespace {

LaurentSeries add_impl(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
  int order = std::min(a.order(), b.order());
  int top = std::max(a.valuation().value_or(-order - 1), b.valuation().value_or(-order - 1));
  std::vector<Rational> desc;
  for (int e = top; e >= -order; --e) {
    Rational x = a.coeff(e);
    if (subtract) x -= b.coeff(e);
    else x += b.coeff(e);
    desc.push_back(std::move(x));
  }
  return LaurentSeries::from_descending(top, std::move(desc), order);
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add_impl(a, b, false); }
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return add_impl(a, b, true); }

LaurentSeries operator+(const LaurentSeries& a, const Polynomial& p) {
  return a + LaurentSeries::from_polynomial(p, a.order());
}

LaurentSeries operator-(const LaurentSeries& a, const Polynomial& p) {
  return a - LaurentSeries::from_polynomial(p, a.order());
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // Error terms: O(z^{-oa-1}) * b and a * O(z^{-ob-1}).
  int va = a.lead_exponent_bound();
  int vb = b.lead_exponent_bound();
  int order = std::min(a.order_ - vb, b.order_ - va);
  if (a.c_.empty() || b.c_.empty()) return LaurentSeries::zero(order);
  int top = a.top_ + b.top_;
  std::vector<Rational> desc;
  for (int e = top; e >= -order; --e) {
    Rational acc;
    int k = top - e;  // position in the product
    int lo = std::max(0, k - static_cast<int>(b.c_.size()) + 1);
    int hi = std::min(k, static_cast<int>(a.c_.size()) - 1);
    for (int i = lo; i <= hi; ++i) {
      if (a.c_[i].is_zero()) continue;
      acc += a.c_[i] * b.c_[k - i];
    }
    desc.push_back(std::move(acc));
  }
  return LaurentSeries::from_descending(top, std::move(desc), order);
}

LaurentSeries operator*(const LaurentSeries& a, const Polynomial& p) {
  if (p.is_zero()) return LaurentSeries::zero(a.order());
  // The polynomial is exact, so only a's error term, lifted by z^{deg p}, matters.
  LaurentSeries exact = LaurentSeries::from_polynomial(p, a.order() + a.lead_exponent_bound() + 1);
  LaurentSeries r = a * exact;
  int order = a.order() - p.degree();
  return r.order() > order ? r.truncated(order) : r;
}

LaurentSeries operator*(const Rational& s, const LaurentSeries& a) {
  if (s.is_zero()) return LaurentSeries::zero(a.order());
  LaurentSeries r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

LaurentSeries LaurentSeries::reciprocal() const {
  if (c_.empty())
    throw DivisionByZero("reciprocal of a series that vanishes to order " + std::to_string(order_));
  int v = top_;
  int n = static_cast<int>(c_.size());  // relative coefficients known
  std::vector<Rational> r(n);
  Rational inv0 = Rational(1) / c_[0];
  r[0] = inv0;
  for (int k = 1; k < n; ++k) {
    Rational acc;
    for (int i = 1; i <= k; ++i) {
      if (c_[i].is_zero()) continue;
      acc += c_[i] * r[k - i];
    }
    r[k] = -acc * inv0;
  }
  return from_descending(-v, std::move(r), order_ + 2 * v);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.order_ == b.order_ && a.c_ == b.c_ && (a.c_.empty() || a.top_ == b.top_);
}

LaurentSeries series_from_moments(const std::vector<Rational>& s) {
  if (s.empty()) throw InvalidArgument("moment sequence is empty");
  std::vector<Rational> neg;
  neg.reserve(s.size());
  for (const auto& x : s) neg.push_back(-x);
  return LaurentSeries::from_negative(std::move(neg));
}

LaurentSeries series_div(const LaurentSeries& num, const LaurentSeries& den) {
  if (den.is_zero())
    throw DivisionByZero("denominator vanishes to its trusted order " + std::to_string(den.order()));
  return num * den.reciprocal();
}

}  // namespace diagschur
