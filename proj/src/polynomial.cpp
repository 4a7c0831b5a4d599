#include "diagschur/polynomial.hpp"

#include <algorithm>

#include "diagschur/errors.hpp"

namespace diagschur {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidArgument("negative monomial degree");
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational();
  return c_[k];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational() : c_.back(); }

Rational Polynomial::operator()(const Rational& z) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::shifted(int k) const {
  if (k < 0) throw InvalidArgument("negative shift");
  if (c_.empty()) return {};
  std::vector<Rational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  if (s.is_zero()) return {};
  Polynomial r = p;
  for (auto& x : r.c_) x *= s;
  return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Polynomial(), a};
  std::vector<Rational> q(da - db + 1);
  Rational lead = b.leading();
  for (int k = da; k >= db; --k) {
    Rational c = rem[k] / lead;
    q[k - db] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= c * b.coeffs()[i];
  }
  rem.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

}  // namespace diagschur
