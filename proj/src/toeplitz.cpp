#include "diagschur/toeplitz.hpp"

#include "diagschur/errors.hpp"

namespace diagschur {

LowerToeplitz::LowerToeplitz(std::vector<Rational> first_column) : col_(std::move(first_column)) {
  if (col_.empty()) throw InvalidArgument("Toeplitz matrix needs at least one entry");
}

std::vector<Rational> LowerToeplitz::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != size()) throw InvalidArgument("Toeplitz size mismatch");
  std::vector<Rational> y(x.size());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j <= i; ++j) y[i] += col_[i - j] * x[j];
  return y;
}

LowerToeplitz LowerToeplitz::inverse() const { return LowerToeplitz(toeplitz_solve(col_)); }

bool LowerToeplitz::is_identity() const {
  if (col_[0] != Rational(1)) return false;
  for (size_t i = 1; i < col_.size(); ++i)
    if (!col_[i].is_zero()) return false;
  return true;
}

LowerToeplitz operator*(const LowerToeplitz& a, const LowerToeplitz& b) {
  if (a.size() != b.size()) throw InvalidArgument("Toeplitz size mismatch");
  // The product of lower Toeplitz matrices is lower Toeplitz; its first
  // column is a applied to b's first column.
  return LowerToeplitz(a.apply(b.col_));
}

std::vector<Rational> toeplitz_solve(const std::vector<Rational>& known) {
  if (known.empty()) throw InvalidArgument("empty Toeplitz column");
  if (known[0].is_zero()) throw DivisionByZero("singular Toeplitz matrix: leading entry is zero");
  std::vector<Rational> x(known.size());
  for (size_t i = 0; i < known.size(); ++i) {
    Rational rhs = i == 0 ? Rational(1) : Rational(0);
    for (size_t j = 0; j < i; ++j) rhs -= known[i - j] * x[j];
    x[i] = rhs / known[0];
  }
  return x;
}

}  // namespace diagschur
