#pragma once

#include <vector>

#include "diagschur/rational.hpp"

namespace diagschur {

// Square lower-triangular Toeplitz matrix: entry (i, j) = column[i - j] for
// i >= j, zero above the diagonal. T(a) * T(b) is the truncated product of
// the power series sum a_k x^k and sum b_k x^k.
class LowerToeplitz {
 public:
  explicit LowerToeplitz(std::vector<Rational> first_column);

  int size() const { return static_cast<int>(col_.size()); }
  const std::vector<Rational>& first_column() const { return col_; }
  Rational entry(int i, int j) const { return i >= j ? col_[i - j] : Rational(); }
  bool invertible() const { return !col_.empty() && !col_[0].is_zero(); }

  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  LowerToeplitz inverse() const;
  bool is_identity() const;

  friend LowerToeplitz operator*(const LowerToeplitz& a, const LowerToeplitz& b);
  friend bool operator==(const LowerToeplitz& a, const LowerToeplitz& b) { return a.col_ == b.col_; }

 private:
  std::vector<Rational> col_;
};

// First column of T(known)^{-1}, i.e. the power-series reciprocal of
// sum known[k] x^k truncated to known.size() terms. Solved by forward
// substitution on T(known) x = e_0.
std::vector<Rational> toeplitz_solve(const std::vector<Rational>& known);

}  // namespace diagschur
