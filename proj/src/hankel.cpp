#include "diagschur/hankel.hpp"

#include <algorithm>
#include <string>

#include "diagschur/errors.hpp"

namespace diagschur {

Rational determinant(const RationalMatrix& m) {
  const size_t n = m.size();
  if (n == 0) return Rational(1);
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");

  // Clear denominators row by row, then run Bareiss over the integers.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
    scale *= l;
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j].value().get_num() * (l / m[i][j].value().get_den());
  }

  int sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpz_class det = a[n - 1][n - 1] * sign;
  return Rational(mpq_class(det, scale));
}

namespace {

Rational hankel_block(const MomentSequence& s, int n, int shift) {
  if (n < 0) throw InvalidArgument("negative Hankel order");
  if (n == 0) return Rational(1);
  int need = 2 * n - 1 + shift;
  if (static_cast<int>(s.size()) < need)
    throw InsufficientData("Hankel determinant of order " + std::to_string(n) + " needs " +
                               std::to_string(need) + " moments, got " + std::to_string(s.size()),
                           need);
  RationalMatrix m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m[i][k] = s[i + k + shift];
  return determinant(m);
}

}  // namespace

Rational hankel_det(const MomentSequence& s, int n) { return hankel_block(s, n, 0); }
Rational shifted_hankel_det(const MomentSequence& s, int n) { return hankel_block(s, n, 1); }

NormalIndexSet normal_indices(const MomentSequence& s) {
  NormalIndexSet out;
  const int len = static_cast<int>(s.size());
  for (int n = 1; 2 * n - 1 <= len; ++n) {
    if (hankel_det(s, n).is_zero()) continue;
    out.indices.push_back(n);
    if (!shifted_hankel_det(s, n - 1).is_zero()) out.nu.push_back(n);
    if (2 * n > len) {
      out.undecidable.push_back(n);
    } else if (!shifted_hankel_det(s, n).is_zero()) {
      out.mu.push_back(n);
    }
  }
  return out;
}

bool interlaced(const NormalIndexSet& set) {
  // Merge into a tagged list; each index contributes nu before mu.
  std::vector<std::pair<int, int>> tagged;  // (index, 0 = nu, 1 = mu)
  for (int n : set.nu) tagged.emplace_back(n, 0);
  for (int n : set.mu) tagged.emplace_back(n, 1);
  std::sort(tagged.begin(), tagged.end());
  for (size_t i = 0; i < tagged.size(); ++i)
    if (tagged[i].second != static_cast<int>(i % 2)) return false;
  // Every decided index must have been classified.
  for (int n : set.indices) {
    bool classified = std::count(set.nu.begin(), set.nu.end(), n) ||
                      std::count(set.mu.begin(), set.mu.end(), n);
    bool pending = std::count(set.undecidable.begin(), set.undecidable.end(), n);
    if (!classified && !pending) return false;
  }
  return tagged.empty() || tagged.front().first > 0;
}

Regularity is_regular(const MomentSequence& s) {
  Regularity r;
  const int len = static_cast<int>(s.size());
  for (int n = 1; 2 * n <= len; ++n) {
    if (hankel_det(s, n).is_zero()) continue;
    if (shifted_hankel_det(s, n).is_zero()) {
      r.regular = false;
      r.witness = n;
      return r;
    }
  }
  return r;
}

bool regular_by_classification(const NormalIndexSet& set) {
  std::vector<int> nu_decided;
  for (int n : set.nu)
    if (!std::count(set.undecidable.begin(), set.undecidable.end(), n)) nu_decided.push_back(n);
  std::vector<int> decided;
  for (int n : set.indices)
    if (!std::count(set.undecidable.begin(), set.undecidable.end(), n)) decided.push_back(n);
  return nu_decided == decided && set.mu == decided;
}

}  // namespace diagschur
