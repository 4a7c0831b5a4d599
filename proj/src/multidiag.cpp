#include "diagschur/multidiag.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "diagschur/combinatorics.hpp"
#include "diagschur/errors.hpp"

namespace diagschur {

Rational MomentTensor::at(const Exponent& idx) const {
  auto it = entries.find(idx);
  return it == entries.end() ? Rational() : it->second;
}

void MomentTensor::set(const Exponent& idx, const Rational& v) {
  if (static_cast<int>(idx.size()) != n) throw InvalidArgument("multi-index has the wrong dimension");
  if (v.is_zero()) entries.erase(idx);
  else entries[idx] = v;
}

void MomentTensor::validate() const {
  if (n < 1) throw InvalidArgument("tensor dimension must be at least 1");
  if (max_degree < 0) throw InvalidArgument("max_degree must be nonnegative");
  for (const auto& [idx, v] : entries) {
    if (static_cast<int>(idx.size()) != n) throw InvalidArgument("multi-index has the wrong dimension");
    for (int i : idx)
      if (i < 0 || i > max_degree) throw InvalidArgument("multi-index outside 0..max_degree");
  }
}

DiagonalKey diagonal_key_of(const Exponent& idx) {
  int lo = *std::min_element(idx.begin(), idx.end());
  DiagonalKey k;
  for (int i : idx) k.offsets.push_back(i - lo);
  return k;
}

DiagonalSequence diagonal_extract(const MomentTensor& t, const DiagonalKey& key) {
  key.validate();
  if (key.dimension() != t.n) throw InvalidArgument("diagonal key has the wrong dimension");
  DiagonalSequence d{key, {}};
  int top = *std::max_element(key.offsets.begin(), key.offsets.end());
  int shift = std::accumulate(key.offsets.begin(), key.offsets.end(), 0);
  for (int j = 0; top + j <= t.max_degree; ++j) {
    Exponent idx;
    std::vector<unsigned> parts;
    for (int o : key.offsets) {
      idx.push_back(o + j);
      parts.push_back(static_cast<unsigned>(o + j));
    }
    Rational w(multinomial(static_cast<unsigned>(j * t.n + shift), parts));
    d.values.push_back(w * t.at(idx));
  }
  return d;
}

bool diagonal_support_check(const MomentTensor& t, const DiagonalKey& key) {
  for (const auto& [idx, v] : t.entries)
    if (!v.is_zero() && diagonal_key_of(idx) != key) return false;
  return true;
}

MonomialMap multivariate_expansion(const MomentTensor& t, int order) {
  if (order > t.max_degree) throw InvalidArgument("expansion order exceeds max_degree");
  MonomialMap out;
  for (const auto& [idx, v] : t.entries) {
    int total = std::accumulate(idx.begin(), idx.end(), 0);
    if (total > order || v.is_zero()) continue;
    std::vector<unsigned> parts(idx.begin(), idx.end());
    Exponent e;
    for (int i : idx) e.push_back(i + 1);
    out[e] = -Rational(multinomial(static_cast<unsigned>(total), parts)) * v;
  }
  return out;
}

DiagonalSolution solve_diagonal(const MomentTensor& t, const DiagonalKey& key, Parity parity, Mode mode) {
  DiagonalSequence seq = diagonal_extract(t, key);
  try {
    if (seq.values.empty()) throw NoNormalIndex("diagonal carries no data");
    Decomposition d = schur_decompose_ml(seq.values, parity, mode);
    ContinuedFraction cf = continued_fraction(d, key);
    return {key, seq.values, std::move(d), std::move(cf)};
  } catch (Error& e) {
    e.attach_key(key.offsets);
    throw;
  }
}

std::vector<DiagonalKey> support_keys(const MomentTensor& t) {
  std::set<DiagonalKey> keys;
  for (const auto& [idx, v] : t.entries)
    if (!v.is_zero()) keys.insert(diagonal_key_of(idx));
  return {keys.begin(), keys.end()};
}

FullSolution assemble_full(const MomentTensor& t, Parity parity) {
  t.validate();
  FullSolution out{t.n, t.max_degree, {}, {}};
  for (const auto& key : support_keys(t)) {
    try {
      out.solutions.push_back(solve_diagonal(t, key, parity));
    } catch (const Error& e) {
      out.failures.push_back({key, e.kind(), e.level(), e.what()});
    }
  }
  return out;
}

Reassembly expand_full(const FullSolution& s, int order) {
  Reassembly r;
  std::set<DiagonalKey> attempted;
  for (const auto& f : s.failures) attempted.insert(f.key);
  for (const auto& sol : s.solutions) {
    attempted.insert(sol.key);
    int shift = std::accumulate(sol.key.offsets.begin(), sol.key.offsets.end(), 0);
    int terms = 0;
    while (shift + s.n * terms <= order) ++terms;  // diagonal entries with |alpha| <= order
    if (terms == 0) continue;
    LaurentSeries f = cf_expand(sol.cf, canonical_tail(sol.cf.parity), terms);
    for (int k = 0; k < terms && k < f.order(); ++k) {
      // z^{-k-1} in the product variable, times the prefactor 1/prod z_i^{j_i}
      Exponent e;
      for (int o : sol.key.offsets) e.push_back(o + k + 1);
      Rational c = f.coeff(-k - 1);
      if (!c.is_zero()) r.expansion[e] = c;
      if (k < sol.decomposition.interpolated) r.trusted.push_back(e);
    }
  }
  // Diagonals without support contribute nothing and need no solution.
  std::vector<int> idx(s.n, 0);
  for (;;) {
    int total = std::accumulate(idx.begin(), idx.end(), 0);
    if (total <= order && !attempted.count(diagonal_key_of(idx))) {
      Exponent e;
      for (int i : idx) e.push_back(i + 1);
      r.trusted.push_back(e);
    }
    int p = 0;
    while (p < s.n && ++idx[p] > std::min(order, s.max_degree)) idx[p++] = 0;
    if (p == s.n) break;
  }
  std::sort(r.trusted.begin(), r.trusted.end());
  return r;
}

}  // namespace diagschur
