#include "diagschur/continued_fraction.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "diagschur/errors.hpp"

namespace diagschur {

void DiagonalKey::validate() const {
  if (offsets.empty()) throw InvalidArgument("diagonal key is empty");
  for (int j : offsets)
    if (j < 0) throw InvalidArgument("diagonal key offsets must be nonnegative");
  if (*std::min_element(offsets.begin(), offsets.end()) != 0)
    throw InvalidArgument("diagonal key needs at least one zero offset");
}

void ContinuedFraction::validate() const {
  for (size_t j = 0; j < atoms.size(); ++j) {
    if (atoms[j].m.is_zero()) throw InvalidArgument("atom m_" + std::to_string(j + 1) + " is zero");
    bool last = j + 1 == atoms.size();
    bool needs_l = parity == Parity::Even || !last;
    if (needs_l && !atoms[j].l)
      throw InvalidArgument("atom " + std::to_string(j + 1) + " is missing l");
    if (!needs_l && atoms[j].l) throw InvalidArgument("an odd fraction ends without l");
    if (atoms[j].l && atoms[j].l->is_zero())
      throw InvalidArgument("atom l_" + std::to_string(j + 1) + " is zero");
  }
  if (key) key->validate();
}

int ContinuedFraction::interpolation_order() const {
  int n = 0;
  for (const auto& a : atoms) {
    n += 2 * a.m.degree() + 1;
    if (a.l) n += 2 * a.l->degree() + 1;
  }
  return n;
}

ContinuedFraction continued_fraction(const Decomposition& d, std::optional<DiagonalKey> key) {
  ContinuedFraction cf{d.parity, d.atoms, std::move(key), d.contract};
  cf.validate();
  return cf;
}

Tail canonical_tail(Parity p) { return p == Parity::Even ? Tail::zero() : Tail::pole(); }

bool admissible(const Tail& t, Parity p) {
  auto val = t.value.valuation();
  if (p == Parity::Even) {
    switch (t.kind) {
      case Tail::Kind::Zero: return true;
      case Tail::Kind::Pole: return false;
      case Tail::Kind::Series: return t.value.order() >= 0 && (!val || *val < 0);
      case Tail::Kind::Inverse: return val && *val > 0;
    }
  } else {
    switch (t.kind) {
      case Tail::Kind::Zero: return false;
      case Tail::Kind::Pole: return true;
      case Tail::Kind::Series: return val && *val >= 0;
      case Tail::Kind::Inverse: return t.value.order() >= -1 && (!val || *val <= 0);
    }
  }
  return false;
}

std::vector<StieltjesPair> stieltjes_polynomials(const ContinuedFraction& cf, int up_to) {
  int n = static_cast<int>(cf.atoms.size());
  int max_index = cf.parity == Parity::Even ? 2 * n : std::max(0, 2 * n - 1);
  if (up_to < -1 || up_to > max_index)
    throw InvalidArgument("Stieltjes polynomial index " + std::to_string(up_to) + " exceeds " +
                          std::to_string(max_index));
  std::vector<StieltjesPair> out;
  out.push_back({-1, Polynomial(), Polynomial::constant(1)});
  out.push_back({0, Polynomial::constant(1), Polynomial()});
  for (int k = 1; k <= up_to; ++k) {
    const StieltjesPair& prev = out[k];      // index k-1
    const StieltjesPair& prev2 = out[k - 1];  // index k-2
    StieltjesPair next{k, {}, {}};
    if (k % 2 == 1) {
      // y_{2j+1} = y_{2j-1} - m_{j+1} z y_{2j}
      Polynomial zm = cf.atoms[(k - 1) / 2].m.shifted(1);
      next.P = prev2.P - zm * prev.P;
      next.Q = prev2.Q - zm * prev.Q;
    } else {
      // y_{2j} = y_{2j-2} + l_j y_{2j-1}
      const Polynomial& l = *cf.atoms[k / 2 - 1].l;
      next.P = prev2.P + l * prev.P;
      next.Q = prev2.Q + l * prev.Q;
    }
    out.push_back(std::move(next));
  }
  return out;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

MultiMatrix2 operator*(const MultiMatrix2& a, const MultiMatrix2& b) {
  int n = a[0][0].variables();
  MultiMatrix2 r{{{MultiPoly(n), MultiPoly(n)}, {MultiPoly(n), MultiPoly(n)}}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

namespace {

Matrix2 identity2() { return {{{Polynomial::constant(1), Polynomial()}, {Polynomial(), Polynomial::constant(1)}}}; }

Matrix2 m_factor(const Polynomial& m) {
  return {{{Polynomial::constant(1), Polynomial()}, {-m.shifted(1), Polynomial::constant(1)}}};
}

Matrix2 l_factor(const Polynomial& l) {
  return {{{Polynomial::constant(1), l}, {Polynomial(), Polynomial::constant(1)}}};
}

int variables_of(const std::optional<DiagonalKey>& key) { return key ? key->dimension() : 1; }

MultiMatrix2 lift(const Matrix2& m, int n) {
  return {{{MultiPoly::lift(m[0][0], n), MultiPoly::lift(m[0][1], n)},
           {MultiPoly::lift(m[1][0], n), MultiPoly::lift(m[1][1], n)}}};
}

MultiMatrix2 prefactor(const std::optional<DiagonalKey>& key) {
  int n = variables_of(key);
  Exponent zero(n, 0);
  Exponent e = key ? key->offsets : zero;
  return {{{MultiPoly::monomial(zero), MultiPoly(n)}, {MultiPoly(n), MultiPoly::monomial(e)}}};
}

}  // namespace

Polynomial ResolventMatrix::det() const { return core[0][0] * core[1][1] - core[0][1] * core[1][0]; }

MultiMatrix2 ResolventMatrix::full() const {
  MultiMatrix2 w = lift(core, variables_of(key));
  if (key) {
    Exponent e = key->offsets;
    MultiPoly a = MultiPoly::monomial(e);
    w[1][0] = a * w[1][0];
    w[1][1] = a * w[1][1];
  }
  return w;
}

MultiPoly ResolventMatrix::full_det() const {
  MultiMatrix2 w = full();
  return w[0][0] * w[1][1] - w[0][1] * w[1][0];
}

ResolventMatrix resolvent_matrix(const ContinuedFraction& cf) {
  cf.validate();
  ResolventMatrix w;
  w.kind = cf.parity;
  w.atoms = static_cast<int>(cf.atoms.size());
  w.key = cf.key;
  if (cf.atoms.empty()) {
    w.core = identity2();
    return w;
  }
  int n = w.atoms;
  auto pairs = stieltjes_polynomials(cf, cf.parity == Parity::Even ? 2 * n : 2 * n - 1);
  auto at = [&](int k) -> const StieltjesPair& { return pairs[k + 1]; };
  int c2 = cf.parity == Parity::Even ? 2 * n : 2 * n - 2;
  w.core = {{{at(2 * n - 1).Q, at(c2).Q}, {at(2 * n - 1).P, at(c2).P}}};
  return w;
}

Matrix2 factor_product(const ContinuedFraction& cf) {
  cf.validate();
  Matrix2 r = identity2();
  for (const auto& a : cf.atoms) {
    r = r * m_factor(a.m);
    if (a.l) r = r * l_factor(*a.l);
  }
  return r;
}

MultiMatrix2 full_factor_product(const ContinuedFraction& cf) {
  cf.validate();
  int n = variables_of(cf.key);
  MultiMatrix2 r = prefactor(cf.key);
  for (const auto& a : cf.atoms) {
    r = r * lift(m_factor(a.m), n);
    if (a.l) r = r * lift(l_factor(*a.l), n);
  }
  return r;
}

std::vector<AtomML> peel_atoms(const ResolventMatrix& w) {
  std::vector<AtomML> rev;
  Matrix2 cur = w.core;
  for (int j = w.atoms; j >= 1; --j) {
    AtomML a;
    if (w.kind == Parity::Even || j < w.atoms) {
      // P_{2j} = P_{2j-2} + l_j P_{2j-1}, deg P_{2j-2} < deg P_{2j-1}
      Polynomial l = divmod(cur[1][1], cur[1][0]).first;
      cur = cur * l_factor(-l);
      a.l = l;
    }
    // P_{2j-1} = P_{2j-3} - z m_j P_{2j-2}, deg P_{2j-3} <= deg P_{2j-2}
    Polynomial q = divmod(cur[1][0], cur[1][1]).first;
    std::vector<Rational> m;
    for (int k = 1; k <= q.degree(); ++k) m.push_back(-q.coeff(k));
    a.m = Polynomial(std::move(m));
    cur = cur * m_factor(-a.m);
    rev.push_back(std::move(a));
  }
  return {rev.rbegin(), rev.rend()};
}

FactorizationCheck resolvent_factorization_check(const ResolventMatrix& w, const ContinuedFraction& cf) {
  FactorizationCheck out;
  bool same_shape = w.kind == cf.parity && w.atoms == static_cast<int>(cf.atoms.size()) && w.key == cf.key;
  out.ok = same_shape && w.core == factor_product(cf) && w.full() == full_factor_product(cf);
  if (out.ok) return out;
  try {
    auto own = peel_atoms(w);
    size_t n = std::min(own.size(), cf.atoms.size());
    for (size_t j = 0; j < n; ++j) {
      if (!(own[j].m == cf.atoms[j].m) || own[j].l != cf.atoms[j].l) {
        out.witness = static_cast<int>(j + 1);
        break;
      }
    }
    if (!out.witness && own.size() != cf.atoms.size()) out.witness = static_cast<int>(n + 1);
  } catch (const Error&) {
    // W is not a product of elementary factors; nothing to localize.
  }
  return out;
}

FactorizationCheck resolvent_factorization_check(const ContinuedFraction& cf) {
  return resolvent_factorization_check(resolvent_matrix(cf), cf);
}

namespace {

// Re-run an exact computation with growing working precision until the
// result is trusted to `order` terms or stops improving.
LaurentSeries refine(const std::function<LaurentSeries(int)>& eval, int order) {
  int work = std::max(order, 1) + 4;
  LaurentSeries best = eval(work);
  for (int round = 0; best.order() < order && round < 12; ++round) {
    work *= 2;
    LaurentSeries next = eval(work);
    if (next.order() <= best.order()) break;
    best = std::move(next);
  }
  return best.order() > order ? best.truncated(order) : best;
}

LaurentSeries reciprocal_at(const LaurentSeries& x, int depth) {
  try {
    return x.reciprocal();
  } catch (const DivisionByZero&) {
    throw DivisionByZero("continued fraction denominator vanishes at depth " + std::to_string(depth), depth);
  }
}

}  // namespace

LaurentSeries moebius_apply(const ResolventMatrix& w, const Tail& tail, int order) {
  const Matrix2& m = w.core;
  auto eval = [&](int work) {
    LaurentSeries num, den;
    switch (tail.kind) {
      case Tail::Kind::Zero:
        num = LaurentSeries::from_polynomial(m[0][1], work);
        den = LaurentSeries::from_polynomial(m[1][1], work);
        break;
      case Tail::Kind::Pole:
        num = LaurentSeries::from_polynomial(m[0][0], work);
        den = LaurentSeries::from_polynomial(m[1][0], work);
        break;
      case Tail::Kind::Series:
        num = tail.value * m[0][0] + m[0][1];
        den = tail.value * m[1][0] + m[1][1];
        break;
      case Tail::Kind::Inverse:
        num = tail.value * m[0][1] + m[0][0];
        den = tail.value * m[1][1] + m[1][0];
        break;
    }
    return num * reciprocal_at(den, 1);
  };
  return refine(eval, order);
}

LaurentSeries cf_expand(const ContinuedFraction& cf, const Tail& tail, int order) {
  cf.validate();
  if (order < 1) throw InvalidArgument("expansion order must be positive");
  if (!admissible(tail, cf.parity))
    throw InvalidArgument("tail does not satisfy the " + std::string(to_string(cf.contract)) + " contract");

  // Flatten to half-steps: m_1, l_1, m_2, ...
  std::vector<std::pair<bool, const Polynomial*>> half;
  for (const auto& a : cf.atoms) {
    half.emplace_back(true, &a.m);
    if (a.l) half.emplace_back(false, &*a.l);
  }

  auto eval = [&](int work) {
    LaurentSeries x;
    if (half.empty()) {
      // No atoms: the fraction is the tail itself.
      switch (tail.kind) {
        case Tail::Kind::Zero: return LaurentSeries::zero(work);
        case Tail::Kind::Pole: throw DivisionByZero("empty fraction with a pole tail");
        case Tail::Kind::Series: return tail.value;
        case Tail::Kind::Inverse: return reciprocal_at(tail.value, 1);
      }
    }
    // x holds the value sitting below the current half-step.
    switch (tail.kind) {
      case Tail::Kind::Zero: x = LaurentSeries::zero(work); break;
      case Tail::Kind::Pole: x = LaurentSeries::zero(work); break;  // 1/tau = 0
      case Tail::Kind::Series:
        x = cf.parity == Parity::Even ? tail.value : reciprocal_at(tail.value, static_cast<int>(half.size()) + 1);
        break;
      case Tail::Kind::Inverse:
        x = cf.parity == Parity::Odd ? tail.value : reciprocal_at(tail.value, static_cast<int>(half.size()) + 1);
        break;
    }
    for (int k = static_cast<int>(half.size()) - 1; k >= 0; --k) {
      const auto& [is_m, p] = half[k];
      LaurentSeries den = is_m ? x - p->shifted(1) : x + *p;
      x = reciprocal_at(den, k + 1);
    }
    return x;
  };
  return refine(eval, order);
}

}  // namespace diagschur
