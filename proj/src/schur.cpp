#include "diagschur/schur.hpp"

#include <algorithm>
#include <string>

#include "diagschur/errors.hpp"
#include "diagschur/toeplitz.hpp"

namespace diagschur {

std::string_view to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

std::string_view to_string(TailContract c) {
  return c == TailContract::InverseLittleOZ ? "o(z)" : "o(1)";
}

Parity parse_parity(std::string_view text) {
  if (text == "odd") return Parity::Odd;
  if (text == "even") return Parity::Even;
  throw InvalidArgument("parity must be 'odd' or 'even', got '" + std::string(text) + "'");
}

TailContract contract_for(Parity p) {
  return p == Parity::Odd ? TailContract::InverseLittleOZ : TailContract::LittleO1;
}

bool ShiftedSequence::vanishes() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& x) { return x.is_zero(); });
}

std::optional<int> ShiftedSequence::gap() const {
  auto it = std::find_if(values.begin(), values.end(), [](const Rational& x) { return !x.is_zero(); });
  if (it == values.end()) return std::nullopt;
  int first = static_cast<int>(it - values.begin());
  return odd_level() ? first + 1 : first;
}

bool ShiftedSequence::step_possible() const {
  auto g = gap();
  if (!g) return false;
  int len = static_cast<int>(values.size());
  return odd_level() ? len >= 2 * *g - 1 : len >= 2 * *g + 1;
}

LaurentSeries ShiftedSequence::series() const {
  if (odd_level()) {
    std::vector<Rational> neg;
    for (const auto& x : values) neg.push_back(-x);
    return LaurentSeries::from_negative(std::move(neg));
  }
  return LaurentSeries::from_descending(0, values, static_cast<int>(values.size()) - 1);
}

namespace {

std::string level_name(int level) { return "level " + std::to_string(level); }

void require_step(const ShiftedSequence& seq) {
  if (seq.vanishes()) {
    if (seq.values.empty())
      throw Truncated("no data left at " + level_name(seq.level), seq.level);
    throw SingularStep(level_name(seq.level) + " vanishes on all " + std::to_string(seq.values.size()) +
                           " available terms",
                       seq.level);
  }
  if (!seq.step_possible())
    throw Truncated(level_name(seq.level) + " has too few terms to fix the next atom", seq.level);
}

ShiftedSequence next_from_inverse(const ShiftedSequence& seq, const LaurentSeries& rest) {
  ShiftedSequence next;
  next.level = seq.level + 1;
  if (seq.odd_level()) {
    // g = sum s_i z^{-i-1}, i >= -1
    next.start_offset = -1;
    for (int e = 0; e >= -rest.order(); --e) next.values.push_back(rest.coeff(e));
  } else {
    // f = -sum s_i z^{-i-1}, i >= 0
    next.start_offset = 0;
    for (int e = -1; e >= -rest.order(); --e) next.values.push_back(-rest.coeff(e));
  }
  return next;
}

void check_length(const ShiftedSequence& seq, const ShiftedSequence& next) {
  int len = static_cast<int>(seq.values.size());
  int g = *seq.gap();
  int expected = seq.odd_level() ? len - 2 * g + 1 : len - 2 * g - 1;
  if (static_cast<int>(next.values.size()) != expected)
    throw Error(ErrorKind::InvalidArgument,
                "internal length bookkeeping failed at " + level_name(seq.level), seq.level);
}

}  // namespace

LevelStep schur_level_step(const ShiftedSequence& seq) {
  require_step(seq);
  LaurentSeries inv = seq.series().reciprocal();
  Polynomial head = inv.polynomial_part();
  Polynomial atom;
  if (seq.odd_level()) {
    // 1/f = -z m(z) + g(z), with g = O(1)
    std::vector<Rational> m;
    for (int k = 1; k <= head.degree(); ++k) m.push_back(-head.coeff(k));
    atom = Polynomial(std::move(m));
  } else {
    // 1/g = l(z) + f'(z), with f' = O(1/z)
    atom = head;
  }
  LevelStep out{atom, recursive_sequence_via_series(seq, atom)};
  check_length(seq, out.next);
  return out;
}

ShiftedSequence recursive_sequence_via_series(const ShiftedSequence& seq, const Polynomial& atom) {
  require_step(seq);
  LaurentSeries inv = seq.series().reciprocal();
  LaurentSeries rest = seq.odd_level() ? inv + atom.shifted(1) : inv - atom;
  Polynomial leftover = rest.polynomial_part();
  bool ok = seq.odd_level() ? leftover.degree() <= 0 : leftover.is_zero();
  if (!ok) throw InvalidArgument("atom does not match " + level_name(seq.level));
  return next_from_inverse(seq, rest);
}

LevelStep schur_level_step_toeplitz(const ShiftedSequence& seq) {
  require_step(seq);
  int g = *seq.gap();
  int lead = seq.odd_level() ? g - 1 : g;  // position of the pivot
  std::vector<Rational> known(seq.values.begin() + lead, seq.values.end());
  std::vector<Rational> r = toeplitz_solve(known);
  int atom_terms = seq.odd_level() ? g : g + 1;
  std::vector<Rational> atom(r.rend() - atom_terms, r.rend());
  LevelStep out;
  out.atom = Polynomial(std::move(atom));
  out.next.level = seq.level + 1;
  out.next.start_offset = seq.odd_level() ? -1 : 0;
  for (size_t i = atom_terms; i < r.size(); ++i) out.next.values.push_back(-r[i]);
  check_length(seq, out.next);
  return out;
}

StepAB schur_step_ab(const MomentSequence& s) {
  ShiftedSequence seq{1, 0, s};
  auto g = seq.gap();
  if (!g) throw NoNormalIndex("sequence has no normal index: all moments vanish");
  int n1 = *g;
  if (static_cast<int>(s.size()) < 2 * n1)
    throw Truncated("an (a,b) step needs " + std::to_string(2 * n1) + " moments for n1 = " +
                        std::to_string(n1) + ", got " + std::to_string(s.size()),
                    1);
  StepAB out;
  out.atom.b = s[n1 - 1];
  // -b/f = a(z) - sum s^(1)_j z^{-j-1}
  LaurentSeries q = -out.atom.b * seq.series().reciprocal();
  out.atom.a = q.polynomial_part();
  out.tail = recursive_sequence_via_series(s, out.atom);
  return out;
}

std::vector<Rational> recursive_sequence_via_series(const MomentSequence& s, const AtomAB& atom) {
  if (atom.b.is_zero()) throw InvalidArgument("b must be nonzero");
  LaurentSeries f = series_from_moments(s);
  LaurentSeries rest = -atom.b * f.reciprocal() - atom.a;
  if (!rest.polynomial_part().is_zero()) throw InvalidArgument("(a,b) atom does not match the sequence");
  std::vector<Rational> tail;
  for (int e = -1; e >= -rest.order(); --e) tail.push_back(-rest.coeff(e));
  return tail;
}

std::vector<AtomAB> schur_decompose_ab(const MomentSequence& s) {
  std::vector<AtomAB> atoms;
  std::vector<Rational> cur = s;
  for (;;) {
    ShiftedSequence seq{1, 0, cur};
    auto g = seq.gap();
    if (!g || static_cast<int>(cur.size()) < 2 * *g) break;
    StepAB step = schur_step_ab(cur);
    atoms.push_back(step.atom);
    cur = step.tail;
  }
  return atoms;
}

Decomposition schur_decompose_ml(const MomentSequence& s, Parity parity, Mode mode) {
  if (s.empty()) throw InvalidArgument("moment sequence is empty");
  Decomposition d;
  d.parity = parity;
  d.contract = contract_for(parity);
  d.levels.push_back(ShiftedSequence{1, 0, s});
  if (d.levels[0].vanishes()) throw NoNormalIndex("sequence has no normal index: all moments vanish");

  std::vector<Polynomial> half;
  for (;;) {
    const ShiftedSequence& cur = d.levels.back();
    if (!cur.values.empty() && cur.vanishes()) {
      d.stop = StopReason::Terminated;
      break;
    }
    if (!cur.step_possible()) {
      d.stop = StopReason::Exhausted;
      break;
    }
    LevelStep step = schur_level_step(cur);
    half.push_back(step.atom);
    d.levels.push_back(std::move(step.next));
  }

  const bool want_odd = parity == Parity::Odd;
  auto parity_ok = [&] { return !half.empty() && (half.size() % 2 == 1) == want_odd; };
  const int stop_level = d.levels.back().level;

  if (!parity_ok()) {
    if (mode == Mode::Strict || half.size() <= 1) {
      if (d.stop == StopReason::Terminated && !half.empty())
        throw SingularStep(level_name(stop_level) + " vanishes where the " + std::string(to_string(parity)) +
                               " fraction needs another atom",
                           stop_level);
      throw Truncated("not enough moments for a complete " + std::string(to_string(parity)) +
                          " fraction (" + level_name(stop_level) + ")",
                      stop_level);
    }
    half.pop_back();
    d.levels.pop_back();
  } else if (mode == Mode::Strict && d.stop == StopReason::Exhausted && !d.levels.back().values.empty()) {
    throw Truncated(std::to_string(d.levels.back().values.size()) + " moments left over after " +
                        level_name(stop_level - 1),
                    stop_level);
  }

  for (size_t k = 0; k < half.size(); k += 2) {
    AtomML a;
    a.m = half[k];
    if (k + 1 < half.size()) a.l = half[k + 1];
    d.atoms.push_back(std::move(a));
  }
  d.interpolated = static_cast<int>(s.size() - d.levels.back().values.size());
  return d;
}

namespace {

// Determinant of a matrix whose last row is (1, z, ..., z^{n-1}), expanded
// along that row.
Polynomial monomial_row_determinant(const RationalMatrix& upper, int n) {
  std::vector<Rational> coeffs(n);
  for (int k = 0; k < n; ++k) {
    RationalMatrix minor;
    for (const auto& row : upper) {
      std::vector<Rational> r;
      for (int c = 0; c < n; ++c)
        if (c != k) r.push_back(row[c]);
      minor.push_back(std::move(r));
    }
    Rational cof = determinant(minor);
    coeffs[k] = ((n - 1 + k) % 2 == 0) ? cof : -cof;
  }
  return Polynomial(std::move(coeffs));
}

Rational seq_at(const std::vector<Rational>& v, int i) {
  return i >= 0 && i < static_cast<int>(v.size()) ? v[i] : Rational();
}

}  // namespace

Polynomial a0_via_determinant(const MomentSequence& s, int n1) {
  if (static_cast<int>(s.size()) < 2 * n1)
    throw FormulaInapplicable("a0 needs moments up to s_" + std::to_string(2 * n1 - 1));
  Rational d = hankel_det(s, n1);
  if (d.is_zero()) throw FormulaInapplicable("D_n1 vanishes");
  RationalMatrix upper(n1, std::vector<Rational>(n1 + 1));
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k <= n1; ++k) upper[i][k] = s[i + k];
  return (Rational(1) / d) * monomial_row_determinant(upper, n1 + 1);
}

std::vector<Rational> recursive_sequence_via_determinant(const MomentSequence& s, int n1) {
  if (n1 < 1 || static_cast<int>(s.size()) < n1) throw FormulaInapplicable("bad first normal index");
  const Rational& base = s[n1 - 1];
  if (base.is_zero()) throw FormulaInapplicable("pivot s_{n1-1} vanishes", 1);
  std::vector<Rational> out;
  const int count = static_cast<int>(s.size()) - 2 * n1;
  for (int j = 0; j < count; ++j) {
    int size = j + n1 + 1;
    RationalMatrix h(size, std::vector<Rational>(size));
    for (int i = 0; i < size; ++i)
      for (int k = 0; k < size; ++k)
        if (i - k >= -1) h[i][k] = seq_at(s, n1 + i - k);
    Rational v = determinant(h) / pow(base, size);
    out.push_back((j + n1) % 2 == 0 ? v : -v);
  }
  return out;
}

Polynomial m_via_determinant(const ShiftedSequence& odd) {
  if (!odd.odd_level()) throw InvalidArgument("m atoms come from odd levels");
  auto g = odd.gap();
  if (!g) throw FormulaInapplicable("level vanishes", odd.level);
  int nu = *g;
  if (static_cast<int>(odd.values.size()) < 2 * nu - 1)
    throw FormulaInapplicable("not enough terms for D_nu", odd.level);
  Rational d = hankel_det(odd.values, nu);
  if (d.is_zero()) throw FormulaInapplicable("D_nu vanishes", odd.level);
  RationalMatrix upper(nu - 1, std::vector<Rational>(nu));
  for (int i = 0; i + 1 < nu; ++i)
    for (int k = 0; k < nu; ++k) upper[i][k] = odd.values[i + k + 1];
  Rational scale = (nu % 2 == 1 ? Rational(1) : Rational(-1)) / d;
  return scale * monomial_row_determinant(upper, nu);
}

Polynomial l_via_determinant(const ShiftedSequence& odd, const ShiftedSequence& even) {
  if (!odd.odd_level() || even.odd_level()) throw InvalidArgument("expected an odd and an even level");
  auto g = odd.gap();
  if (!g) throw FormulaInapplicable("level vanishes", odd.level);
  int nu = *g;
  if (static_cast<int>(odd.values.size()) < 2 * nu)
    throw FormulaInapplicable("not enough terms for D_nu^+", odd.level);
  Rational dp = shifted_hankel_det(odd.values, nu);
  if (!dp.is_zero()) {
    Rational v = odd.values[nu - 1] * hankel_det(odd.values, nu) / dp;
    return Polynomial::constant(nu % 2 == 1 ? v : -v);
  }
  // nu_j < mu_j: the even level starts with zeros; s here is s_0, s_1, ...
  std::vector<Rational> e(even.values.begin() + std::min<size_t>(1, even.values.size()), even.values.end());
  auto mu_gap = even.gap();
  if (!mu_gap || *mu_gap == 0) throw FormulaInapplicable("inconsistent regularity", even.level);
  int mu = *mu_gap;
  if (static_cast<int>(e.size()) < 2 * mu) throw FormulaInapplicable("not enough terms for l", even.level);
  Rational dm = hankel_det(e, mu);
  if (dm.is_zero() || e[mu - 1].is_zero()) throw FormulaInapplicable("pivot vanishes", even.level);
  RationalMatrix upper(mu, std::vector<Rational>(mu + 1));
  for (int i = 0; i < mu; ++i)
    for (int k = 0; k <= mu; ++k) upper[i][k] = e[i + k];
  return (Rational(1) / (e[mu - 1] * dm)) * monomial_row_determinant(upper, mu + 1);
}

std::vector<AtomML> atoms_via_determinants(const Decomposition& d) {
  std::vector<AtomML> out;
  for (size_t j = 0; j < d.atoms.size(); ++j) {
    AtomML a;
    a.m = m_via_determinant(d.levels.at(2 * j));
    if (d.atoms[j].l) a.l = l_via_determinant(d.levels.at(2 * j), d.levels.at(2 * j + 1));
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace diagschur
