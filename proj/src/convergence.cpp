#include "diagschur/convergence.hpp"

#include <string>

#include "diagschur/errors.hpp"

namespace diagschur {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::BoundedSoFar: return "boundedSoFar";
    case Verdict::Growing: return "growing";
    case Verdict::Exhausted: return "exhausted";
  }
  return "unknown";
}

ABPolynomials ab_polynomials(const std::vector<AtomAB>& atoms) {
  ABPolynomials out;
  Polynomial p_prev, p = Polynomial::constant(1);
  Polynomial q_prev = Polynomial::constant(1), q;
  out.P.push_back(p);
  out.Q.push_back(q);
  for (const auto& a : atoms) {
    Polynomial p_next = a.a * p - a.b * p_prev;
    Polynomial q_next = a.a * q - a.b * q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.P.push_back(p);
    out.Q.push_back(q);
  }
  return out;
}

namespace {

void check_depth(int depth, int available) {
  if (depth < 0) throw InvalidArgument("depth must be nonnegative");
  if (depth > available)
    throw InvalidArgument("depth " + std::to_string(depth) + " exceeds the " + std::to_string(available) +
                          " available levels");
}

Verdict judge(int depth, int available, const Rational& last, const Rational& before) {
  if (depth == available) return Verdict::Exhausted;
  if (depth >= 2 && last >= before) return Verdict::Growing;
  return Verdict::BoundedSoFar;
}

}  // namespace

IndeterminacyReport indeterminacy_sums_ab(const std::vector<AtomAB>& atoms, int depth) {
  IndeterminacyReport r;
  r.criterion = IndeterminacyReport::Criterion::AB;
  r.depth = depth;
  r.available = static_cast<int>(atoms.size());
  check_depth(depth, r.available);
  for (int i = 0; i < depth; ++i)
    if (atoms[i].b.is_zero()) throw InvalidArgument("b_" + std::to_string(i) + " vanishes");

  ABPolynomials pq = ab_polynomials(atoms);
  Rational btilde(1), last, before;
  for (int i = 0; i < depth; ++i) {
    btilde *= atoms[i].b;
    if (btilde.sign() < 0) r.summands_nonnegative = false;
    Rational p0 = pq.P[i].coeff(0), q0 = pq.Q[i].coeff(0);
    Rational tp = p0 * p0 / btilde;
    r.sum_p += tp;
    r.sum_q += q0 * q0 / btilde;
    before = last;
    last = tp;
  }
  r.verdict = judge(depth, r.available, last, before);
  return r;
}

IndeterminacyReport indeterminacy_sums_ml(const std::vector<AtomML>& atoms, int depth) {
  IndeterminacyReport r;
  r.criterion = IndeterminacyReport::Criterion::ML;
  r.depth = depth;
  r.available = static_cast<int>(atoms.size());
  check_depth(depth, r.available);
  Rational last, before;
  for (int i = 0; i < depth; ++i) {
    const AtomML& a = atoms[i];
    if (!a.l) {
      r.applicable = false;
      r.note = "atom " + std::to_string(i + 1) + " has no l; the fraction is odd";
      break;
    }
    if (!a.l->is_constant()) {
      r.applicable = false;
      r.note = "l_" + std::to_string(i + 1) + " is not constant; the sequence is not regular";
      break;
    }
    Rational m0 = a.m.coeff(0), l = a.l->coeff(0);
    if (m0.sign() < 0 || l.sign() < 0) r.summands_nonnegative = false;
    if (l.sign() <= 0) r.positive_l = false;
    r.sum_m += m0;
    r.sum_l += l;
    before = last;
    last = m0 + l;
  }
  r.verdict = judge(depth, r.available, last, before);
  return r;
}

}  // namespace diagschur
