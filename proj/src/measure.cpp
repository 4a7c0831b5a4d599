#include "diagschur/measure.hpp"

#include <algorithm>
#include <set>

#include "diagschur/errors.hpp"

namespace diagschur {

DiscreteMeasure::DiscreteMeasure(int n, std::vector<MeasureAtom> atoms) : n_(n), atoms_(std::move(atoms)) {
  if (n < 1) throw InvalidArgument("measure dimension must be at least 1");
  std::set<std::vector<Rational>> seen;
  for (const auto& a : atoms_) {
    if (static_cast<int>(a.node.size()) != n) throw InvalidArgument("node has the wrong dimension");
    if (a.weight.sign() <= 0) throw InvalidArgument("weights must be positive");
    for (const auto& c : a.node)
      if (c.sign() <= 0) throw InvalidArgument("node coordinates must be positive");
    if (!seen.insert(a.node).second) throw InvalidArgument("repeated node");
  }
}

MomentSequence moments(const DiscreteMeasure& m, int max_degree) {
  if (m.dimension() != 1) throw InvalidArgument("moment sequence needs a one-dimensional measure");
  if (max_degree < 0) throw InvalidArgument("max_degree must be nonnegative");
  MomentSequence s(max_degree + 1);
  for (const auto& a : m.atoms())
    for (int j = 0; j <= max_degree; ++j) s[j] += a.weight * pow(a.node[0], j);
  return s;
}

MomentTensor moment_tensor(const DiscreteMeasure& m, int max_degree) {
  if (max_degree < 0) throw InvalidArgument("max_degree must be nonnegative");
  MomentTensor t;
  t.n = m.dimension();
  t.max_degree = max_degree;
  Exponent idx(t.n, 0);
  for (;;) {
    Rational v;
    for (const auto& a : m.atoms()) {
      Rational term = a.weight;
      for (int i = 0; i < t.n; ++i) term *= pow(a.node[i], idx[i]);
      v += term;
    }
    t.set(idx, v);
    int p = 0;
    while (p < t.n && ++idx[p] > max_degree) idx[p++] = 0;
    if (p == t.n) break;
  }
  return t;
}

LaurentSeries stieltjes_series(const DiscreteMeasure& m, int order) {
  if (m.dimension() != 1) throw InvalidArgument("Stieltjes transform needs a one-dimensional measure");
  if (order < 1) throw InvalidArgument("order must be positive");
  LaurentSeries total = LaurentSeries::zero(order);
  for (const auto& a : m.atoms()) {
    std::vector<Rational> neg;
    Rational term = -a.weight;
    for (int j = 0; j < order; ++j) {
      neg.push_back(term);
      term *= a.node[0];
    }
    total = total + LaurentSeries::from_negative(std::move(neg));
  }
  return total;
}

VerificationReport roundtrip_verify(const DiscreteMeasure& m, Parity parity) {
  VerificationReport r;
  const int k = static_cast<int>(m.atoms().size());
  const int count = parity == Parity::Even ? 2 * k : 2 * k - 1;
  if (k == 0) {
    r.error = "measure has no atoms";
    return r;
  }
  try {
    if (m.dimension() == 1) {
      MomentSequence s = moments(m, count - 1);
      Decomposition d = schur_decompose_ml(s, parity);
      r.levels = d.level_count();
      ContinuedFraction cf = continued_fraction(d);
      LaurentSeries f = cf_expand(cf, canonical_tail(parity), count);
      r.agree = f.order() >= count;
      for (int j = 0; j < count && j < f.order(); ++j) {
        ++r.compared;
        if (f.coeff(-j - 1) != -s[j]) {
          r.agree = false;
          r.first_mismatch = j;
          break;
        }
      }
      return r;
    }
    MomentTensor t = moment_tensor(m, count - 1);
    FullSolution full = assemble_full(t, parity);
    for (const auto& f : full.failures) {
      if (!r.error.empty()) r.error += "; ";
      r.error += "diagonal (";
      for (size_t i = 0; i < f.key.offsets.size(); ++i) r.error += (i ? "," : "") + std::to_string(f.key.offsets[i]);
      r.error += ") skipped: " + std::string(kind_name(f.kind)) + " at level " + std::to_string(f.level);
    }
    for (const auto& sol : full.solutions) {
      r.diagonals.push_back(sol.key);
      r.levels = std::max(r.levels, sol.decomposition.level_count());
    }
    int order = count - 1;
    Reassembly re = expand_full(full, order);
    MonomialMap direct = multivariate_expansion(t, order);
    // Failed diagonals are listed in `error`; their monomials are simply untrusted.
    r.agree = !re.trusted.empty();
    for (size_t i = 0; i < re.trusted.size(); ++i) {
      const Exponent& e = re.trusted[i];
      auto a = re.expansion.find(e);
      auto b = direct.find(e);
      Rational va = a == re.expansion.end() ? Rational() : a->second;
      Rational vb = b == direct.end() ? Rational() : b->second;
      ++r.compared;
      if (va != vb) {
        r.agree = false;
        r.first_mismatch = static_cast<int>(i);
        break;
      }
    }
  } catch (const Error& e) {
    r.agree = false;
    r.error = std::string(kind_name(e.kind())) + ": " + e.what();
  }
  return r;
}

}  // namespace diagschur
