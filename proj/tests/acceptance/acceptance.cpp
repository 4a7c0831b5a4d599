// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "diagschur/cli.hpp"
#include "support/oracles.hpp"

using namespace diagschur;
using oracle::seq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Instance {
  DiscreteMeasure measure;
  std::vector<Rational> moments;
  Decomposition decomposition;
  int atoms;
};

std::vector<Instance> g_instances;

Outcome roundtrip() {
  Outcome o;
  oracle::Gen g(20260101);
  auto start = std::chrono::steady_clock::now();
  int matched = 0;
  for (int t = 0; t < 50; ++t) {
    int k = g.uniform(1, 5);
    auto mu = g.measure(1, k);
    auto s = moments(mu, 2 * k - 1);
    try {
      auto d = schur_decompose_ml(s, Parity::Even, Mode::Strict);
      if (d.level_count() != k) o.fail("instance " + std::to_string(t) + ": wrong level count");
      auto f = cf_expand(continued_fraction(d), Tail::zero(), 2 * k);
      for (int j = 0; j < 2 * k; ++j) {
        if (f.order() <= j || f.coeff(-j - 1) != -s[j]) {
          o.fail("instance " + std::to_string(t) + ": moment " + std::to_string(j) + " differs");
          break;
        }
        ++matched;
      }
      g_instances.push_back({mu, s, d, k});
    } catch (const Error& e) {
      o.fail("instance " + std::to_string(t) + ": " + e.what());
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 10) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) {
    std::ostringstream os;
    os << "50 measures, " << matched << " moments reproduced, " << secs << " s";
    o.detail = os.str();
  }
  return o;
}

Outcome path_agreement() {
  Outcome o;
  int compared = 0, regular = 0, skipped = 0;
  for (size_t t = 0; t < g_instances.size(); ++t) {
    const auto& in = g_instances[t];
    const auto& d = in.decomposition;
    try {
      auto det = atoms_via_determinants(d);
      for (size_t j = 0; j < d.atoms.size(); ++j)
        if (det[j].m != d.atoms[j].m || det[j].l != d.atoms[j].l)
          o.fail("instance " + std::to_string(t) + ": atom " + std::to_string(j + 1) + " differs");
      ++compared;
    } catch (const FormulaInapplicable&) {
      ++skipped;
    }
    if (!is_regular(in.moments).regular) continue;
    ++regular;
    for (size_t j = 0; j < d.atoms.size(); ++j) {
      const auto& l = d.atoms[j].l;
      if (!l || l->degree() != 0 || l->coeff(0) != Rational(1) / d.levels[2 * j + 1].at(-1))
        o.fail("instance " + std::to_string(t) + ": l_" + std::to_string(j + 1) + " is not 1/s_{-1}");
    }
  }
  if (g_instances.size() != 50) o.fail("round-trip instances missing");
  if (o.ok)
    o.detail = std::to_string(compared) + " determinant cross-checks, " + std::to_string(skipped) + " skipped, " +
               std::to_string(regular) + " regular instances";
  return o;
}

std::string run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  if (cli::run(args, in, out, err) != 0) throw std::runtime_error("cli failed: " + err.str());
  return out.str();
}

Outcome worked_examples() {
  Outcome o;
  using nlohmann::json;
  for (const char* name : {"delta1.json", "delta1_delta2.json"}) {
    std::ifstream f(std::string(DIAGSCHUR_GOLDEN_DIR) + "/" + name);
    if (!f) {
      o.fail(std::string("missing golden file ") + name);
      continue;
    }
    json g = json::parse(f);
    std::string schur = run_cli({"schur", "--parity", g["parity"]}, g["moments"].dump());
    if (json::parse(schur) != g["schur"]) o.fail(std::string(name) + ": schur output differs");
    if (json::parse(run_cli({"resolvent"}, schur)) != g["resolvent"]) o.fail(std::string(name) + ": W differs");
  }
  auto d1 = schur_decompose_ml(seq({1, 1}), Parity::Even);
  auto w = resolvent_matrix(continued_fraction(d1));
  Polynomial one = Polynomial::constant(1);
  if (d1.atoms.size() != 1 || d1.atoms[0].m != one || d1.atoms[0].l != one) o.fail("delta_1 atoms");
  if (w.core[0][0] != one || w.core[0][1] != one || w.core[1][0] != Polynomial{0, -1} ||
      w.core[1][1] != Polynomial{1, -1})
    o.fail("delta_1 W");
  if (w.det() != one) o.fail("delta_1 det W");
  auto d2 = schur_decompose_ml(seq({2, 3, 5, 9}), Parity::Even);
  if (d2.atoms.size() != 2 || d2.atoms[0].m != Polynomial::constant(Rational(1, 2)) ||
      d2.atoms[0].l != Polynomial::constant(Rational(4, 3)))
    o.fail("delta_1 + delta_2 atoms");
  if (o.ok) o.detail = "golden delta1.json and delta1_delta2.json match";
  return o;
}

Outcome resolvent_identities() {
  Outcome o;
  oracle::Gen g(20260104);
  int keyed = 0;
  for (int t = 0; t < 100; ++t) {
    auto cf = oracle::random_cf(g, t % 2 == 0);
    std::string tag = "fraction " + std::to_string(t);
    auto w = resolvent_matrix(cf);
    if (w.core != factor_product(cf)) o.fail(tag + ": W differs from the M/L product");
    if (w.det() != Polynomial::constant(1)) o.fail(tag + ": det W is not 1");
    if (!resolvent_factorization_check(w, cf).ok) o.fail(tag + ": factorization check");
    if (cf.key) {
      ++keyed;
      if (w.full() != full_factor_product(cf)) o.fail(tag + ": A-prefactor product differs");
      if (w.full_det() != MultiPoly::monomial(cf.key->offsets)) o.fail(tag + ": det of full W");
    }
    int order = cf.interpolation_order() + 4;
    for (const Tail& tail : {canonical_tail(cf.parity),
                             cf.parity == Parity::Even
                                 ? Tail::series(LaurentSeries::from_descending(-1, {g.small(3), g.small(3)}, 80))
                                 : Tail::inverse(LaurentSeries::from_descending(0, {g.small(3), g.small(3)}, 80))}) {
      try {
        auto a = moebius_apply(w, tail, order);
        auto b = cf_expand(cf, tail, order);
        int common = std::min(a.order(), b.order());
        if (common < cf.interpolation_order()) o.fail(tag + ": trusted order too short");
        if (!oracle::agree_to(a, b, common)) o.fail(tag + ": moebius_apply and cf_expand differ");
      } catch (const DivisionByZero&) {
        // A random tail may cancel the bottom denominator; the canonical one never does.
        if (tail.kind == Tail::Kind::Zero || tail.kind == Tail::Kind::Pole) o.fail(tag + ": canonical tail failed");
      }
    }
  }
  if (o.ok) o.detail = "100 fractions (" + std::to_string(keyed) + " with a diagonal key)";
  return o;
}

Outcome hankel_oracle() {
  Outcome o;
  oracle::Gen g(20260105);
  int with_indices = 0;
  for (int t = 0; t < 100; ++t) {
    int len = g.uniform(1, 10);
    std::vector<Rational> s;
    for (int i = 0; i < len; ++i) s.push_back(g.uniform(0, 2) == 0 ? Rational() : g.small(3, 2));
    auto got = normal_indices(s);
    auto want = oracle::brute_indices(s);
    if (got.indices != want.indices || got.nu != want.nu || got.mu != want.mu)
      o.fail("sequence " + std::to_string(t) + ": classification differs from the rank oracle");
    if (!interlaced(got)) o.fail("sequence " + std::to_string(t) + ": interlacing violated");
    with_indices += !got.indices.empty();
  }
  if (o.ok) o.detail = "100 sequences, " + std::to_string(with_indices) + " with normal indices";
  return o;
}

Outcome reassembly() {
  Outcome o;
  oracle::Gen g(20260106);
  int trusted = 0, solved = 0;
  for (int t = 0; t < 30; ++t) {
    std::string tag = "tensor " + std::to_string(t);
    MomentTensor tt;
    tt.n = g.uniform(1, 3);
    tt.max_degree = 4;
    int count = g.uniform(1, 8);
    for (int i = 0; i < count; ++i) {
      Exponent idx(tt.n);
      int budget = 4;
      for (auto& a : idx) {
        a = g.uniform(0, budget);
        budget -= a;
      }
      std::shuffle(idx.begin(), idx.end(), g.rng);
      Rational v;
      while (v.is_zero()) v = g.small(4, 3);
      tt.set(idx, v);
    }
    auto keys = support_keys(tt);
    for (const auto& [idx, v] : tt.entries) {
      if (v.is_zero()) continue;
      int hits = 0;
      for (const auto& k : keys) {
        int pos = idx[0] - k.offsets[0];
        bool on = pos >= 0;
        for (int i = 0; i < tt.n; ++i) on = on && idx[i] - k.offsets[i] == pos;
        hits += on;
      }
      if (hits != 1) o.fail(tag + ": support not partitioned");
      unsigned total = 0;
      for (int x : idx) total += x;
      auto d = diagonal_extract(tt, diagonal_key_of(idx));
      int pos = *std::min_element(idx.begin(), idx.end());
      if (d.values[pos] / Rational(multinomial(total, std::vector<unsigned>(idx.begin(), idx.end()))) != v)
        o.fail(tag + ": weighted entry does not unweight");
    }
    auto full = assemble_full(tt, t % 2 ? Parity::Odd : Parity::Even);
    solved += static_cast<int>(full.solutions.size());
    auto re = expand_full(full, 4);
    auto direct = multivariate_expansion(tt, 4);
    for (const auto& e : re.trusted) {
      auto a = re.expansion.find(e);
      auto b = direct.find(e);
      Rational va = a == re.expansion.end() ? Rational() : a->second;
      Rational vb = b == direct.end() ? Rational() : b->second;
      if (va != vb) o.fail(tag + ": reassembled coefficient differs");
    }
    trusted += static_cast<int>(re.trusted.size());
  }
  // Multinomial weights against the factorial formula.
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = 0; b <= 6; ++b)
      for (unsigned c = 0; c <= 3; ++c)
        if (multinomial(a + b + c, {a, b, c}) !=
            oracle::factorial(a + b + c) / (oracle::factorial(a) * oracle::factorial(b) * oracle::factorial(c)))
          o.fail("multinomial weight");
  if (trusted == 0) o.fail("no trusted monomials were compared");
  if (o.ok)
    o.detail = "30 tensors, " + std::to_string(solved) + " diagonals solved, " + std::to_string(trusted) +
               " trusted monomials";
  return o;
}

Outcome indeterminacy() {
  Outcome o;
  int checked = 0;
  for (size_t t = 0; t < g_instances.size(); ++t) {
    const auto& in = g_instances[t];
    std::string tag = "instance " + std::to_string(t);
    auto ab = schur_decompose_ab(in.moments);
    const auto& ml = in.decomposition.atoms;
    Rational pp, pq, pm, pl;
    for (int depth = 0; depth <= in.atoms; ++depth) {
      auto ra = indeterminacy_sums_ab(ab, std::min<int>(depth, ab.size()));
      auto rm = indeterminacy_sums_ml(ml, depth);
      auto fa = oracle::fold_ab(ab, std::min<int>(depth, ab.size()));
      auto fm = oracle::fold_ml(ml, depth);
      if (ra.sum_p != fa.p || ra.sum_q != fa.q) o.fail(tag + ": (a,b) sums differ from the fold");
      if (rm.sum_m != fm.m || rm.sum_l != fm.l) o.fail(tag + ": (m,l) sums differ from the fold");
      if (depth == 0 && !(ra.sum_p.is_zero() && ra.sum_q.is_zero() && rm.sum_m.is_zero() && rm.sum_l.is_zero()))
        o.fail(tag + ": depth-0 sums are not zero");
      if (depth > 0) {
        if (ra.summands_nonnegative && (ra.sum_p < pp || ra.sum_q < pq)) o.fail(tag + ": (a,b) sums decreased");
        if (rm.summands_nonnegative && (rm.sum_m < pm || rm.sum_l < pl)) o.fail(tag + ": (m,l) sums decreased");
      }
      if (depth == in.atoms && rm.verdict != Verdict::Exhausted) o.fail(tag + ": finite fraction not exhausted");
      pp = ra.sum_p;
      pq = ra.sum_q;
      pm = rm.sum_m;
      pl = rm.sum_l;
      ++checked;
    }
  }
  if (g_instances.empty()) o.fail("round-trip instances missing");
  if (o.ok) o.detail = std::to_string(checked) + " partial sums checked";
  return o;
}

template <class E>
bool raises(const std::function<void()>& f, int level = -1) {
  try {
    f();
  } catch (const E& e) {
    return level < 0 || e.level() == level;
  } catch (...) {
    return false;
  }
  return false;
}

Outcome degenerate() {
  Outcome o;
  if (!raises<SingularStep>([] { schur_decompose_ml(seq({1, 0, 0, 0}), Parity::Even); }, 2))
    o.fail("(1,0,0,0) even: expected SingularStep at level 2");
  if (!raises<SingularStep>([] { schur_decompose_ml(seq({2, 3, 5, 9, 17, 33}), Parity::Odd, Mode::Strict); }, 5))
    o.fail("two-atom data, odd strict: expected SingularStep at level 5");
  if (!raises<SingularStep>([] { schur_level_step(ShiftedSequence{3, 0, seq({0, 0, 0})}); }, 3))
    o.fail("zero level 3: expected SingularStep at level 3");
  if (!raises<Truncated>([] { schur_step_ab(seq({0, 1})); })) o.fail("(0,1): expected Truncated");
  if (!raises<Truncated>([] { schur_step_ab(seq({0, 0, 1, 2, 3})); })) o.fail("n1 = 3, 5 moments: expected Truncated");
  if (!raises<Truncated>([] { schur_decompose_ml(seq({0, 1}), Parity::Even); })) o.fail("(0,1) even: expected Truncated");
  if (!raises<NoNormalIndex>([] { schur_decompose_ml(seq({0, 0, 0, 0}), Parity::Even); }))
    o.fail("zeros: expected NoNormalIndex");
  if (!raises<NoNormalIndex>([] { schur_step_ab(seq({0, 0, 0})); })) o.fail("zeros (a,b): expected NoNormalIndex");
  if (o.ok) o.detail = "8 fixtures";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"round-trip exactness", roundtrip},
      {"determinant and series paths agree", path_agreement},
      {"worked-example fixtures", worked_examples},
      {"resolvent identities", resolvent_identities},
      {"normal indices match the rank oracle", hankel_oracle},
      {"multidimensional reassembly", reassembly},
      {"indeterminacy bookkeeping", indeterminacy},
      {"degenerate handling", degenerate},
  };
  int failed = 0, n = 0;
  for (const auto& c : criteria) {
    ++n;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << c.name << " (" << o.detail << ")\n";
    failed += !o.ok;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (n - failed) << "/" << n << "\n";
  return failed ? 1 : 0;
}
