#pragma once

#include <string_view>
#include <vector>

#include "diagschur/schur.hpp"

namespace diagschur {

// Partial sums only: nothing here asserts (in)determinacy of the full problem.
enum class Verdict {
  BoundedSoFar,  // last summand smaller than the one before
  Growing,       // last summand not smaller than the one before
  Exhausted,     // the fraction has no more levels to sum over
};

std::string_view to_string(Verdict v);

struct IndeterminacyReport {
  enum class Criterion { AB, ML };
  Criterion criterion = Criterion::AB;
  int depth = 0;
  int available = 0;
  // (a, b) criterion: sum |P_i(0)|^2 / b~_i and sum |Q_i(0)|^2 / b~_i.
  Rational sum_p, sum_q;
  // (m, l) criterion: sum m_i(0) and sum l_i.
  Rational sum_m, sum_l;
  Verdict verdict = Verdict::BoundedSoFar;
  bool applicable = true;
  bool summands_nonnegative = true;
  bool positive_l = true;  // only meaningful for the (m, l) criterion
  std::string note;
};

// P_{k+1} = a_k P_k - b_k P_{k-1} with P_{-1} = 0, P_0 = 1; Q likewise with
// Q_{-1} = 1, Q_0 = 0, so Q_k / P_k is the k-th convergent.
struct ABPolynomials {
  std::vector<Polynomial> P, Q;  // indices 0 .. atoms.size()
};
ABPolynomials ab_polynomials(const std::vector<AtomAB>& atoms);

IndeterminacyReport indeterminacy_sums_ab(const std::vector<AtomAB>& atoms, int depth);
IndeterminacyReport indeterminacy_sums_ml(const std::vector<AtomML>& atoms, int depth);

}  // namespace diagschur
