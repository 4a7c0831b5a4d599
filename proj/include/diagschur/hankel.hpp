#pragma once

#include <optional>
#include <vector>

#include "diagschur/rational.hpp"

namespace diagschur {

using MomentSequence = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Fraction-free (Bareiss) determinant. Rows are first scaled to integers.
Rational determinant(const RationalMatrix& m);

// D_n = det(s_{i+k})_{i,k<n}; D_0 = 1. Needs 2n-1 moments.
Rational hankel_det(const MomentSequence& s, int n);
// D_n^+ = det(s_{i+k+1})_{i,k<n}; D_0^+ = 1. Needs 2n moments.
Rational shifted_hankel_det(const MomentSequence& s, int n);

struct NormalIndexSet {
  std::vector<int> indices;  // all n with D_n != 0, increasing
  std::vector<int> nu;       // D_n != 0 and D_{n-1}^+ != 0
  std::vector<int> mu;       // D_n != 0 and D_n^+ != 0
  // Normal indices whose D_n^+ needs moments past the truncation. They are
  // never counted as mu and never enter the regularity test.
  std::vector<int> undecidable;
};

NormalIndexSet normal_indices(const MomentSequence& s);

// 0 < nu_1 <= mu_1 < nu_2 <= mu_2 < ... over the decided indices.
bool interlaced(const NormalIndexSet& set);

struct Regularity {
  bool regular = true;
  std::optional<int> witness;  // first normal index with D_n^+ = 0
};

// D_{n_j}^+ != 0 for every decided normal index.
Regularity is_regular(const MomentSequence& s);
// The same property read off the classification: nu_j = mu_j throughout.
bool regular_by_classification(const NormalIndexSet& set);

}  // namespace diagschur
