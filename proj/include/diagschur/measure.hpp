#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagschur/multidiag.hpp"

namespace diagschur {

struct MeasureAtom {
  std::vector<Rational> node;
  Rational weight;
};

// Finite atomic measure on the open positive orthant.
class DiscreteMeasure {
 public:
  DiscreteMeasure(int n, std::vector<MeasureAtom> atoms);

  int dimension() const { return n_; }
  const std::vector<MeasureAtom>& atoms() const { return atoms_; }

 private:
  int n_;
  std::vector<MeasureAtom> atoms_;
};

// s_j = sum w t^j, j = 0 .. max_degree (n = 1).
MomentSequence moments(const DiscreteMeasure& m, int max_degree);
// s_alpha = sum w prod t_i^alpha_i with every alpha_i <= max_degree.
MomentTensor moment_tensor(const DiscreteMeasure& m, int max_degree);
// sum w / (t - z) = -sum w t^j z^{-j-1}, one geometric series per atom.
LaurentSeries stieltjes_series(const DiscreteMeasure& m, int order);

struct VerificationReport {
  bool agree = false;
  int levels = 0;
  int compared = 0;
  std::optional<int> first_mismatch;  // coefficient index (1-D) or position in trusted list
  std::string error;                   // library error, if any
  std::vector<DiagonalKey> diagonals;  // n > 1: solved diagonals
};

// moments -> S-fraction -> expansion with the canonical tail -> exact comparison.
// For n = 1 uses s_0 .. s_{2k-1} (even) or s_0 .. s_{2k-2} (odd) for k atoms.
VerificationReport roundtrip_verify(const DiscreteMeasure& m, Parity parity);

}  // namespace diagschur
