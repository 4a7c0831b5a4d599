#pragma once

#include <map>
#include <string>
#include <vector>

#include "diagschur/continued_fraction.hpp"
#include "diagschur/errors.hpp"

namespace diagschur {

// Sparse moment tensor; absent entries are zero. max_degree bounds every
// coordinate of the known multi-indices.
struct MomentTensor {
  int n = 1;
  std::map<Exponent, Rational> entries;
  int max_degree = 0;

  Rational at(const Exponent& idx) const;
  void set(const Exponent& idx, const Rational& v);
  void validate() const;
};

struct DiagonalSequence {
  DiagonalKey key;
  std::vector<Rational> values;  // weighted moments along key + j(1, ..., 1)
};

// The diagonal through `idx`: key = idx - min(idx), position min(idx).
DiagonalKey diagonal_key_of(const Exponent& idx);
DiagonalSequence diagonal_extract(const MomentTensor& t, const DiagonalKey& key);
bool diagonal_support_check(const MomentTensor& t, const DiagonalKey& key);

// Coefficient of 1 / (z_1^{a_1+1} ... z_n^{a_n+1}) for |a| <= order, keyed
// by the exponents (a_1+1, ..., a_n+1). Zero coefficients are omitted.
using MonomialMap = std::map<Exponent, Rational>;
MonomialMap multivariate_expansion(const MomentTensor& t, int order);

struct DiagonalSolution {
  DiagonalKey key;
  std::vector<Rational> sequence;
  Decomposition decomposition;
  ContinuedFraction cf;
};

DiagonalSolution solve_diagonal(const MomentTensor& t, const DiagonalKey& key, Parity parity,
                                Mode mode = Mode::Lenient);

struct DiagonalFailure {
  DiagonalKey key;
  ErrorKind kind;
  int level;
  std::string message;
};

struct FullSolution {
  int n = 1;
  int max_degree = 0;
  std::vector<DiagonalSolution> solutions;
  std::vector<DiagonalFailure> failures;
};

// Keys of every diagonal meeting the support, in increasing order.
std::vector<DiagonalKey> support_keys(const MomentTensor& t);
FullSolution assemble_full(const MomentTensor& t, Parity parity);

struct Reassembly {
  MonomialMap expansion;     // sum over solved diagonals, prefactors applied
  std::vector<Exponent> trusted;  // monomials the solutions pin down exactly
};

// Expansion of the formal sum of the diagonal solutions (canonical tails),
// restricted to total degree <= order.
Reassembly expand_full(const FullSolution& s, int order);

}  // namespace diagschur
