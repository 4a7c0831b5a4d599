#pragma once

#include <array>
#include <optional>
#include <vector>

#include "diagschur/laurent_series.hpp"
#include "diagschur/multipoly.hpp"
#include "diagschur/schur.hpp"

namespace diagschur {

// Offsets (j_1, ..., j_n) of a shifted diagonal; at least one offset is 0.
struct DiagonalKey {
  std::vector<int> offsets;

  int dimension() const { return static_cast<int>(offsets.size()); }
  void validate() const;
  friend bool operator==(const DiagonalKey&, const DiagonalKey&) = default;
  friend auto operator<=>(const DiagonalKey&, const DiagonalKey&) = default;
};

struct ContinuedFraction {
  Parity parity = Parity::Even;
  std::vector<AtomML> atoms;
  std::optional<DiagonalKey> key;
  TailContract contract = TailContract::LittleO1;

  // Odd: every atom but the last carries l; even: every atom does.
  void validate() const;
  // Leading coefficients fixed by the atoms regardless of the admissible tail.
  int interpolation_order() const;
};

ContinuedFraction continued_fraction(const Decomposition& d, std::optional<DiagonalKey> key = {});

// Free parameter at the bottom of the fraction, as a point of the projective
// line: zero, the pole (1/tau = 0), tau itself, or 1/tau.
struct Tail {
  enum class Kind { Zero, Pole, Series, Inverse };
  Kind kind = Kind::Zero;
  LaurentSeries value;

  static Tail zero() { return {Kind::Zero, {}}; }
  static Tail pole() { return {Kind::Pole, {}}; }
  static Tail series(LaurentSeries tau) { return {Kind::Series, std::move(tau)}; }
  static Tail inverse(LaurentSeries inv_tau) { return {Kind::Inverse, std::move(inv_tau)}; }
};

// tau = 0 for even fractions, 1/tau = 0 for odd ones.
Tail canonical_tail(Parity p);
// tau = o(1) (even) or 1/tau = o(z) (odd), read as formal series conditions.
bool admissible(const Tail& t, Parity p);

struct StieltjesPair {
  int index;
  Polynomial P;
  Polynomial Q;
};

// (P_k, Q_k) for k = -1 .. up_to.
std::vector<StieltjesPair> stieltjes_polynomials(const ContinuedFraction& cf, int up_to);

using Matrix2 = std::array<std::array<Polynomial, 2>, 2>;
using MultiMatrix2 = std::array<std::array<MultiPoly, 2>, 2>;

Matrix2 operator*(const Matrix2& a, const Matrix2& b);
MultiMatrix2 operator*(const MultiMatrix2& a, const MultiMatrix2& b);

struct ResolventMatrix {
  Matrix2 core;  // polynomial in the product variable z
  Parity kind = Parity::Even;
  int atoms = 0;
  std::optional<DiagonalKey> key;  // P-row prefactor z_1^{j_1} ... z_n^{j_n}

  Polynomial det() const;
  // A * core in the variables z_1 .. z_n, A = diag(1, prod z_i^{j_i}).
  MultiMatrix2 full() const;
  MultiPoly full_det() const;
};

ResolventMatrix resolvent_matrix(const ContinuedFraction& cf);

// M_1 L_1 ... in the product variable.
Matrix2 factor_product(const ContinuedFraction& cf);
// A M_1 L_1 ... multiplied out in n variables.
MultiMatrix2 full_factor_product(const ContinuedFraction& cf);

struct FactorizationCheck {
  bool ok = true;
  // Smallest atom index (1-based) where W's own atoms differ from cf's.
  std::optional<int> witness;
};

FactorizationCheck resolvent_factorization_check(const ResolventMatrix& w, const ContinuedFraction& cf);
FactorizationCheck resolvent_factorization_check(const ContinuedFraction& cf);
// Atoms recovered from W by peeling L_j and M_j off the right.
std::vector<AtomML> peel_atoms(const ResolventMatrix& w);

// (w11 p + w12 q) / (w21 p + w22 q) for the tail (p : q), expanded to at
// most `order` negative powers.
LaurentSeries moebius_apply(const ResolventMatrix& w, const Tail& tail, int order);
// Bottom-up evaluation of the nested fraction.
LaurentSeries cf_expand(const ContinuedFraction& cf, const Tail& tail, int order);

}  // namespace diagschur
