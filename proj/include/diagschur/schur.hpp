#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "diagschur/hankel.hpp"
#include "diagschur/laurent_series.hpp"
#include "diagschur/polynomial.hpp"

namespace diagschur {

enum class Parity { Odd, Even };
// Odd fractions constrain 1/tau = o(z); even ones constrain tau = o(1).
enum class TailContract { InverseLittleOZ, LittleO1 };
enum class Mode { Lenient, Strict };

std::string_view to_string(Parity p);
std::string_view to_string(TailContract c);
Parity parse_parity(std::string_view text);
TailContract contract_for(Parity p);

struct AtomAB {
  Rational b;
  Polynomial a;
};

struct AtomML {
  Polynomial m;
  std::optional<Polynomial> l;  // absent on the last atom of an odd fraction
};

// Level sequence of the algorithm. Odd levels hold s_0, s_1, ... of
// f = -sum s_i z^{-i-1}; even levels hold s_{-1}, s_0, ... of
// g = sum s_i z^{-i-1} (start_offset = -1).
struct ShiftedSequence {
  int level = 1;
  int start_offset = 0;
  std::vector<Rational> values;

  bool odd_level() const { return level % 2 == 1; }
  bool vanishes() const;
  // Element s_i in the level's own indexing (so at(-1) on an even level).
  const Rational& at(int i) const { return values.at(i - start_offset); }
  // Degree gap of the next atom: nu for odd levels (first nonzero is
  // s_{nu-1}), mu for even levels (first nonzero is s_{mu-1}).
  std::optional<int> gap() const;
  // Enough data to extract the next atom.
  bool step_possible() const;
  LaurentSeries series() const;
};

struct LevelStep {
  Polynomial atom;  // m_j on odd levels, l_j on even levels
  ShiftedSequence next;
};

// One half-step by formal series inversion. Throws SingularStep when the
// level vanishes and Truncated when the data cannot fix the atom.
LevelStep schur_level_step(const ShiftedSequence& seq);
// Same half-step through T(.) T(.) = I, solved by toeplitz_solve.
LevelStep schur_level_step_toeplitz(const ShiftedSequence& seq);
// Next level for a given atom: g = 1/f + z m or f' = 1/g - l.
ShiftedSequence recursive_sequence_via_series(const ShiftedSequence& seq, const Polynomial& atom);

struct StepAB {
  AtomAB atom;
  std::vector<Rational> tail;  // s^(1), with f_1 = -sum s^(1)_j z^{-j-1}
};

StepAB schur_step_ab(const MomentSequence& s);
std::vector<Rational> recursive_sequence_via_series(const MomentSequence& s, const AtomAB& atom);
// Repeated (a, b) steps while data allows.
std::vector<AtomAB> schur_decompose_ab(const MomentSequence& s);

enum class StopReason {
  Exhausted,   // data ran out before the next atom was fixed
  Terminated,  // the remaining level vanishes on all available data
};

struct Decomposition {
  Parity parity = Parity::Even;
  std::vector<AtomML> atoms;
  // levels[0] is the input; levels[k] is the sequence after k half-steps.
  std::vector<ShiftedSequence> levels;
  int interpolated = 0;  // leading moments reproduced by the fraction
  StopReason stop = StopReason::Exhausted;
  TailContract contract = TailContract::LittleO1;

  int level_count() const { return static_cast<int>(atoms.size()); }
};

// S-fraction for MP(s, 2 nu_N - 2) (odd) or MP(s, 2 mu_N - 1) (even).
// Lenient mode uses the longest prefix of complete levels of the requested
// parity; strict mode demands the input be exactly such a truncation.
Decomposition schur_decompose_ml(const MomentSequence& s, Parity parity, Mode mode = Mode::Lenient);

// Determinant formulas, kept as an independent cross-check of the series path.
Polynomial a0_via_determinant(const MomentSequence& s, int n1);
std::vector<Rational> recursive_sequence_via_determinant(const MomentSequence& s, int n1);
Polynomial m_via_determinant(const ShiftedSequence& odd);
Polynomial l_via_determinant(const ShiftedSequence& odd, const ShiftedSequence& even);
std::vector<AtomML> atoms_via_determinants(const Decomposition& d);

}  // namespace diagschur
