#pragma once

#include <json.hpp>

#include "diagschur/convergence.hpp"
#include "diagschur/hankel.hpp"
#include "diagschur/measure.hpp"
#include "diagschur/multidiag.hpp"

namespace diagschur::json_io {

using json = nlohmann::json;

// Raised when a JSON document has the wrong shape.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const Rational& r);
json to_json(const Polynomial& p);
json to_json(const LaurentSeries& s);
json to_json(const AtomML& a);
json to_json(const NormalIndexSet& set, const Regularity& reg);
json to_json(const Decomposition& d);
json to_json(const ResolventMatrix& w);
json to_json(const DiagonalSequence& d);
json to_json(const DiagonalSolution& s);
json to_json(const FullSolution& s);
json to_json(const IndeterminacyReport& r);
json to_json(const VerificationReport& r);
json to_json(const Error& e);

Rational parse_rational(const json& j);
Polynomial parse_polynomial(const json& j);
// {"moments": [...]} or a bare array.
MomentSequence parse_moments(const json& j);
MomentTensor parse_tensor(const json& j);
DiscreteMeasure parse_measure(const json& j);
// Output of `schur`: {"parity": ..., "atoms": [...], "key": [...]?}
ContinuedFraction parse_continued_fraction(const json& j);
DiagonalKey parse_key(const json& j);

}  // namespace diagschur::json_io
