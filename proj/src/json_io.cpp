#include "diagschur/json_io.hpp"

#include <string>

#include "diagschur/errors.hpp"

namespace diagschur::json_io {

json to_json(const Rational& r) { return r.str(); }

json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

json to_json(const LaurentSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.negative_coefficients()) coeffs.push_back(c.str());
  json j = {{"coeffs", coeffs}, {"order", s.order()}};
  if (!s.polynomial_part().is_zero()) j["poly"] = to_json(s.polynomial_part());
  return j;
}

json to_json(const AtomML& a) {
  json j = {{"m", to_json(a.m)}};
  if (a.l) j["l"] = to_json(*a.l);
  return j;
}

json to_json(const NormalIndexSet& set, const Regularity& reg) {
  json j = {{"indices", set.indices}, {"nu", set.nu}, {"mu", set.mu}, {"regular", reg.regular}};
  if (!set.undecidable.empty()) j["undecidable"] = set.undecidable;
  if (reg.witness) j["witness"] = *reg.witness;
  return j;
}

json to_json(const Decomposition& d) {
  json atoms = json::array();
  for (const auto& a : d.atoms) atoms.push_back(to_json(a));
  return {{"parity", to_string(d.parity)},
          {"atoms", atoms},
          {"levels", d.level_count()},
          {"tail_contract", to_string(d.contract)},
          {"interpolated", d.interpolated},
          {"stop", d.stop == StopReason::Terminated ? "terminated" : "exhausted"}};
}

json to_json(const ResolventMatrix& w) {
  json m = json::array();
  for (int i = 0; i < 2; ++i) m.push_back(json::array({to_json(w.core[i][0]), to_json(w.core[i][1])}));
  Polynomial det = w.det();
  json j = {{"W", m}, {"parity", to_string(w.kind)}, {"atoms", w.atoms}};
  j["det"] = det.is_constant() ? json(det.coeff(0).str()) : to_json(det);
  if (w.key) {
    j["key"] = w.key->offsets;
    json terms = json::array();
    for (const auto& [e, c] : w.full_det().terms()) terms.push_back({{"exponents", e}, {"coeff", c.str()}});
    j["det_full"] = terms;
  }
  return j;
}

json to_json(const DiagonalSequence& d) {
  json v = json::array();
  for (const auto& x : d.values) v.push_back(x.str());
  return {{"key", d.key.offsets}, {"moments", v}};
}

json to_json(const DiagonalSolution& s) {
  json j = to_json(s.decomposition);
  j["key"] = s.key.offsets;
  json v = json::array();
  for (const auto& x : s.sequence) v.push_back(x.str());
  j["moments"] = v;
  return j;
}

json to_json(const FullSolution& s) {
  json sols = json::array();
  for (const auto& d : s.solutions) sols.push_back(to_json(d));
  json fails = json::array();
  for (const auto& f : s.failures)
    fails.push_back({{"key", f.key.offsets}, {"error", kind_name(f.kind)}, {"level", f.level}, {"message", f.message}});
  return {{"n", s.n}, {"max_degree", s.max_degree}, {"diagonals", sols}, {"failures", fails}};
}

json to_json(const IndeterminacyReport& r) {
  json j = {{"depth", r.depth},
            {"available", r.available},
            {"verdict", to_string(r.verdict)},
            {"applicable", r.applicable},
            {"summands_nonnegative", r.summands_nonnegative}};
  if (r.criterion == IndeterminacyReport::Criterion::AB) {
    j["sumP"] = r.sum_p.str();
    j["sumQ"] = r.sum_q.str();
  } else {
    j["sumM"] = r.sum_m.str();
    j["sumL"] = r.sum_l.str();
    j["positive_l"] = r.positive_l;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const VerificationReport& r) {
  json j = {{"agree", r.agree}, {"levels", r.levels}, {"compared", r.compared}};
  if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.diagonals.empty()) {
    json keys = json::array();
    for (const auto& k : r.diagonals) keys.push_back(k.offsets);
    j["diagonals"] = keys;
  }
  return j;
}

json to_json(const Error& e) {
  json j = {{"error", kind_name(e.kind())}, {"message", e.what()}};
  if (e.level() != 0) j["level"] = e.level();
  if (!e.key().empty()) j["key"] = e.key();
  if (auto* d = dynamic_cast<const InsufficientData*>(&e)) j["required"] = d->required;
  return j;
}

namespace {

const json& member(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
  return j.at(name);
}

int nonnegative_int(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw FormatError(std::string(what) + " must be a nonnegative integer");
  return j.get<int>();
}

std::vector<int> index_list(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(nonnegative_int(x, what));
  return out;
}

}  // namespace

Rational parse_rational(const json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw FormatError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float())
    throw FormatError("non-integer numbers must be written as strings (\"p/q\" or \"1.25\") to stay exact");
  throw FormatError("expected a rational, got " + j.dump());
}

Polynomial parse_polynomial(const json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be an array of coefficients");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(parse_rational(x));
  return Polynomial(std::move(c));
}

MomentSequence parse_moments(const json& j) {
  const json& arr = j.is_array() ? j : member(j, "moments");
  if (!arr.is_array()) throw FormatError("moments must be an array");
  MomentSequence s;
  for (const auto& x : arr) s.push_back(parse_rational(x));
  if (s.empty()) throw FormatError("moment sequence is empty");
  return s;
}

MomentTensor parse_tensor(const json& j) {
  MomentTensor t;
  t.n = nonnegative_int(member(j, "n"), "n");
  t.max_degree = nonnegative_int(member(j, "max_degree"), "max_degree");
  const json& entries = member(j, "entries");
  if (!entries.is_array()) throw FormatError("entries must be an array");
  for (const auto& e : entries) {
    std::vector<int> idx = index_list(member(e, "idx"), "idx");
    if (static_cast<int>(idx.size()) != t.n) throw FormatError("idx has the wrong dimension");
    for (int i : idx)
      if (i > t.max_degree) throw FormatError("idx exceeds max_degree");
    t.set(idx, parse_rational(member(e, "val")));
  }
  if (t.n < 1) throw FormatError("n must be at least 1");
  return t;
}

DiscreteMeasure parse_measure(const json& j) {
  int n = nonnegative_int(member(j, "n"), "n");
  const json& atoms = member(j, "atoms");
  if (!atoms.is_array()) throw FormatError("atoms must be an array");
  std::vector<MeasureAtom> out;
  for (const auto& a : atoms) {
    MeasureAtom m;
    const json& node = member(a, "node");
    if (!node.is_array()) throw FormatError("node must be an array");
    for (const auto& c : node) m.node.push_back(parse_rational(c));
    m.weight = parse_rational(member(a, "weight"));
    out.push_back(std::move(m));
  }
  try {
    return DiscreteMeasure(n, std::move(out));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

DiagonalKey parse_key(const json& j) {
  DiagonalKey k{index_list(j, "key")};
  try {
    k.validate();
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  return k;
}

ContinuedFraction parse_continued_fraction(const json& j) {
  ContinuedFraction cf;
  const json& p = member(j, "parity");
  if (!p.is_string()) throw FormatError("parity must be a string");
  try {
    cf.parity = parse_parity(p.get<std::string>());
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  cf.contract = contract_for(cf.parity);
  const json& atoms = member(j, "atoms");
  if (!atoms.is_array()) throw FormatError("atoms must be an array");
  for (const auto& a : atoms) {
    AtomML atom;
    atom.m = parse_polynomial(member(a, "m"));
    if (a.contains("l")) atom.l = parse_polynomial(a.at("l"));
    cf.atoms.push_back(std::move(atom));
  }
  if (j.contains("key")) cf.key = parse_key(j.at("key"));
  try {
    cf.validate();
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  return cf;
}

}  // namespace diagschur::json_io
