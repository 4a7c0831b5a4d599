#include "diagschur/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "diagschur/errors.hpp"
#include "diagschur/json_io.hpp"

namespace diagschur::cli {

namespace {

using json_io::json;

struct InputError : std::runtime_error {
  explicit InputError(const std::string& m, json extra = json::object())
      : std::runtime_error(m), extra(std::move(extra)) {}
  json extra;
};

struct Options {
  std::string input = "-";
  std::string output;
  std::string parity = "even";
  bool strict = false;
  std::vector<int> key;
  int depth = -1;
  int order = -1;
  std::string measure;
};

bool verbose() {
  const char* v = std::getenv("DIAGSCHUR_VERBOSE");
  return v && *v && std::string(v) != "0";
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t pos = e.byte == 0 ? 0 : e.byte - 1;
    pos = std::min(pos, text.size());
    int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
    size_t nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    int column = static_cast<int>(nl == std::string::npos || pos == 0 ? pos + 1 : pos - nl);
    throw InputError("malformed JSON", {{"line", line}, {"column", column}, {"detail", e.what()}});
  }
}

std::optional<DiagonalKey> key_option(const Options& o, const json& doc) {
  if (!o.key.empty()) return json_io::parse_key(o.key);
  if (doc.is_object() && doc.contains("key")) return json_io::parse_key(doc.at("key"));
  return std::nullopt;
}

Mode mode_of(const Options& o) { return o.strict ? Mode::Strict : Mode::Lenient; }

// A document with "atoms" is a fraction; anything else is a moment sequence
// decomposed with the requested parity.
ContinuedFraction fraction_from(const json& doc, const Options& o) {
  if (doc.is_object() && doc.contains("atoms")) {
    ContinuedFraction cf = json_io::parse_continued_fraction(doc);
    if (auto k = key_option(o, doc)) cf.key = k;
    return cf;
  }
  MomentSequence s = json_io::parse_moments(doc);
  return continued_fraction(schur_decompose_ml(s, parse_parity(o.parity), mode_of(o)), key_option(o, doc));
}

json cmd_indices(const json& doc, const Options&) {
  MomentSequence s = json_io::parse_moments(doc);
  return json_io::to_json(normal_indices(s), is_regular(s));
}

json schur_one(const json& doc, const Options& o) {
  MomentSequence s = json_io::parse_moments(doc);
  json out = json_io::to_json(schur_decompose_ml(s, parse_parity(o.parity), mode_of(o)));
  if (auto k = key_option(o, doc)) out["key"] = k->offsets;
  return out;
}

json cmd_schur(const json& doc, const Options& o) {
  if (!(doc.is_object() && doc.contains("diagonals"))) return schur_one(doc, o);
  const json& diags = doc.at("diagonals");
  if (!diags.is_array()) throw json_io::FormatError("diagonals must be an array");
  json results = json::array();
  for (const auto& d : diags) {
    try {
      results.push_back(schur_one(d, o));
    } catch (const Error& e) {
      json failed = {{"failure", json_io::to_json(e)}};
      if (d.contains("key")) failed["key"] = d.at("key");
      results.push_back(failed);
    }
  }
  return {{"diagonals", results}};
}

json cmd_resolvent(const json& doc, const Options& o) {
  ContinuedFraction cf = fraction_from(doc, o);
  ResolventMatrix w = resolvent_matrix(cf);
  json out = json_io::to_json(w);
  out["factorization"] = resolvent_factorization_check(w, cf).ok;
  return out;
}

json cmd_expand(const json& doc, const Options& o) {
  ContinuedFraction cf = fraction_from(doc, o);
  int order = o.order;
  if (order < 0) {
    order = std::max(1, cf.interpolation_order());
    if (!(doc.is_object() && doc.contains("atoms"))) order = static_cast<int>(json_io::parse_moments(doc).size());
  }
  LaurentSeries f = cf_expand(cf, canonical_tail(cf.parity), order);
  json out = {{"series", json_io::to_json(f)}, {"parity", to_string(cf.parity)},
              {"interpolation_order", cf.interpolation_order()}};
  if (cf.key) out["key"] = cf.key->offsets;
  return out;
}

json cmd_decompose(const json& doc, const Options& o) {
  MomentTensor t = json_io::parse_tensor(doc);
  std::vector<DiagonalKey> keys;
  if (!o.key.empty()) keys.push_back(json_io::parse_key(o.key));
  else keys = support_keys(t);
  json diags = json::array();
  for (const auto& k : keys) {
    if (k.dimension() != t.n) throw json_io::FormatError("key has the wrong dimension");
    json d = json_io::to_json(diagonal_extract(t, k));
    d["support_only"] = diagonal_support_check(t, k);
    diags.push_back(d);
  }
  return {{"n", t.n}, {"max_degree", t.max_degree}, {"diagonals", diags}};
}

json cmd_solve(const json& doc, const Options& o) {
  MomentTensor t = json_io::parse_tensor(doc);
  FullSolution full = assemble_full(t, parse_parity(o.parity));
  Reassembly re = expand_full(full, t.max_degree);
  MonomialMap direct = multivariate_expansion(t, t.max_degree);
  bool agree = true;
  for (const auto& e : re.trusted) {
    auto a = re.expansion.find(e);
    auto b = direct.find(e);
    Rational va = a == re.expansion.end() ? Rational() : a->second;
    Rational vb = b == direct.end() ? Rational() : b->second;
    if (va != vb) agree = false;
  }
  json out = json_io::to_json(full);
  out["reassembly"] = {{"trusted", re.trusted.size()}, {"agree", agree}};
  return out;
}

json cmd_indeterminacy(const json& doc, const Options& o) {
  MomentSequence s = json_io::parse_moments(doc);
  std::vector<AtomAB> ab = schur_decompose_ab(s);
  int d_ab = o.depth >= 0 ? o.depth : static_cast<int>(ab.size());
  json out = {{"ab", json_io::to_json(indeterminacy_sums_ab(ab, d_ab))}};
  try {
    Decomposition d = schur_decompose_ml(s, Parity::Even, Mode::Lenient);
    int d_ml = o.depth >= 0 ? o.depth : d.level_count();
    out["ml"] = json_io::to_json(indeterminacy_sums_ml(d.atoms, d_ml));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw;
    out["ml"] = {{"applicable", false}, {"failure", json_io::to_json(e)}};
  }
  return out;
}

json cmd_verify(const json& doc, const Options& o) {
  DiscreteMeasure m = json_io::parse_measure(doc);
  return json_io::to_json(roundtrip_verify(m, parse_parity(o.parity)));
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "JSON input file, '-' for stdin")->capture_default_str();
  sub->add_option("-o,--output", o.output, "write the JSON result to this file");
}

void add_parity(CLI::App* sub, Options& o) {
  sub->add_option("--parity", o.parity, "odd or even truncation")
      ->check(CLI::IsMember({"odd", "even"}))
      ->capture_default_str();
}

void add_key(CLI::App* sub, Options& o) {
  sub->add_option("--key", o.key, "diagonal key, e.g. 1,0")->delimiter(',')->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact diagonal Schur algorithm for Stieltjes-type moment problems", "diagschur"};
  app.require_subcommand(1, 1);

  auto* indices = app.add_subcommand("indices", "normal indices, nu/mu classification and regularity");
  add_common(indices, o);

  auto* schur = app.add_subcommand("schur", "(m, l) atoms of the S-fraction");
  add_common(schur, o);
  add_parity(schur, o);
  add_key(schur, o);
  schur->add_flag("--strict", o.strict, "require an exact odd/even truncation");

  auto* resolvent = app.add_subcommand("resolvent", "resolvent matrix W and its factorization check");
  add_common(resolvent, o);
  add_parity(resolvent, o);
  add_key(resolvent, o);
  resolvent->add_flag("--strict", o.strict, "require an exact odd/even truncation");

  auto* expand = app.add_subcommand("expand", "expand the fraction with the canonical tail");
  add_common(expand, o);
  add_parity(expand, o);
  expand->add_option("--order", o.order, "number of negative powers")->check(CLI::PositiveNumber);

  auto* decompose = app.add_subcommand("decompose", "diagonal sequences of a moment tensor");
  add_common(decompose, o);
  add_key(decompose, o);

  auto* solve = app.add_subcommand("solve", "solve every diagonal of a moment tensor");
  add_common(solve, o);
  add_parity(solve, o);

  auto* indeterminacy = app.add_subcommand("indeterminacy", "partial sums of the indeterminacy criteria");
  add_common(indeterminacy, o);
  indeterminacy->add_option("--depth", o.depth, "number of levels to sum")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "round-trip a discrete measure through the algorithm");
  add_common(verify, o);
  add_parity(verify, o);
  verify->add_option("--measure", o.measure, "measure JSON file (default: the input)");

  auto fail = [&](int code, json body) {
    err << body.dump() << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(kInputError, {{"error", "UsageError"}, {"message", e.what()}});
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    std::string source = name == "verify" && !o.measure.empty() ? o.measure : o.input;
    std::string text = read_source(source, in);
    if (verbose()) err << json({{"debug", name + ": read " + std::to_string(text.size()) + " bytes"}}).dump() << "\n";
    json doc = parse_document(text);

    json result;
    if (name == "indices") result = cmd_indices(doc, o);
    else if (name == "schur") result = cmd_schur(doc, o);
    else if (name == "resolvent") result = cmd_resolvent(doc, o);
    else if (name == "expand") result = cmd_expand(doc, o);
    else if (name == "decompose") result = cmd_decompose(doc, o);
    else if (name == "solve") result = cmd_solve(doc, o);
    else if (name == "indeterminacy") result = cmd_indeterminacy(doc, o);
    else result = cmd_verify(doc, o);

    if (o.output.empty()) {
      out << result.dump() << "\n";
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) throw InputError("cannot write '" + o.output + "'");
      f << result.dump() << "\n";
    }
    return kOk;
  } catch (const InputError& e) {
    json body = {{"error", "InputError"}, {"message", e.what()}};
    body.update(e.extra);
    return fail(kInputError, body);
  } catch (const json_io::FormatError& e) {
    return fail(kInputError, {{"error", "FormatError"}, {"message", e.what()}});
  } catch (const Error& e) {
    return fail(kDomainError, json_io::to_json(e));
  } catch (const std::exception& e) {
    return fail(kDomainError, {{"error", "InternalError"}, {"message", e.what()}});
  }
}

}  // namespace diagschur::cli
