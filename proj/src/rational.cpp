#include "diagschur/rational.hpp"

#include <cctype>

#include "diagschur/errors.hpp"

namespace diagschur {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NoNormalIndex: return "NoNormalIndex";
    case ErrorKind::Truncated: return "Truncated";
    case ErrorKind::SingularStep: return "SingularStep";
    case ErrorKind::FormulaInapplicable: return "FormulaInapplicable";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& v) : q_(v) {
  if (q_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InvalidArgument("not a rational number: '" + std::string(whole) + "'");
  mpz_class v(std::string(s), 10);
  return neg ? mpz_class(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);

  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(t.substr(0, slash), text);
    std::string_view d = t.substr(slash + 1);
    if (!all_digits(d)) throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    mpz_class den(std::string(d), 10);
    if (den == 0) throw DivisionByZero("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
  }
  if (auto dot = t.find('.'); dot != std::string_view::npos) {
    std::string_view frac = t.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac))
      throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    std::string_view ip = t.substr(0, dot);
    bool neg = !ip.empty() && ip[0] == '-';
    std::string digits(ip);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    mpz_class whole = parse_integer(digits, text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    mpz_class num = abs(whole) * scale + f;
    if (neg) num = -num;
    return Rational(mpq_class(num, scale));
  }
  return Rational(parse_integer(t, text));
}

std::string Rational::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(mpq_class(n, d));
}

}  // namespace diagschur
