#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diagschur {

enum class ErrorKind {
  InvalidArgument,
  InsufficientData,
  DivisionByZero,
  NoNormalIndex,
  Truncated,
  SingularStep,
  FormulaInapplicable,
};

std::string_view kind_name(ErrorKind kind);

// Every library failure is an Error. `level` is the Schur level that failed
// (0 when not applicable); `key` is filled in when the failure happened inside
// a diagonal sub-problem.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int level = 0)
      : std::runtime_error(message), kind_(kind), level_(level) {}

  ErrorKind kind() const { return kind_; }
  int level() const { return level_; }
  const std::vector<int>& key() const { return key_; }
  void attach_key(std::vector<int> key) { key_ = std::move(key); }

 private:
  ErrorKind kind_;
  int level_;
  std::vector<int> key_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& m) : Error(ErrorKind::InvalidArgument, m) {}
};

struct InsufficientData : Error {
  InsufficientData(const std::string& m, int required)
      : Error(ErrorKind::InsufficientData, m), required(required) {}
  int required;
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& m, int depth = 0)
      : Error(ErrorKind::DivisionByZero, m, depth) {}
};

struct NoNormalIndex : Error {
  explicit NoNormalIndex(const std::string& m) : Error(ErrorKind::NoNormalIndex, m, 1) {}
};

struct Truncated : Error {
  Truncated(const std::string& m, int level) : Error(ErrorKind::Truncated, m, level) {}
};

struct SingularStep : Error {
  SingularStep(const std::string& m, int level) : Error(ErrorKind::SingularStep, m, level) {}
};

struct FormulaInapplicable : Error {
  FormulaInapplicable(const std::string& m, int level = 0)
      : Error(ErrorKind::FormulaInapplicable, m, level) {}
};

}  // namespace diagschur
