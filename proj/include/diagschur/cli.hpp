#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagschur::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kInputError = 2 };

// Runs one command. args excludes the program name. Results go to `out` as a
// single JSON line; structured errors go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace diagschur::cli
