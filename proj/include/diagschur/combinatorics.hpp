#pragma once

#include <gmpxx.h>

#include <vector>

namespace diagschur {

mpz_class factorial(unsigned n);

// total! / prod parts[i]!, computed as a product of binomials.
// Throws InvalidArgument when the parts do not sum to total.
mpz_class multinomial(unsigned total, const std::vector<unsigned>& parts);

}  // namespace diagschur
