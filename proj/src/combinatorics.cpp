#include "diagschur/combinatorics.hpp"

#include <numeric>
#include <string>

#include "diagschur/errors.hpp"

namespace diagschur {

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class multinomial(unsigned total, const std::vector<unsigned>& parts) {
  unsigned long sum = std::accumulate(parts.begin(), parts.end(), 0ul);
  if (sum != total)
    throw InvalidArgument("multinomial parts sum to " + std::to_string(sum) + ", expected " +
                          std::to_string(total));
  mpz_class r = 1, b;
  unsigned running = 0;
  for (unsigned p : parts) {
    running += p;
    mpz_bin_uiui(b.get_mpz_t(), running, p);
    r *= b;
  }
  return r;
}

}  // namespace diagschur
