#include "cbperm/binomial.hpp"

#include <stdexcept>

namespace cbperm {

mpz_class binomial(long n, long k) {
  mpz_class r = 0;
  if (n < 0 || k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

mpz_class catalan(long n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2 * n, n) / (n + 1);
}

mpz_class pow2(long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  mpz_class r = 1;
  r <<= static_cast<mp_bitcnt_t>(e);
  return r;
}

}  // namespace cbperm
