#pragma once

#include <gmpxx.h>

namespace cbperm {

/// C(n, k) with the convention C(n, k) = 0 when k < 0, k > n or n < 0.
mpz_class binomial(long n, long k);

/// Catalan(n) = C(2n, n) / (n + 1).
mpz_class catalan(long n);

mpz_class pow2(long e);

}  // namespace cbperm
