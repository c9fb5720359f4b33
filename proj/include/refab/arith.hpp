#ifndef REFAB_ARITH_HPP
#define REFAB_ARITH_HPP

#include <vector>

#include "refab/rational.hpp"

namespace refab {

/* Sorted divisor list of a positive integer; first entry is 1, last is a. */
struct DivisorProfile {
    long a = 1;
    std::vector<long> divisors;
};

/* Complete sorted divisor list by trial division up to sqrt(a).
 * Inputs stay desk-scale (a <= ~1e5), so no sieve is kept. */
DivisorProfile divisors(long a);

/* sigma_k(a) = sum of d^k over divisors d of a. Values overflow 64 bits
 * already for sigma_9 at a ~ 120, hence the big-integer result. */
Int sigma(unsigned k, long a);

/* Euler totient, phi(k) = k * prod_{p|k} (1 - 1/p). */
Int euler_phi(long k);

Int factorial(long n);

/* Binomial through the falling factorial: m(m-1)...(m-k+1)/k!. Defined for
 * any integer m; 0 when k < 0, and 0 for 0 <= m < k, matching both the
 * combinatorial count and the Hilbert-polynomial evaluation. */
Int binomial(const Int& m, long k);
Int binomial(long m, long k);

}  // namespace refab

#endif
