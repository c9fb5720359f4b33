#include "refab/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace refab {

DivisorProfile divisors(long a) {
    if (a <= 0) throw std::invalid_argument("divisors: argument must be positive");
    DivisorProfile out;
    out.a = a;
    std::vector<long> high;
    for (long d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.divisors.push_back(d);
        if (d != a / d) high.push_back(a / d);
    }
    out.divisors.insert(out.divisors.end(), high.rbegin(), high.rend());
    return out;
}

Int sigma(unsigned k, long a) {
    if (a <= 0) throw std::invalid_argument("sigma: argument must be positive");
    Int s = 0;
    for (long d : divisors(a).divisors) s += int_pow(Int(d), k);
    return s;
}

Int euler_phi(long k) {
    if (k <= 0) throw std::invalid_argument("euler_phi: argument must be positive");
    long result = k, m = k;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return Int(result);
}

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(const Int& m, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long t = 0; t < k; ++t) num *= m - t;
    return num / factorial(k);
}

Int binomial(long m, long k) { return binomial(Int(m), k); }

}  // namespace refab
