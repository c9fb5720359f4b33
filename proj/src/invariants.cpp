#include "refab/invariants.hpp"

#include <numeric>
#include <stdexcept>

#include "refab/arith.hpp"
#include "refab/errors.hpp"

namespace refab {

Polarization::Polarization(long r_, long m_) : r(r_), m(m_) {
    if (r < 1 || m < 1) throw std::invalid_argument("Polarization: r and m must be positive");
}

Polarization Polarization::from_matrix(long a, long b, long c, long d) {
    long det = a * d - b * c;
    if (det <= 0) throw std::invalid_argument("Polarization::from_matrix: determinant must be positive");
    long r = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::gcd(std::abs(c), std::abs(d)));
    // every entry is divisible by r, so r^2 divides the determinant
    return Polarization(r, det / (r * r));
}

VertexData::VertexData(long g_, long delta_, std::vector<long> mults_)
    : g(g_), delta(delta_), mults(std::move(mults_)) {
    if (g < 2) throw std::invalid_argument("VertexData: genus must be >= 2");
    if (delta < 1) throw std::invalid_argument("VertexData: delta must be positive");
    if (static_cast<long>(mults.size()) != 2 * g - 2)
        throw std::invalid_argument("VertexData: need exactly 2g-2 vertex multiplicities");
    for (long mv : mults)
        if (mv < 1) throw std::invalid_argument("VertexData: vertex multiplicities must be positive");
}

LaurentPoly p_laurent(long a) {
    if (a < 1) throw std::invalid_argument("p_laurent: a must be positive");
    LaurentPoly p;
    for (long k : divisors(a).divisors) {
        Rat c(a / k);
        p += LaurentPoly::monomial(Rat(k), c);
        p += LaurentPoly::monomial(Rat(0), Rat(-2) * c);
        p += LaurentPoly::monomial(Rat(-k), c);
    }
    return p;
}

LaurentPoly refined_multiplicity_raw(const VertexData& v) {
    LaurentPoly total;
    for (long k : divisors(v.delta).divisors) {
        // phi(k) k^{2g-2} prod_V (q^{m_V/2k} - q^{-m_V/2k})
        Rat scale(Int(euler_phi(k) * int_pow(Int(k), static_cast<unsigned long>(2 * v.g - 2))));
        LaurentPoly prod = LaurentPoly::constant(scale);
        for (long mv : v.mults) {
            LaurentPoly factor = LaurentPoly::monomial(Rat(mv, 2 * k), Rat(1)) -
                                 LaurentPoly::monomial(Rat(-mv, 2 * k), Rat(1));
            prod = prod * factor;
        }
        total += prod;
    }
    return total;
}

LaurentPoly refined_multiplicity(const VertexData& v) {
    LaurentPoly m = refined_multiplicity_raw(v);
    if (!m.integral_exponents())
        throw non_integral_error(
            "refined_multiplicity: fractional exponents survive the sum; "
            "vertex multiplicities are inconsistent with delta");
    return m;
}

namespace {

void compositions_rec(long n, long parts, std::vector<long>& acc,
                      const std::function<void(const std::vector<long>&)>& fn) {
    if (parts == 1) {
        acc.push_back(n);
        fn(acc);
        acc.pop_back();
        return;
    }
    for (long a = 1; a <= n - (parts - 1); ++a) {
        acc.push_back(a);
        compositions_rec(n - a, parts - 1, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

void for_each_composition(long n, long parts,
                          const std::function<void(const std::vector<long>&)>& fn) {
    if (parts < 1) throw std::invalid_argument("for_each_composition: parts must be >= 1");
    if (n < parts) return;
    std::vector<long> acc;
    acc.reserve(static_cast<std::size_t>(parts));
    compositions_rec(n, parts, acc, fn);
}

LaurentPoly bg_primitive(long g, long n, BgMethod method) {
    if (g < 2) throw std::invalid_argument("bg_primitive: genus must be >= 2");
    if (n < 1) throw std::invalid_argument("bg_primitive: n must be positive");
    if (n < g - 1) return LaurentPoly();  // empty composition set

    std::vector<LaurentPoly> p_of(static_cast<std::size_t>(n) + 1);
    for (long a = 1; a <= n; ++a) p_of[static_cast<std::size_t>(a)] = p_laurent(a);

    LaurentPoly sum;
    if (method == BgMethod::oracle) {
        for_each_composition(n, g - 1, [&](const std::vector<long>& comp) {
            LaurentPoly prod = LaurentPoly::constant(Rat(1));
            for (long a : comp) prod = prod * p_of[static_cast<std::size_t>(a)];
            sum += prod;
        });
    } else {
        /* Coefficient of t^n in (sum_a P_a t^a)^{g-1}: iterated convolution
         * on vectors indexed by the t-exponent, truncated at t^n. */
        std::vector<LaurentPoly> pow(static_cast<std::size_t>(n) + 1);
        pow[0] = LaurentPoly::constant(Rat(1));
        for (long rep = 0; rep < g - 1; ++rep) {
            std::vector<LaurentPoly> next(static_cast<std::size_t>(n) + 1);
            for (long i = 0; i <= n; ++i) {
                if (pow[static_cast<std::size_t>(i)].is_zero()) continue;
                for (long a = 1; i + a <= n; ++a)
                    next[static_cast<std::size_t>(i + a)] +=
                        pow[static_cast<std::size_t>(i)] * p_of[static_cast<std::size_t>(a)];
            }
            pow = std::move(next);
        }
        sum = pow[static_cast<std::size_t>(n)];
    }
    return Rat(g) * sum;
}

LaurentPoly bg_class(long g, const Polarization& B, BgMethod method) {
    if (g < 2) throw std::invalid_argument("bg_class: genus must be >= 2");
    long D = B.det();
    LaurentPoly total;
    for (long k : divisors(B.r).divisors) {
        Rat scale(int_pow(Int(k), static_cast<unsigned long>(2 * g - 1)));
        LaurentPoly part = bg_primitive(g, D / (k * k), method);
        if (part.is_zero()) continue;
        total += scale * part.subst_power(k);
    }
    return total;
}

LaurentPoly bg_star(long g, const Polarization& B, BgMethod method) {
    if (g < 2) throw std::invalid_argument("bg_star: genus must be >= 2");
    return Rat(B.det(), g * (g - 1)) * bg_class(g, B, method);
}

}  // namespace refab
