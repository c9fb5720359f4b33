#include "refab/quasimodular.hpp"

#include <stdexcept>

#include "refab/arith.hpp"

namespace refab {

QMForm eisenstein(long two_j, long order) {
    if (two_j < 2 || two_j % 2 != 0)
        throw std::invalid_argument("eisenstein: weight must be a positive even integer");
    Series s(order);
    for (long a = 1; a <= order; ++a)
        s.set(a, Rat(sigma(static_cast<unsigned>(two_j - 1), a)));
    return {s, two_j};
}

Series d_op(const Series& s) {
    Series out(s.order());
    for (long a = 1; a <= s.order(); ++a) out.set(a, Rat(a) * s[a]);
    return out;
}

Series bar_p_series(long a, long order) {
    if (a < 1) throw std::invalid_argument("bar_p_series: a must be positive");
    Series s(order);
    auto add = [&](long e, const Rat& c) {
        if (e <= order) s.add_to(e, c);
    };
    for (long k : divisors(a).divisors) {
        Rat c(a / k);
        add(a - k, c);
        add(a, Rat(-2) * c);
        add(a + k, c);
    }
    return s;
}

QMForm g_m_direct_bounded(long m, long order, long sum_bound) {
    if (m < 0) throw std::invalid_argument("g_m_direct: m must be non-negative");
    Series total(order);
    for (long a = 1; a <= sum_bound; ++a) {
        Series term = bar_p_series(a, order);
        term.add_to(0, Rat(-1));
        if (term.is_zero()) continue;
        total += Rat(int_pow(Int(a), static_cast<unsigned long>(m))) * term;
    }
    return {total, std::nullopt};
}

QMForm g_m_direct(long m, long order) { return g_m_direct_bounded(m, order, 2 * order); }

QMForm g_m_closed(long m, long order) {
    if (m < 0) throw std::invalid_argument("g_m_closed: m must be non-negative");
    Series total(order);
    for (long two_j = 2; two_j <= m + 1; two_j += 2) {
        Series term = eisenstein(two_j, order).series;
        for (long rep = 0; rep < m + 1 - two_j; ++rep) term = d_op(term);
        total += Rat(binomial(m + 1, two_j)) * term;
    }
    return {Rat(2) * total, std::nullopt};
}

}  // namespace refab
