#ifndef REFAB_QUASIMODULAR_HPP
#define REFAB_QUASIMODULAR_HPP

#include <optional>

#include "refab/series.hpp"

namespace refab {

/* A quasi-modular form given by its x-expansion. The weight tag is pure
 * bookkeeping (set for the Eisenstein series, absent for mixed-weight
 * combinations like the G_m); nothing computes with it. */
struct QMForm {
    Series series;
    std::optional<long> declared_weight;
};

/*       E_{2j}(x) = sum_{a >= 1} sigma_{2j-1}(a) x^a
 * Normalized with constant term 0, which is what every identity here uses;
 * no Bernoulli constant in front. */
QMForm eisenstein(long two_j, long order);

/* D = x d/dx on truncated series: multiplies the x^a coefficient by a. */
Series d_op(const Series& s);

/*       bar(P_a)(x) = sum_{k|a} (a/k) x^{a-k} (1 - 2x^k + x^{2k})
 * truncated at the given order. Constant term 1 for every a; for a > 2N
 * the truncation is identically 1. */
Series bar_p_series(long a, long order);

/*       G_m(x) = sum_{a >= 1} a^m (bar(P_a)(x) - 1)
 * The sum is finite per coefficient: bar(P_a) - 1 vanishes mod x^{i+1} as
 * soon as a > 2i, so summing a up to twice the order is exact. The bounded
 * variant exposes the summation bound so the tail vanishing is testable. */
QMForm g_m_direct(long m, long order);
QMForm g_m_direct_bounded(long m, long order, long sum_bound);

/* The same G_m through its quasi-modular representation
 *       G_m = 2 sum_{2 <= 2j <= m+1} binom(m+1, 2j) D^{m+1-2j} E_{2j}
 * (an empty sum for m = 0, hence the zero series). */
QMForm g_m_closed(long m, long order);

}  // namespace refab

#endif
