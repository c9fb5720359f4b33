#ifndef REFAB_ASYMPTOTICS_HPP
#define REFAB_ASYMPTOTICS_HPP

#include <vector>

#include "refab/invariants.hpp"
#include "refab/npoly.hpp"
#include "refab/series.hpp"

namespace refab {

/* One monomial a_1^{m_1} ... a_s^{m_s} of a Hilbert polynomial expansion,
 * with its coefficient as a polynomial in n. After summation over the a_j
 * each factor a_j^{m_j} turns into G_{m_j}(x). */
struct MultiIndexTerm {
    long s = 1;
    std::vector<long> exponents;
    NPoly coeff;
};

/* bar(BG*_{g,n})(x) mod x^{imax+1}: coefficient of t^n in
 * (sum_{a>=1} bar(P_a) t^a)^{g-1}, scaled by n/(g-1). The t-convolution is
 * truncated at t^n and every Series at order imax, which is what makes the
 * large-n sampling affordable. */
Series bg_bar_star_series(long g, long n, long imax);

/* The codegree-i coefficient of bar(BG*_{g,n}) as a polynomial in n,
 * recovered by sampling past the stabilization threshold
 * n0 = 2(g-1) i + g and interpolating with degree bound g-1. One sample
 * beyond the fit verifies the polynomial; a mismatch means the threshold
 * was optimistic, so it doubles and the fit reruns (a few retries, then
 * stabilization_error). `safety` bumps the initial threshold. */
NPoly q_poly_interpolated(long g, long i, long safety = 0);

/* Expansion of H_m(n - 1 - a_1 - ... - a_s), with H_m(y) = binom(y, m), as
 * a polynomial in a_1..a_s with NPoly coefficients. The plain variant keeps
 * only monomials of degree >= 1 in every a_j (the others are killed by
 * G_0 = 0 after summation); the full variant keeps everything, so tests can
 * confirm the dropped terms really contribute nothing. */
std::vector<MultiIndexTerm> hilbert_expand(long m, long s);
std::vector<MultiIndexTerm> hilbert_expand_full(long m, long s);

/* The asymptotic invariant in closed form:
 *
 *   AR*_g = binom(n, g-1)
 *         + n/(g-1) sum_{s=1}^{floor((g-2)/2)} binom(g-1, s)
 *                   sum_terms coeff(n) G_{m_1} ... G_{m_s}
 *
 * stored codegree by codegree as polynomials in n. With
 * include_zero_exponent_terms the sum also carries the m_j = 0 monomials,
 * each multiplied by the directly-summed G_0; the result must not change. */
ArInvariant ar_star_closed(long g, long imax, bool include_zero_exponent_terms = false);

struct StabilizationReport {
    long g = 0;
    long r = 0;
    long m = 0;
    long D = 0;
    long imax = -1;
    bool threshold_met = false;       // 2 imax < D, the regime the claim covers
    bool equal = false;               // codegrees 0..imax agree
    long first_disagreement = -1;     // smallest differing codegree, -1 if none
};

/* Compares codegree coefficients 0..imax of bg_class(g, B) against those of
 * bg_primitive(g, det B). Outside the threshold regime the comparison still
 * runs, but the report says the claim was not applicable. */
StabilizationReport stabilization_check(long g, const Polarization& B, long imax);

}  // namespace refab

#endif
