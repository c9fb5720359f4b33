#ifndef REFAB_GENUS_SERIES_HPP
#define REFAB_GENUS_SERIES_HPP

#include <functional>

#include "refab/npoly.hpp"
#include "refab/series.hpp"

namespace refab {

/* Two ways to evaluate the codegree-i coefficient of AR*_g at a given n.
 * "paper" is the literal printed closed formula for i <= 2; "general" goes
 * through the full closed-form machinery (ar_star_closed) and is the
 * arbiter when the two disagree. */
enum class CodegreeVariant { paper, general };

Rat codegree_closed(long i, long g, long n, CodegreeVariant variant);

/* The same two evaluators packaged as a value, for table drivers. */
struct GenusCoefficientFormula {
    long i = 0;
    CodegreeVariant variant = CodegreeVariant::general;
    std::function<Rat(long g, long n)> eval;
};
GenusCoefficientFormula genus_coefficient_formula(long i, CodegreeVariant variant);

/* Literal closed formula as a polynomial in n at fixed genus, i <= 2.
 * Binomials with negative lower index vanish. */
NPoly codegree_paper_npoly(long i, long g);

enum class GfSource { closed, general };

/* Generating series over the genus: sum_{g=2}^{umax} c_{g,i}(n) u^g,
 * truncated at u^umax. source = general assembles the coefficients from
 * ar_star_closed; source = closed expands the printed rational functions
 * (u(1+u)^n - u for i = 0, -2n u^4 (1+u)^{n-3} for i = 1, and the longer
 * i = 2 expression). */
Series genus_gf(long i, long n, long umax, GfSource source);

/* Side-by-side comparison of the i = 2 candidates at one genus: the printed
 * formula, the general machinery, and the finite-n interpolation oracle,
 * all as polynomials in n valid past the stabilization threshold. */
struct Codegree2Report {
    long g = 0;
    NPoly paper;
    NPoly general;
    NPoly interpolated;
    bool paper_matches = false;
    bool general_matches = false;
    NPoly discrepancy;  // paper - interpolated
};
Codegree2Report arbitrate_codegree2(long g);

}  // namespace refab

#endif
