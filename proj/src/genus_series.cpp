#include "refab/genus_series.hpp"

#include <stdexcept>

#include "refab/arith.hpp"
#include "refab/asymptotics.hpp"

namespace refab {

namespace {

/* binom(n - shift, k) as a polynomial in n; identically zero when k < 0. */
NPoly binom_shifted(long k, long shift) {
    if (k < 0) return NPoly();
    NPoly p = NPoly::constant(Rat(1));
    for (long j = 0; j < k; ++j) p *= NPoly({Rat(-shift - j), Rat(1)});
    return Rat(Int(1), factorial(k)) * p;
}

void check_codegree_range(long i) {
    if (i < 0 || i > 2)
        throw std::invalid_argument("codegree_closed: printed formulas exist only for i = 0, 1, 2");
}

}  // namespace

NPoly codegree_paper_npoly(long i, long g) {
    check_codegree_range(i);
    if (g < 2) throw std::invalid_argument("codegree_paper_npoly: genus must be >= 2");
    NPoly n = NPoly::monomial(1);
    switch (i) {
        case 0:
            return binom_shifted(g - 1, 0);
        case 1:
            return Rat(-2) * (n * binom_shifted(g - 4, 3));
        default: {
            NPoly inner = binom_shifted(g - 3, 2) - Rat(6) * binom_shifted(g - 3, 3) +
                          Rat(3) * binom_shifted(g - 3, 4) - Rat(8) * binom_shifted(g - 6, 5) -
                          Rat(2) * (NPoly({Rat(-5), Rat(1)}) * binom_shifted(g - 7, 6));
            return n * inner;
        }
    }
}

Rat codegree_closed(long i, long g, long n, CodegreeVariant variant) {
    check_codegree_range(i);
    if (g < 2) throw std::invalid_argument("codegree_closed: genus must be >= 2");
    if (variant == CodegreeVariant::paper) return codegree_paper_npoly(i, g).eval(n);
    return ar_star_closed(g, i).by_codegree[static_cast<std::size_t>(i)].eval(n);
}

GenusCoefficientFormula genus_coefficient_formula(long i, CodegreeVariant variant) {
    check_codegree_range(i);
    GenusCoefficientFormula f;
    f.i = i;
    f.variant = variant;
    f.eval = [i, variant](long g, long n) { return codegree_closed(i, g, n, variant); };
    return f;
}

namespace {

/* (1 + u)^e truncated at the series order, e >= 0. */
Series one_plus_u_pow(long e, long order) {
    Series s(order);
    for (long k = 0; k <= order; ++k) s.set(k, Rat(binomial(e, k)));
    return s;
}

Series genus_gf_closed(long i, long n, long umax) {
    switch (i) {
        case 0: {
            // u(1+u)^n - u
            Series s = series_shift(one_plus_u_pow(n, umax), 1);
            s.add_to(1, Rat(-1));
            return s;
        }
        case 1: {
            // -2n u^4 (1+u)^{n-3}
            if (n < 3) throw std::invalid_argument("genus_gf: need n >= 3 for the i = 1 form");
            return Rat(-2 * n) * series_shift(one_plus_u_pow(n - 3, umax), 4);
        }
        default: {
            // u(1+u)^{n-6} [ -2n^2 u^6 + n (3u^6 - 10u^5 - 9u^4 - 8u^3 - 2u^2) ]
            if (n < 6) throw std::invalid_argument("genus_gf: need n >= 6 for the i = 2 form");
            Series bracket(umax);
            Rat nn(n);
            bracket.set(6, Rat(-2) * nn * nn + Rat(3) * nn);
            bracket.set(5, Rat(-10) * nn);
            bracket.set(4, Rat(-9) * nn);
            bracket.set(3, Rat(-8) * nn);
            bracket.set(2, Rat(-2) * nn);
            return series_shift(one_plus_u_pow(n - 6, umax) * bracket, 1);
        }
    }
}

}  // namespace

Series genus_gf(long i, long n, long umax, GfSource source) {
    check_codegree_range(i);
    if (umax < 2) throw std::invalid_argument("genus_gf: umax must be >= 2");
    if (source == GfSource::closed) return genus_gf_closed(i, n, umax);
    Series s(umax);
    for (long g = 2; g <= umax; ++g)
        s.set(g, codegree_closed(i, g, n, CodegreeVariant::general));
    return s;
}

Codegree2Report arbitrate_codegree2(long g) {
    Codegree2Report rep;
    rep.g = g;
    rep.paper = codegree_paper_npoly(2, g);
    rep.general = ar_star_closed(g, 2).by_codegree[2];
    rep.interpolated = q_poly_interpolated(g, 2);
    rep.paper_matches = (rep.paper == rep.interpolated);
    rep.general_matches = (rep.general == rep.interpolated);
    rep.discrepancy = rep.paper - rep.interpolated;
    return rep;
}

}  // namespace refab
