#ifndef REFAB_INVARIANTS_HPP
#define REFAB_INVARIANTS_HPP

#include <functional>
#include <vector>

#include "refab/laurent.hpp"

namespace refab {

/* A polarization class up to equivalence: divisibility r and the determinant
 * m of the underlying primitive class. Everything downstream depends only on
 * these two numbers; det() is the determinant D = r^2 m of the class itself,
 * so the self-intersection is 2D. */
struct Polarization {
    long r = 1;
    long m = 1;

    Polarization(long r_, long m_);

    long det() const { return r * r * m; }

    /* Build from an explicit integer 2x2 matrix [[a, b], [c, d]]:
     * divisibility = gcd of the entries, determinant must be positive. */
    static Polarization from_matrix(long a, long b, long c, long d);
};

/* Combinatorial input of one trivalent genus-g tropical curve: the gcd delta
 * of the edge data and the 2g-2 Mikhalkin vertex multiplicities. */
struct VertexData {
    long g = 2;
    long delta = 1;
    std::vector<long> mults;

    VertexData(long g_, long delta_, std::vector<long> mults_);
};

/*               P_a(q) = sum_{k|a} (a/k) (q^k - 2 + q^{-k})
 * Symmetric, integer, degree a, vanishing at q = 1. */
LaurentPoly p_laurent(long a);

/* Refined multiplicity of a vertex-multiplicity profile:
 *
 *   M = sum_{k|delta} phi(k) k^{2g-2} prod_V (q^{m_V/2k} - q^{-m_V/2k})
 *
 * The raw variant returns the sum as-is, fractional exponents included; the
 * checked variant throws non_integral_error unless every exponent is an
 * integer, which is the contract for data coming from an actual curve. */
LaurentPoly refined_multiplicity_raw(const VertexData& v);
LaurentPoly refined_multiplicity(const VertexData& v);

enum class BgMethod { oracle, convolution };

/* Visit every composition of n into exactly `parts` positive integers, in
 * lexicographic order. No calls when n < parts. */
void for_each_composition(long n, long parts,
                          const std::function<void(const std::vector<long>&)>& fn);

/*           BG_{g,n}(q) = g sum_{a_1+...+a_{g-1} = n} P_{a_1} ... P_{a_{g-1}}
 *
 * oracle: literal enumeration of the compositions. convolution: coefficient
 * of t^n in (sum_a P_a t^a)^{g-1}, scaled by g. Identical results; the
 * oracle exists so the convolution can be tested against something dumber.
 * n < g-1 gives the zero polynomial (empty composition set). */
LaurentPoly bg_primitive(long g, long n, BgMethod method = BgMethod::convolution);

/* Multiple cover formula, reducing a class of divisibility r to primitive
 * ones: sum_{k|r} k^{2g-1} BG_{g, D/k^2}(q^k) with D = det(B). */
LaurentPoly bg_class(long g, const Polarization& B, BgMethod method = BgMethod::convolution);

/* Star normalization: (D / (g(g-1))) * bg_class. Rational coefficients. */
LaurentPoly bg_star(long g, const Polarization& B, BgMethod method = BgMethod::convolution);

}  // namespace refab

#endif
