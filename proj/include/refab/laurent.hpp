#ifndef REFAB_LAURENT_HPP
#define REFAB_LAURENT_HPP

#include <map>

#include "refab/rational.hpp"

namespace refab {

/* Sparse Laurent polynomial: finite map exponent -> coefficient, no zero
 * coefficients stored. Exponents are exact rationals so that the
 * refined-multiplicity intermediates (denominator 2k) live in the same
 * type; every public invariant has integral exponents, checked where the
 * contract requires it. Immutable in spirit: all operations return new
 * values. */
class LaurentPoly {
public:
    using TermMap = std::map<Rat, Rat>;

    LaurentPoly() = default;

    static LaurentPoly monomial(const Rat& exp, const Rat& coeff) {
        LaurentPoly p;
        if (!coeff.is_zero()) p.terms_[exp] = coeff;
        return p;
    }
    static LaurentPoly constant(const Rat& c) { return monomial(Rat(0), c); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /* Coefficient of q^exp, 0 if absent. */
    Rat coeff(const Rat& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /* Highest exponent. Undefined on the zero polynomial. */
    Rat degree() const;
    /* Lowest exponent. Undefined on the zero polynomial. */
    Rat low_degree() const;

    bool integral_exponents() const;
    bool integer_coefficients() const;
    /* coefficient(e) == coefficient(-e) for all e. */
    bool is_symmetric() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rat& c, const LaurentPoly& p);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    /* q -> q^k substitution as exponent scaling, k >= 1. */
    LaurentPoly subst_power(long k) const;

private:
    TermMap terms_;

    void insert_add(const Rat& exp, const Rat& coeff);
};

inline LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/* Codegree-i coefficient: the coefficient of q^{deg(p) - i}. Rejects the
 * zero polynomial, whose codegree is undefined. */
Rat lp_codegree(const LaurentPoly& p, long i);

/* bar(p)(x) = x^d p(1/x) with d = deg(p): the coefficient shift that turns
 * the codegree-i coefficient into the x^i coefficient. Requires a nonzero
 * polynomial with integral exponents; multiplicative. */
LaurentPoly bar_transform(const LaurentPoly& p);

/* Exact evaluation at q0 != 0 (negative exponents), integral exponents only. */
Rat lp_eval(const LaurentPoly& p, const Rat& q0);

}  // namespace refab

#endif
