#ifndef REFAB_NPOLY_HPP
#define REFAB_NPOLY_HPP

#include <utility>
#include <vector>

#include "refab/rational.hpp"

namespace refab {

/* Polynomial in the discrete variable n with rational coefficients, dense in
 * ascending powers. Trailing zeros are stripped so degree() is honest; the
 * zero polynomial keeps a single zero coefficient and reports degree -1. */
class NPoly {
public:
    NPoly() : c_{Rat(0)} {}
    explicit NPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(Rat(0));
        normalize();
    }

    static NPoly constant(const Rat& v) { return NPoly({v}); }
    /* The monomial n^k. */
    static NPoly monomial(long k, const Rat& coeff = Rat(1));
    /* Binomial coefficient C(n, k) as a polynomial in n, degree k. */
    static NPoly binomial(long k);

    long degree() const { return is_zero() ? -1 : static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }

    Rat coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(c_.size())) return Rat(0);
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& n) const;
    Rat eval(long n) const { return eval(Rat(n)); }

    friend NPoly operator+(const NPoly& a, const NPoly& b);
    friend NPoly operator-(const NPoly& a, const NPoly& b);
    friend NPoly operator*(const NPoly& a, const NPoly& b);
    friend NPoly operator*(const Rat& c, const NPoly& p);
    NPoly& operator+=(const NPoly& o) { return *this = *this + o; }
    NPoly& operator-=(const NPoly& o) { return *this = *this - o; }
    NPoly& operator*=(const NPoly& o) { return *this = *this * o; }

    friend bool operator==(const NPoly& a, const NPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const NPoly& a, const NPoly& b) { return !(a == b); }

private:
    void normalize() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/* Fit a polynomial of degree <= bound through the first bound+1 samples, then
 * check it reproduces every remaining sample exactly. A mismatch throws
 * interpolation_error: the data is simply not a polynomial of that degree,
 * which callers must treat differently from an arithmetic failure. */
NPoly npoly_interpolate(const std::vector<std::pair<Rat, Rat>>& samples, long degree_bound);

/* One asymptotic invariant: for each codegree i up to imax, the polynomial
 * in n giving that coefficient once n is past the stabilization threshold. */
struct ArInvariant {
    long genus = 0;
    long imax = -1;
    std::vector<NPoly> by_codegree;  // index i -> Q_i(n)
};

}  // namespace refab

#endif
