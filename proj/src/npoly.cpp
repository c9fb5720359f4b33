#include "refab/npoly.hpp"

#include <stdexcept>

#include "refab/arith.hpp"
#include "refab/errors.hpp"

namespace refab {

NPoly NPoly::monomial(long k, const Rat& coeff) {
    if (k < 0) throw std::invalid_argument("NPoly::monomial: negative exponent");
    std::vector<Rat> c(static_cast<std::size_t>(k) + 1);
    c.back() = coeff;
    return NPoly(std::move(c));
}

NPoly NPoly::binomial(long k) {
    if (k < 0) return NPoly();  // C(n,k) vanishes identically for k < 0
    // n(n-1)...(n-k+1) / k!
    NPoly p = NPoly::constant(Rat(1));
    for (long j = 0; j < k; ++j)
        p *= NPoly({Rat(-j), Rat(1)});
    Rat inv_kfact = Rat(Int(1), factorial(k));
    return inv_kfact * p;
}

Rat NPoly::eval(const Rat& n) const {
    // Horner
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * n + *it;
    return acc;
}

NPoly operator+(const NPoly& a, const NPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] += b.c_[k];
    }
    return NPoly(std::move(c));
}

NPoly operator-(const NPoly& a, const NPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] -= b.c_[k];
    }
    return NPoly(std::move(c));
}

NPoly operator*(const NPoly& a, const NPoly& b) {
    if (a.is_zero() || b.is_zero()) return NPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return NPoly(std::move(c));
}

NPoly operator*(const Rat& c, const NPoly& p) {
    std::vector<Rat> out(p.c_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = c * p.c_[k];
    return NPoly(std::move(out));
}

NPoly npoly_interpolate(const std::vector<std::pair<Rat, Rat>>& samples, long degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("npoly_interpolate: negative degree bound");
    std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
    if (samples.size() < need + 1)
        throw std::invalid_argument(
            "npoly_interpolate: need at least one verification sample past the degree bound");

    /* Newton form on the first need points: divided differences, then expand. */
    std::vector<Rat> xs(need), dd(need);
    for (std::size_t k = 0; k < need; ++k) {
        xs[k] = samples[k].first;
        dd[k] = samples[k].second;
    }
    for (std::size_t level = 1; level < need; ++level)
        for (std::size_t k = need - 1; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);

    NPoly p = NPoly::constant(dd[need - 1]);
    for (std::size_t k = need - 1; k-- > 0;) {
        // p <- dd[k] + (n - xs[k]) * p
        p = NPoly::constant(dd[k]) + NPoly({-xs[k], Rat(1)}) * p;
    }

    for (std::size_t k = need; k < samples.size(); ++k) {
        if (p.eval(samples[k].first) != samples[k].second)
            throw interpolation_error(
                "npoly_interpolate: fitted polynomial fails at a verification point");
    }
    return p;
}

}  // namespace refab
