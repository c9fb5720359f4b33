#include "refab/laurent.hpp"

#include <stdexcept>

#include "refab/errors.hpp"

namespace refab {

Rat LaurentPoly::degree() const {
    if (terms_.empty()) throw std::invalid_argument("LaurentPoly: degree of zero polynomial");
    return terms_.rbegin()->first;
}

Rat LaurentPoly::low_degree() const {
    if (terms_.empty()) throw std::invalid_argument("LaurentPoly: low degree of zero polynomial");
    return terms_.begin()->first;
}

bool LaurentPoly::integral_exponents() const {
    for (const auto& [e, c] : terms_)
        if (!e.is_integer()) return false;
    return true;
}

bool LaurentPoly::integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

bool LaurentPoly::is_symmetric() const {
    for (const auto& [e, c] : terms_)
        if (coeff(-e) != c) return false;
    return true;
}

void LaurentPoly::insert_add(const Rat& exp, const Rat& coeff) {
    auto [it, fresh] = terms_.try_emplace(exp, coeff);
    if (fresh) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_add(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_add(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.insert_add(ea + eb, ca * cb);
    return out;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& p) {
    LaurentPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, pc] : p.terms_) out.terms_[e] = c * pc;
    return out;
}

LaurentPoly LaurentPoly::subst_power(long k) const {
    if (k < 1) throw std::invalid_argument("subst_power: k must be >= 1");
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[Rat(k) * e] = c;
    return out;
}

Rat lp_codegree(const LaurentPoly& p, long i) {
    if (p.is_zero()) throw std::invalid_argument("lp_codegree: zero polynomial");
    return p.coeff(p.degree() - Rat(i));
}

LaurentPoly bar_transform(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("bar_transform: zero polynomial");
    if (!p.integral_exponents())
        throw non_integral_error("bar_transform: fractional exponent");
    const Rat d = p.degree();
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out += LaurentPoly::monomial(d - e, c);
    return out;
}

Rat lp_eval(const LaurentPoly& p, const Rat& q0) {
    if (q0.is_zero()) throw std::invalid_argument("lp_eval: q0 = 0 (negative exponents)");
    if (!p.integral_exponents())
        throw non_integral_error("lp_eval: fractional exponent");
    Rat v = 0;
    for (const auto& [e, c] : p.terms()) v += c * rat_pow(q0, e.to_long());
    return v;
}

}  // namespace refab
