#ifndef REFAB_SERIES_HPP
#define REFAB_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "refab/rational.hpp"

namespace refab {

/* Truncated power series over Rat: coefficients of x^0..x^order are known,
 * everything beyond the order is unknown, never assumed zero. Arithmetic on
 * two series truncates to the smaller order, so a result never claims
 * coefficients that were not actually computed. */
class Series {
public:
    /* Zero series of the given truncation order. */
    explicit Series(long order) : c_(checked_size(order)) {}
    Series(long order, std::vector<Rat> coeffs) : Series(order) {
        for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
    }

    static Series constant(const Rat& v, long order) {
        Series s(order);
        s.c_[0] = v;
        return s;
    }
    static Series one(long order) { return constant(Rat(1), order); }

    long order() const { return static_cast<long>(c_.size()) - 1; }

    const Rat& operator[](long k) const { return c_.at(static_cast<std::size_t>(k)); }
    void set(long k, const Rat& v) { c_.at(static_cast<std::size_t>(k)) = v; }
    void add_to(long k, const Rat& v) { c_.at(static_cast<std::size_t>(k)) += v; }

    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Rat& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    Series truncated(long new_order) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rat& c, const Series& s);
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    static std::size_t checked_size(long order) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<Rat> c_;
};

inline Series series_mul(const Series& a, const Series& b) { return a * b; }

/* s^e by repeated squaring; s^0 is 1 at the same order. */
Series series_pow(const Series& s, unsigned long e);

/* Multiplication by x^k: shifts coefficients up, drops the tail beyond the
 * order. Sound only when the dropped head of s is genuinely known (it is,
 * for the polynomial factors this is used on). */
Series series_shift(const Series& s, long k);

}  // namespace refab

#endif
