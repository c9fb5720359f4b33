#include "refab/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace refab {

Series Series::truncated(long new_order) const {
    if (new_order > order()) throw std::invalid_argument("Series::truncated: cannot extend");
    Series out(new_order);
    for (long k = 0; k <= new_order; ++k) out.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
    return out;
}

Series operator+(const Series& a, const Series& b) {
    long n = std::min(a.order(), b.order());
    Series out(n);
    for (long k = 0; k <= n; ++k)
        out.c_[static_cast<std::size_t>(k)] = a[k] + b[k];
    return out;
}

Series operator-(const Series& a, const Series& b) {
    long n = std::min(a.order(), b.order());
    Series out(n);
    for (long k = 0; k <= n; ++k)
        out.c_[static_cast<std::size_t>(k)] = a[k] - b[k];
    return out;
}

Series operator*(const Series& a, const Series& b) {
    long n = std::min(a.order(), b.order());
    Series out(n);
    for (long i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            out.c_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return out;
}

Series operator*(const Rat& c, const Series& s) {
    Series out(s.order());
    if (c.is_zero()) return out;
    for (long k = 0; k <= s.order(); ++k) out.c_[static_cast<std::size_t>(k)] = c * s[k];
    return out;
}

Series series_pow(const Series& s, unsigned long e) {
    Series acc = Series::one(s.order());
    Series base = s;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

Series series_shift(const Series& s, long k) {
    if (k < 0) throw std::invalid_argument("series_shift: negative shift");
    Series out(s.order());
    for (long j = 0; j + k <= s.order(); ++j) out.set(j + k, s[j]);
    return out;
}

}  // namespace refab
