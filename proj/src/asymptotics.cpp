#include "refab/asymptotics.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "refab/arith.hpp"
#include "refab/errors.hpp"
#include "refab/laurent.hpp"
#include "refab/quasimodular.hpp"

namespace refab {

Series bg_bar_star_series(long g, long n, long imax) {
    if (g < 2) throw std::invalid_argument("bg_bar_star_series: genus must be >= 2");
    if (n < 1) throw std::invalid_argument("bg_bar_star_series: n must be positive");
    if (imax < 0) throw std::invalid_argument("bg_bar_star_series: imax must be >= 0");
    if (n < g - 1) return Series(imax);  // empty composition set

    std::vector<Series> bp;
    bp.reserve(static_cast<std::size_t>(n) + 1);
    bp.emplace_back(imax);  // unused a = 0 slot
    for (long a = 1; a <= n; ++a) bp.push_back(bar_p_series(a, imax));

    std::vector<Series> pow(static_cast<std::size_t>(n) + 1, Series(imax));
    pow[0] = Series::one(imax);
    for (long rep = 0; rep < g - 1; ++rep) {
        std::vector<Series> next(static_cast<std::size_t>(n) + 1, Series(imax));
        for (long i = 0; i <= n; ++i) {
            const Series& cur = pow[static_cast<std::size_t>(i)];
            if (cur.is_zero()) continue;
            for (long a = 1; i + a <= n; ++a)
                next[static_cast<std::size_t>(i + a)] += cur * bp[static_cast<std::size_t>(a)];
        }
        pow = std::move(next);
    }
    return Rat(n, g - 1) * pow[static_cast<std::size_t>(n)];
}

NPoly q_poly_interpolated(long g, long i, long safety) {
    if (g < 2) throw std::invalid_argument("q_poly_interpolated: genus must be >= 2");
    if (i < 0) throw std::invalid_argument("q_poly_interpolated: codegree must be >= 0");
    if (safety < 0) throw std::invalid_argument("q_poly_interpolated: negative safety margin");

    long n0 = 2 * (g - 1) * i + g + safety;
    const int max_attempts = 4;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::pair<Rat, Rat>> samples;
        samples.reserve(static_cast<std::size_t>(g) + 1);
        for (long n = n0; n <= n0 + g; ++n)
            samples.emplace_back(Rat(n), bg_bar_star_series(g, n, i)[i]);
        try {
            return npoly_interpolate(samples, g - 1);
        } catch (const interpolation_error&) {
            n0 *= 2;  // sampled below the stabilization threshold, try higher
        }
    }
    throw stabilization_error(
        "q_poly_interpolated: no stable polynomial after repeated threshold doubling");
}

namespace {

using ExpMap = std::map<std::vector<long>, NPoly>;

std::vector<MultiIndexTerm> hilbert_expand_impl(long m, long s, bool keep_zero_exponents) {
    if (m < 0) throw std::invalid_argument("hilbert_expand: m must be >= 0");
    if (s < 1) throw std::invalid_argument("hilbert_expand: s must be >= 1");

    /* H_m(n - 1 - sum a_j) = (1/m!) prod_{t=0}^{m-1} (n - 1 - t - sum a_j),
     * built up one factor at a time over exponent vectors in the a_j. */
    ExpMap acc;
    acc[std::vector<long>(static_cast<std::size_t>(s), 0)] = NPoly::constant(Rat(1));
    for (long t = 0; t < m; ++t) {
        ExpMap next;
        NPoly linear({Rat(-1 - t), Rat(1)});  // n - 1 - t
        for (const auto& [e, c] : acc) {
            next[e] += linear * c;
            for (long j = 0; j < s; ++j) {
                std::vector<long> e2 = e;
                ++e2[static_cast<std::size_t>(j)];
                next[e2] -= c;
            }
        }
        acc = std::move(next);
    }

    Rat inv_mfact(Int(1), factorial(m));
    std::vector<MultiIndexTerm> out;
    for (auto& [e, c] : acc) {
        if (c.is_zero()) continue;
        if (!keep_zero_exponents) {
            bool all_positive = true;
            for (long ex : e)
                if (ex < 1) { all_positive = false; break; }
            if (!all_positive) continue;
        }
        out.push_back({s, e, inv_mfact * c});
    }
    return out;
}

}  // namespace

std::vector<MultiIndexTerm> hilbert_expand(long m, long s) {
    return hilbert_expand_impl(m, s, false);
}

std::vector<MultiIndexTerm> hilbert_expand_full(long m, long s) {
    return hilbert_expand_impl(m, s, true);
}

ArInvariant ar_star_closed(long g, long imax, bool include_zero_exponent_terms) {
    if (g < 2) throw std::invalid_argument("ar_star_closed: genus must be >= 2");
    if (imax < 0) throw std::invalid_argument("ar_star_closed: imax must be >= 0");

    std::vector<NPoly> acc(static_cast<std::size_t>(imax) + 1);
    acc[0] = NPoly::binomial(g - 1);

    std::map<long, Series> g_table;
    auto g_of = [&](long m) -> const Series& {
        auto it = g_table.find(m);
        if (it == g_table.end()) {
            /* m = 0 only occurs in the zero-term variant; using the direct
             * sum there keeps "G_0 contributes nothing" an honest claim. */
            Series s = (m == 0) ? g_m_direct(0, imax).series : g_m_closed(m, imax).series;
            it = g_table.emplace(m, std::move(s)).first;
        }
        return it->second;
    };

    NPoly n_over_gm1 = Rat(1, g - 1) * NPoly::monomial(1);
    for (long s = 1; 2 * s <= g - 2; ++s) {
        Rat choose(binomial(g - 1, s));
        auto terms = include_zero_exponent_terms ? hilbert_expand_full(g - 2 - s, s)
                                                 : hilbert_expand(g - 2 - s, s);
        for (const MultiIndexTerm& term : terms) {
            Series prod = Series::one(imax);
            for (long mj : term.exponents) prod = prod * g_of(mj);
            if (prod.is_zero()) continue;
            NPoly factor = choose * (n_over_gm1 * term.coeff);
            for (long i = 0; i <= imax; ++i)
                if (!prod[i].is_zero()) acc[static_cast<std::size_t>(i)] += prod[i] * factor;
        }
    }

    ArInvariant inv;
    inv.genus = g;
    inv.imax = imax;
    inv.by_codegree = std::move(acc);
    return inv;
}

StabilizationReport stabilization_check(long g, const Polarization& B, long imax) {
    if (imax < 0) throw std::invalid_argument("stabilization_check: imax must be >= 0");
    StabilizationReport rep;
    rep.g = g;
    rep.r = B.r;
    rep.m = B.m;
    rep.D = B.det();
    rep.imax = imax;
    rep.threshold_met = 2 * imax < rep.D;

    LaurentPoly full = bg_class(g, B);
    LaurentPoly prim = bg_primitive(g, rep.D);
    rep.equal = true;
    for (long i = 0; i <= imax; ++i) {
        if (lp_codegree(full, i) != lp_codegree(prim, i)) {
            rep.equal = false;
            rep.first_disagreement = i;
            break;
        }
    }
    return rep;
}

}  // namespace refab
