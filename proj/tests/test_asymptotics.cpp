#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "refab/arith.hpp"
#include "refab/asymptotics.hpp"
#include "refab/laurent.hpp"
#include "refab/quasimodular.hpp"

using namespace refab;

namespace {

// key the expansion terms by their exponent vector for easy lookup
std::map<std::vector<long>, NPoly> as_map(const std::vector<MultiIndexTerm>& terms) {
    std::map<std::vector<long>, NPoly> out;
    for (const auto& t : terms) {
        auto [it, fresh] = out.emplace(t.exponents, t.coeff);
        REQUIRE(fresh);  // expansions must not repeat a monomial
    }
    return out;
}

}  // namespace

TEST_CASE("bar star series, frozen values") {
    CHECK(bg_bar_star_series(2, 7, 2) == Series(2, {Rat(7), Rat(0), Rat(0)}));
    CHECK(bg_bar_star_series(3, 12, 1) == Series(1, {Rat(66), Rat(0)}));
    CHECK(bg_bar_star_series(4, 13, 1) == Series(1, {Rat(286), Rat(-26)}));
    CHECK(bg_bar_star_series(5, 20, 4) ==
          Series(4, {Rat(4845), Rat(-680), Rat(-1860), Rat(-2240), Rat(-3500)}));
    CHECK(bg_bar_star_series(4, 2, 3).is_zero());  // n < g - 1
}

TEST_CASE("bar star series matches the Laurent computation") {
    for (long g = 2; g <= 4; ++g) {
        for (long n = g - 1; n <= 7; ++n) {
            LaurentPoly full = bar_transform(bg_star(g, Polarization(1, n)));
            Series trunc = bg_bar_star_series(g, n, 5);
            for (long i = 0; i <= 5; ++i) CHECK(trunc[i] == full.coeff(Rat(i)));
        }
    }
}

TEST_CASE("interpolated codegree polynomials") {
    CHECK(q_poly_interpolated(2, 0) == NPoly::monomial(1));  // n itself
    CHECK(q_poly_interpolated(2, 1).is_zero());
    CHECK(q_poly_interpolated(3, 0) == NPoly::binomial(2));
    CHECK(q_poly_interpolated(4, 0) == NPoly::binomial(3));
    CHECK(q_poly_interpolated(4, 1) == NPoly::monomial(1, Rat(-2)));
    CHECK(q_poly_interpolated(4, 2) == NPoly::monomial(1, Rat(-6)));
    // 27n - 6n^2
    CHECK(q_poly_interpolated(5, 2) ==
          NPoly::monomial(1, Rat(27)) + NPoly::monomial(2, Rat(-6)));
}

TEST_CASE("hilbert expansion, one variable") {
    // binom(n - 1 - a, 2) = binom(n-1, 2) + a (3 - 2n)/2 + a^2 / 2
    auto terms = as_map(hilbert_expand(2, 1));
    CHECK(terms.size() == 2);
    CHECK(terms.at({1}) ==
          Rat(1, 2) * (NPoly::constant(Rat(3)) - Rat(2) * NPoly::monomial(1)));
    CHECK(terms.at({2}) == NPoly::constant(Rat(1, 2)));

    auto full = as_map(hilbert_expand_full(2, 1));
    CHECK(full.size() == 3);
    // constant monomial carries binom(n-1, 2) = (n^2 - 3n + 2)/2
    NPoly want = Rat(1, 2) * (NPoly::monomial(2) - Rat(3) * NPoly::monomial(1) +
                              NPoly::constant(Rat(2)));
    CHECK(full.at({0}) == want);
}

TEST_CASE("hilbert expansion, two variables") {
    // binom(n - 1 - a - b, 2): the only all-positive monomial is a b
    auto terms = as_map(hilbert_expand(2, 2));
    CHECK(terms.size() == 1);
    CHECK(terms.at({1, 1}) == NPoly::constant(Rat(1)));
}

TEST_CASE("hilbert expansion, degenerate cases") {
    CHECK(hilbert_expand(0, 1).empty());  // binom(y, 0) = 1 has no a-dependence
    auto full = as_map(hilbert_expand_full(0, 1));
    CHECK(full.size() == 1);
    CHECK(full.at({0}) == NPoly::constant(Rat(1)));
}

TEST_CASE("closed form, low genus") {
    ArInvariant a2 = ar_star_closed(2, 3);
    CHECK(a2.by_codegree[0] == NPoly::monomial(1));
    for (long i = 1; i <= 3; ++i) CHECK(a2.by_codegree[i].is_zero());

    ArInvariant a3 = ar_star_closed(3, 3);
    CHECK(a3.by_codegree[0] == NPoly::binomial(2));
    for (long i = 1; i <= 3; ++i) CHECK(a3.by_codegree[i].is_zero());

    // genus 4: binom(n,3) - 2 sigma_1(i) n at every positive codegree
    ArInvariant a4 = ar_star_closed(4, 6);
    CHECK(a4.by_codegree[0] == NPoly::binomial(3));
    for (long i = 1; i <= 6; ++i)
        CHECK(a4.by_codegree[i] == NPoly::monomial(1, Rat(-2) * Rat(sigma(1, i))));
}

TEST_CASE("closed form matches interpolation at genus 5") {
    ArInvariant a5 = ar_star_closed(5, 3);
    for (long i = 0; i <= 3; ++i) CHECK(a5.by_codegree[i] == q_poly_interpolated(5, i));
}

TEST_CASE("closed form evaluated at finite n matches the series") {
    // past the stabilization threshold 2(g-1) i + g for every pair below
    long n = 40;
    for (long g : {4L, 5L, 6L}) {
        ArInvariant ar = ar_star_closed(g, 3);
        Series s = bg_bar_star_series(g, n, 3);
        for (long i = 0; i <= 3; ++i) CHECK(ar.by_codegree[i].eval(n) == s[i]);
    }
}

TEST_CASE("zero-exponent bookkeeping cancels") {
    for (long g = 4; g <= 7; ++g)
        CHECK(ar_star_closed(g, 4).by_codegree ==
              ar_star_closed(g, 4, true).by_codegree);
}

TEST_CASE("stabilization of class counts") {
    StabilizationReport rep = stabilization_check(2, Polarization(2, 1), 1);
    CHECK(rep.D == 4);
    CHECK(rep.threshold_met);  // 2 < 4
    CHECK(rep.equal);
    CHECK(rep.first_disagreement == -1);

    // at codegree D/2 the cover term reaches in, so equality breaks
    StabilizationReport deep = stabilization_check(2, Polarization(2, 1), 2);
    CHECK(!deep.threshold_met);
    CHECK(!deep.equal);
    CHECK(deep.first_disagreement == 2);

    // r = 1 has no extra cover terms at all
    StabilizationReport triv = stabilization_check(3, Polarization(1, 5), 5);
    CHECK(triv.equal);
}
