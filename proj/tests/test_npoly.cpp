#include <doctest.h>

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "refab/errors.hpp"
#include "refab/npoly.hpp"
#include "test_seed.hpp"

using namespace refab;

TEST_CASE("normalization and degree") {
    NPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    NPoly m = NPoly::monomial(3, Rat(2));
    CHECK(m.degree() == 3);
    CHECK(m.coeff(3) == Rat(2));
    CHECK(m.coeff(7) == Rat(0));
    CHECK((m - m).is_zero());
}

TEST_CASE("binomial polynomials") {
    NPoly b2 = NPoly::binomial(2);  // n(n-1)/2
    CHECK(b2.eval(Rat(4)) == Rat(6));
    CHECK(b2.eval(5) == Rat(10));
    CHECK(b2.coeff(2) == Rat(1, 2));
    CHECK(b2.coeff(1) == Rat(-1, 2));
    CHECK(NPoly::binomial(0) == NPoly::monomial(0, Rat(1)));
    CHECK(NPoly::binomial(-1).is_zero());
    // C(n, 3) at small integers, including the vanishing range
    NPoly b3 = NPoly::binomial(3);
    CHECK(b3.eval(0) == Rat(0));
    CHECK(b3.eval(2) == Rat(0));
    CHECK(b3.eval(6) == Rat(20));
    CHECK(b3.eval(-1) == Rat(-1));
}

TEST_CASE("arithmetic") {
    NPoly n = NPoly::monomial(1);
    NPoly p = n * n - Rat(3) * n + NPoly::monomial(0, Rat(2));
    CHECK(p.eval(1) == Rat(0));
    CHECK(p.eval(2) == Rat(0));
    CHECK(p.eval(5) == Rat(12));
    CHECK(p.degree() == 2);
}

TEST_CASE("interpolation recovers a line") {
    std::vector<std::pair<Rat, Rat>> pts = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(3), Rat(3)}};
    NPoly p = npoly_interpolate(pts, 1);
    CHECK(p == NPoly::monomial(1));
}

TEST_CASE("interpolation recovers a binomial") {
    std::vector<std::pair<Rat, Rat>> pts = {
        {Rat(3), Rat(3)}, {Rat(4), Rat(6)}, {Rat(5), Rat(10)}, {Rat(6), Rat(15)}};
    CHECK(npoly_interpolate(pts, 2) == NPoly::binomial(2));
}

TEST_CASE("verification points catch a wrong degree bound") {
    // n^2 samples cannot be matched by a degree-1 polynomial
    std::vector<std::pair<Rat, Rat>> pts = {
        {Rat(1), Rat(1)}, {Rat(2), Rat(4)}, {Rat(3), Rat(9)}, {Rat(4), Rat(16)}};
    CHECK_THROWS_AS(npoly_interpolate(pts, 1), interpolation_error);
}

TEST_CASE("interpolation needs a spare sample") {
    std::vector<std::pair<Rat, Rat>> pts = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    CHECK_THROWS_AS(npoly_interpolate(pts, 1), std::invalid_argument);
}

TEST_CASE("interpolation round-trips random polynomials") {
    std::mt19937_64 rng(refab_test_seed);
    std::uniform_int_distribution<long> coeff(-12, 12);
    std::uniform_int_distribution<long> deg(0, 5);
    for (int t = 0; t < 40; ++t) {
        long d = deg(rng);
        NPoly p;
        for (long k = 0; k <= d; ++k) p += NPoly::monomial(k, Rat(coeff(rng), 1 + (k % 3)));
        std::vector<std::pair<Rat, Rat>> pts;
        for (long n = 0; n <= d + 2; ++n) pts.emplace_back(Rat(n), p.eval(n));
        CHECK(npoly_interpolate(pts, d) == p);
    }
}
