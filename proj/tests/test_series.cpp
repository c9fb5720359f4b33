#include <doctest.h>

#include <random>
#include <stdexcept>

#include "refab/series.hpp"
#include "test_seed.hpp"

using namespace refab;

namespace {

Series random_series(std::mt19937_64& rng, long order) {
    std::uniform_int_distribution<long> coeff(-6, 6);
    Series s(order);
    for (long k = 0; k <= order; ++k) s.set(k, Rat(coeff(rng)));
    return s;
}

}  // namespace

TEST_CASE("construction and coefficient access") {
    Series s(3);
    CHECK(s.order() == 3);
    CHECK(s.is_zero());
    s.set(2, Rat(5));
    s.add_to(2, Rat(-1));
    CHECK(s[2] == Rat(4));
    CHECK_THROWS_AS(Series(-1), std::invalid_argument);
    CHECK_THROWS_AS(s.set(4, Rat(1)), std::out_of_range);
}

TEST_CASE("square of 1 - 2x + x^2") {
    Series s(4);
    s.set(0, Rat(1));
    s.set(1, Rat(-2));
    s.set(2, Rat(1));
    Series sq = s * s;
    CHECK(sq == Series(4, {Rat(1), Rat(-4), Rat(6), Rat(-4), Rat(1)}));
}

TEST_CASE("arithmetic truncates to the shorter order") {
    Series a(5), b(3);
    a.set(0, Rat(1));
    a.set(5, Rat(7));
    b.set(0, Rat(2));
    b.set(3, Rat(1));
    CHECK((a + b).order() == 3);
    CHECK((a + b)[0] == Rat(3));
    CHECK((a * b).order() == 3);
    CHECK((a - b)[3] == Rat(-1));
}

TEST_CASE("powers") {
    Series s(6);
    s.set(0, Rat(1));
    s.set(1, Rat(1));
    CHECK(series_pow(s, 0) == Series::one(6));
    CHECK(series_pow(s, 1) == s);
    // (1+x)^5 binomials
    Series p = series_pow(s, 5);
    CHECK(p == Series(6, {Rat(1), Rat(5), Rat(10), Rat(10), Rat(5), Rat(1), Rat(0)}));
}

TEST_CASE("fast power matches repeated multiplication") {
    std::mt19937_64 rng(refab_test_seed);
    for (int t = 0; t < 20; ++t) {
        Series s = random_series(rng, 8);
        Series acc = Series::one(8);
        for (unsigned long e = 0; e <= 8; ++e) {
            CHECK(series_pow(s, e) == acc);
            acc = acc * s;
        }
    }
}

TEST_CASE("truncation") {
    Series s(5, {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)});
    Series t = s.truncated(2);
    CHECK(t == Series(2, {Rat(1), Rat(2), Rat(3)}));
    CHECK_THROWS_AS(s.truncated(6), std::invalid_argument);
}

TEST_CASE("shift") {
    Series s(4, {Rat(1), Rat(2), Rat(3), Rat(0), Rat(0)});
    CHECK(series_shift(s, 2) == Series(4, {Rat(0), Rat(0), Rat(1), Rat(2), Rat(3)}));
    CHECK(series_shift(s, 0) == s);
    CHECK_THROWS_AS(series_shift(s, -1), std::invalid_argument);
}

TEST_CASE("scalar multiple") {
    Series s(3, {Rat(1), Rat(-1), Rat(2), Rat(0)});
    CHECK(Rat(3, 2) * s == Series(3, {Rat(3, 2), Rat(-3, 2), Rat(3), Rat(0)}));
}
