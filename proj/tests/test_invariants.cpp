#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "refab/arith.hpp"
#include "refab/errors.hpp"
#include "refab/invariants.hpp"
#include "test_seed.hpp"

using namespace refab;

namespace {

LaurentPoly make(std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += LaurentPoly::monomial(Rat(e), Rat(c));
    return p;
}

}  // namespace

TEST_CASE("P_a small cases") {
    CHECK(p_laurent(1) == make({{1, 1}, {0, -2}, {-1, 1}}));
    CHECK(p_laurent(2) == make({{2, 1}, {1, 2}, {0, -6}, {-1, 2}, {-2, 1}}));
    CHECK(p_laurent(3) == make({{3, 1}, {1, 3}, {0, -8}, {-1, 3}, {-3, 1}}));
    CHECK_THROWS_AS(p_laurent(0), std::invalid_argument);
}

TEST_CASE("P_a structure") {
    for (long a = 1; a <= 30; ++a) {
        LaurentPoly p = p_laurent(a);
        CHECK(p.degree() == Rat(a));
        CHECK(p.is_symmetric());
        CHECK(p.integer_coefficients());
        CHECK(lp_eval(p, Rat(1)) == Rat(0));
        CHECK(lp_codegree(p, 0) == Rat(1));
    }
}

TEST_CASE("vertex data validation") {
    CHECK_NOTHROW(VertexData(2, 1, {1, 1}));
    CHECK_THROWS_AS(VertexData(2, 1, {1}), std::invalid_argument);       // needs 2g-2 entries
    CHECK_THROWS_AS(VertexData(2, 1, {1, 0}), std::invalid_argument);    // positive multiplicities
    CHECK_THROWS_AS(VertexData(1, 1, {}), std::invalid_argument);        // genus at least 2
    CHECK_THROWS_AS(VertexData(2, 0, {1, 1}), std::invalid_argument);    // positive gcd
}

TEST_CASE("refined multiplicity, trivial gcd") {
    CHECK(refined_multiplicity(VertexData(2, 1, {1, 1})) == make({{1, 1}, {0, -2}, {-1, 1}}));
    // gcd 1 means the multiplicity is just the product of the vertex factors
    std::mt19937_64 rng(refab_test_seed);
    std::uniform_int_distribution<long> mv(1, 6);
    for (int t = 0; t < 30; ++t) {
        long g = 2 + static_cast<long>(t % 3);
        std::vector<long> mults;
        for (long j = 0; j < 2 * g - 2; ++j) mults.push_back(mv(rng));
        LaurentPoly prod = LaurentPoly::constant(Rat(1));
        for (long m : mults) {
            prod = prod * (LaurentPoly::monomial(Rat(m, 2), Rat(1)) -
                           LaurentPoly::monomial(Rat(-m, 2), Rat(1)));
        }
        CHECK(refined_multiplicity_raw(VertexData(g, 1, mults)) == prod);
    }
}

TEST_CASE("refined multiplicity, gcd 2") {
    // delta = 2, multiplicities (2, 2): k=1 gives (q - q^-1)^2, k=2 adds
    // phi(2) * 2^2 * (q^(1/2) - q^(-1/2))^2
    LaurentPoly m = refined_multiplicity(VertexData(2, 2, {2, 2}));
    CHECK(m == make({{2, 1}, {1, 4}, {0, -10}, {-1, 4}, {-2, 1}}));
}

TEST_CASE("refined multiplicity rejects fractional exponents") {
    VertexData odd(2, 1, {1, 2});
    LaurentPoly raw = refined_multiplicity_raw(odd);
    CHECK(raw == (LaurentPoly::monomial(Rat(3, 2), Rat(1)) -
                  LaurentPoly::monomial(Rat(1, 2), Rat(1)) -
                  LaurentPoly::monomial(Rat(-1, 2), Rat(1)) +
                  LaurentPoly::monomial(Rat(-3, 2), Rat(1))));
    CHECK_THROWS_AS(refined_multiplicity(odd), non_integral_error);
}

TEST_CASE("composition enumeration") {
    std::vector<std::vector<long>> seen;
    for_each_composition(4, 2, [&](const std::vector<long>& c) { seen.push_back(c); });
    std::vector<std::vector<long>> want = {{1, 3}, {2, 2}, {3, 1}};
    CHECK(seen == want);
    long count = 0;
    for_each_composition(2, 3, [&](const std::vector<long>&) { ++count; });
    CHECK(count == 0);  // no composition of 2 into 3 positive parts
}

TEST_CASE("primitive counts, low genus") {
    // genus 2: single vertex pair, BG_{2,n} = 2 P_n
    for (long n = 1; n <= 8; ++n)
        CHECK(bg_primitive(2, n) == Rat(2) * p_laurent(n));
    // genus 3: two factors, so BG_{3,n} = 3 sum_{a+b=n} P_a P_b
    CHECK(bg_primitive(3, 2) == Rat(3) * lp_mul(p_laurent(1), p_laurent(1)));
}

TEST_CASE("primitive counts, frozen values") {
    CHECK(bg_primitive(3, 2) == make({{2, 3}, {1, -12}, {0, 18}, {-1, -12}, {-2, 3}}));
    CHECK(bg_primitive(3, 3) == make({{3, 6}, {1, -54}, {0, 96}, {-1, -54}, {-3, 6}}));
    CHECK(bg_primitive(3, 4) == make({{4, 9}, {1, -144}, {0, 270}, {-1, -144}, {-4, 9}}));
    CHECK(bg_primitive(4, 5) ==
          make({{5, 24}, {4, -24}, {3, -72}, {2, -288}, {1, 1584}, {0, -2448},
                {-1, 1584}, {-2, -288}, {-3, -72}, {-4, -24}, {-5, 24}}));
}

TEST_CASE("empty composition range") {
    CHECK(bg_primitive(3, 1).is_zero());
    CHECK(bg_primitive(4, 2).is_zero());
    CHECK(bg_primitive(5, 3, BgMethod::oracle).is_zero());
}

TEST_CASE("oracle and convolution agree") {
    for (long g = 2; g <= 4; ++g)
        for (long n = g - 1; n <= 8; ++n)
            CHECK(bg_primitive(g, n, BgMethod::oracle) ==
                  bg_primitive(g, n, BgMethod::convolution));
}

TEST_CASE("polarization validation") {
    Polarization b(2, 3);
    CHECK(b.det() == 12);
    CHECK_THROWS_AS(Polarization(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Polarization(1, 0), std::invalid_argument);
}

TEST_CASE("polarization from matrix") {
    Polarization b = Polarization::from_matrix(2, 0, 0, 4);
    CHECK(b.r == 2);
    CHECK(b.m == 2);
    Polarization c = Polarization::from_matrix(1, 0, 0, 5);
    CHECK(c.r == 1);
    CHECK(c.m == 5);
    Polarization d = Polarization::from_matrix(3, 3, -3, 6);
    CHECK(d.r == 3);
    CHECK(d.m == 3);  // det 27, divisibility 3
    CHECK_THROWS_AS(Polarization::from_matrix(1, 0, 0, -2), std::invalid_argument);
    CHECK_THROWS_AS(Polarization::from_matrix(0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("class counts reduce to primitive ones when r = 1") {
    for (long m = 1; m <= 6; ++m)
        CHECK(bg_class(3, Polarization(1, m)) == bg_primitive(3, m));
}

TEST_CASE("class count with divisibility, frozen value") {
    // g=2, r=2, m=1: D=4, terms k=1 (BG_{2,4}) and k=2 (2^3 BG_{2,1}(q^2))
    CHECK(bg_class(2, Polarization(2, 1)) ==
          make({{4, 2}, {2, 20}, {1, 8}, {0, -60}, {-1, 8}, {-2, 20}, {-4, 2}}));
}

TEST_CASE("star normalization") {
    // g=2: D/(g(g-1)) = D/2, and BG_{2,D} = 2 P_D, so star = D P_D
    for (long m = 1; m <= 5; ++m)
        CHECK(bg_star(2, Polarization(1, m)) == Rat(m) * p_laurent(m));
    // g=3, n=2: 2/6 * 3 * P_1^2 = P_1^2
    CHECK(bg_star(3, Polarization(1, 2)) == lp_mul(p_laurent(1), p_laurent(1)));
}

TEST_CASE("methods agree through the cover formula") {
    Polarization b(2, 2);
    CHECK(bg_class(3, b, BgMethod::oracle) == bg_class(3, b, BgMethod::convolution));
    CHECK(bg_star(3, b, BgMethod::oracle) == bg_star(3, b, BgMethod::convolution));
}
