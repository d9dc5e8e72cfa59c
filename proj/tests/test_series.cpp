#include "irrpoly/series.hpp"

#include <doctest.h>

#include <random>

using namespace irrpoly;

namespace {

Series from_list(const std::vector<long>& coeffs) {
    Series s(int(coeffs.size()) - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) s.set(int(i), Int(coeffs[i]));
    return s;
}

// multiply an expansion back by prod (1 - t^k) and compare with t^shift
void check_form_roundtrip(const RationalForm& form, int T) {
    Series s = form.expand(T);
    for (int k : form.denom_exponents) {
        Series factor(T);
        factor.set(0, 1);
        if (k <= T) factor.set(k, -1);
        s = s.mul(factor);
    }
    Series expected(T);
    if (form.shift <= T) expected.set(form.shift, 1);
    CHECK(s == expected);
}

// independent oracle: naive power-series long division of t^shift by the
// expanded denominator polynomial
Series long_division(const RationalForm& form, int T) {
    std::vector<Int> denom(size_t(T) + 1, Int(0));
    denom[0] = 1;
    for (int k : form.denom_exponents) {
        std::vector<Int> next(size_t(T) + 1, Int(0));
        for (int i = 0; i <= T; ++i) {
            if (denom[size_t(i)] == 0) continue;
            next[size_t(i)] += denom[size_t(i)];
            if (i + k <= T) next[size_t(i + k)] -= denom[size_t(i)];
        }
        denom = std::move(next);
    }
    Series q(T);
    for (int k = 0; k <= T; ++k) {
        Int num = (k == form.shift) ? Int(1) : Int(0);
        for (int j = 0; j < k; ++j)
            if (q.at(j) != 0 && denom[size_t(k - j)] != 0) num -= q.at(j) * denom[size_t(k - j)];
        q.set(k, num);  // denom[0] == 1
    }
    return q;
}

} // namespace

TEST_CASE("rational form expansion") {
    // geometric series t^2/(1-t^2)
    Series p1 = RationalForm{2, {2}}.expand(8);
    CHECK(p1 == from_list({0, 0, 1, 0, 1, 0, 1, 0, 1}));

    // long division of t^5/((1-t^2)(1-t^4))
    Series p2 = RationalForm{5, {2, 4}}.expand(11);
    CHECK(p2 == from_list({0, 0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 2}));

    // long division of t^10/((1-t^2)(1-t^6))
    Series p3 = RationalForm{10, {2, 6}}.expand(14);
    CHECK(p3 == from_list({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1}));

    for (const RationalForm& form :
         {RationalForm{2, {2}}, RationalForm{5, {2, 4}}, RationalForm{10, {2, 6}},
          RationalForm{10, {2, 2, 6}}}) {
        check_form_roundtrip(form, 40);
        CHECK(form.expand(40) == long_division(form, 40));
    }

    CHECK(RationalForm{5, {2, 4}}.to_string() == "t^5 / ((1 - t^2) (1 - t^4))");
    CHECK_THROWS_AS((RationalForm{2, {0}}.expand(4)), std::invalid_argument);
    CHECK_THROWS_AS((RationalForm{2, {2}}.expand(-1)), std::invalid_argument);
}

TEST_CASE("series arithmetic and truncation discipline") {
    Series a = from_list({0, 0, 1, 0, 1});  // t^2 + t^4, trunc 4
    Series shifted = a.shifted(4);
    CHECK(shifted.trunc() == 8);
    CHECK(shifted == from_list({0, 0, 0, 0, 0, 0, 1, 0, 1}));
    CHECK_THROWS_AS(a.shifted(-1), std::invalid_argument);

    // reading above the truncation is an error, never a silent zero
    CHECK_THROWS_AS(a.at(5), std::out_of_range);
    CHECK_THROWS_AS(a.at(-1), std::out_of_range);
    CHECK(a.at(4) == 1);

    // product truncation is the min of the operands
    Series p1 = RationalForm{2, {2}}.expand(20);
    Series sq = p1.mul(p1.truncated(10));
    CHECK(sq.trunc() == 10);
    CHECK(sq.at(6) == 2);  // (2,4) and (4,2)
    CHECK(p1.add(p1.truncated(7)).trunc() == 7);

    CHECK(*RationalForm{5, {2, 4}}.expand(11).lowest_degree() == 5);
    CHECK_FALSE(Series(9).lowest_degree().has_value());

    CHECK(from_list({0, 0, 1, 0, 2}).to_string() == "t^2 + 2 t^4");
    CHECK(Series(3).to_string() == "0");
}

TEST_CASE("subtract_dims flags negative dimensions") {
    Series p1 = RationalForm{2, {2}}.expand(20);
    Series small(18);
    small.set(2, 1);
    CHECK(subtract_dims(p1, Series(20), 0) == p1);  // zero source

    Series ok = subtract_dims(p1, small, 2);  // t^2+t^4+... minus t^4
    CHECK(ok.trunc() == 20);                  // min(20, 18+2)
    CHECK(ok.at(2) == 1);
    CHECK(ok.at(4) == 0);
    CHECK(ok.at(6) == 1);

    try {
        subtract_dims(from_list({0, 0, 1, 0, 0}), p1, 0);  // t^2 - (t^2 + t^4 + ...)
        FAIL("expected NegativeCoefficientError");
    } catch (const NegativeCoefficientError& e) {
        CHECK(e.degree == 4);
    }
}

TEST_CASE("tensor lowest-degree additivity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(0, 12), dim(1, 3);
    for (int iter = 0; iter < 50; ++iter) {
        Series a(16), b(16);
        for (int k = 0; k < 4; ++k) {
            a.set(deg(rng), dim(rng));
            b.set(deg(rng), dim(rng));
        }
        auto la = a.lowest_degree(), lb = b.lowest_degree();
        REQUIRE(la.has_value());
        REQUIRE(lb.has_value());
        Series prod = a.mul(b);
        if (*la + *lb <= prod.trunc()) {
            auto lp = prod.lowest_degree();
            REQUIRE(lp.has_value());
            CHECK(*lp == *la + *lb);
        } else {
            CHECK_FALSE(prod.lowest_degree().has_value());
        }
    }
}
