#include "irrpoly/qpoly.hpp"

#include <doctest.h>

#include <random>

using namespace irrpoly;

namespace {

QPoly random_qpoly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6), num(-4, 4), den(1, 3);
    QPoly p;
    int terms = deg(rng) + 1;
    for (int i = 0; i < terms; ++i) {
        Rat c(num(rng), den(rng));
        c.canonicalize();
        p += QPoly::q_power(deg(rng), c);
    }
    return p;
}

} // namespace

TEST_CASE("qpoly arithmetic examples") {
    QPoly a = QPoly::q_power(2) + QPoly::q_power(1);  // q^2 + q
    QPoly b = QPoly::q_power(1) + QPoly::constant(1);
    QPoly prod = a * b;
    CHECK(prod == QPoly::q_power(3) + QPoly::q_power(2, 2) + QPoly::q_power(1));

    QPoly c = QPoly::q_power(5) + QPoly::q_power(4) + QPoly::q_power(3);
    CHECK(c.eval_int(2) == 56);

    // (q^2 - q)/2 vanishes at q = 1
    QPoly half = (QPoly::q_power(2) - QPoly::q_power(1)).scaled(Rat(1, 2));
    CHECK(half.eval(1) == 0);
    CHECK(half.eval_int(1) == 0);

    CHECK(QPoly::geometric(3).to_string() == "q^2 + q + 1");
    CHECK(QPoly().to_string() == "0");
    CHECK(QPoly().degree() == -1);
    CHECK(QPoly().is_zero());
    CHECK_THROWS_AS(QPoly::q_power(-1), std::invalid_argument);
}

TEST_CASE("qpoly stores no zero coefficients") {
    QPoly a = QPoly::q_power(3) + QPoly::q_power(1);
    QPoly b = QPoly::q_power(3);
    QPoly diff = a - b;
    CHECK(diff.coefficients().size() == 1);
    CHECK(diff.degree() == 1);
    QPoly zero = diff - QPoly::q_power(1);
    CHECK(zero.is_zero());
    CHECK(zero.coefficients().empty());
}

TEST_CASE("eval_int rejects non-integers") {
    QPoly half = QPoly::q_power(1, Rat(1, 2));
    CHECK_THROWS_AS(half.eval_int(1), std::domain_error);
    CHECK(half.eval_int(2) == 1);
    CHECK(half.eval_int(-4) == -2);
}

TEST_CASE("multiset_binomial") {
    QPoly x = QPoly::q_power(7) + QPoly::constant(3);
    CHECK(multiset_binomial(x, 1) == x);  // identity case
    CHECK(multiset_binomial(x, 0) == QPoly::constant(1));

    CHECK(multiset_binomial(Int(6), 3) == 56);  // C(8,3)
    CHECK(multiset_binomial(Int(0), 4) == 0);
    CHECK(multiset_binomial(Int(1), 4) == 1);

    // multisets of size 2 from q objects: (q^2+q)/2, 6 of them when q=3
    QPoly pairs = multiset_binomial(QPoly::q_power(1), 2);
    CHECK(pairs == (QPoly::q_power(2) + QPoly::q_power(1)).scaled(Rat(1, 2)));
    CHECK(pairs.eval_int(3) == 6);

    // agreement with the integer version at sampled points
    QPoly m3 = multiset_binomial(QPoly::q_power(2) + QPoly::q_power(1), 3);
    for (long q = -2; q <= 5; ++q)
        CHECK(m3.eval_int(q) == multiset_binomial(Int(q * q + q), 3));
}

TEST_CASE("ring axioms on pseudorandom triples") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 40; ++iter) {
        QPoly a = random_qpoly(rng), b = random_qpoly(rng), c = random_qpoly(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a - a == QPoly());
        // evaluation is a ring map
        Rat q(3, 2);
        CHECK((a * b + c).eval(q) == a.eval(q) * b.eval(q) + c.eval(q));
    }
}
