#include "wilsonline/laurent.hpp"
#include "wilsonline/matrix.hpp"
#include "wilsonline/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace wilsonline;

namespace {

LaurentPoly parse2(const std::string& s) { return LaurentPoly::parse(s, 2); }

LaurentPoly random_poly(RatSampler& rng, int nvars, int max_terms) {
    LaurentPoly p(nvars);
    int terms = rng.uniform_int(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        LaurentPoly::Exponents e(nvars);
        for (int& x : e) x = rng.uniform_int(-2, 2);
        p.add_term(e, rng.rational(3));
    }
    return p;
}

RatMatrix random_matrix(RatSampler& rng, int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rng.rational(3);
    return m;
}

} // namespace

TEST_CASE("rational strings") {
    CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
    CHECK(rat_from_string("4/6") == Rat(2, 3));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("laurent_mul basics") {
    // unit times inverse
    LaurentPoly a1 = parse2("A1");
    LaurentPoly a1inv = parse2("A1^-1");
    CHECK(a1 * a1inv == LaurentPoly::one(2));
    // difference of squares
    CHECK(parse2("A1 + A2") * parse2("A1 - A2") == parse2("A1^2 - A2^2"));
    // exponent cancellation
    CHECK(parse2("A2*A1^-1") * parse2("A1") == parse2("A2"));
    CHECK_THROWS_AS(parse2("A1") * LaurentPoly::one(3), std::invalid_argument);
}

TEST_CASE("laurent_exact_div examples") {
    CHECK(parse2("A2+1").exact_div(parse2("A1")) == parse2("A1^-1*A2 + A1^-1"));
    CHECK(parse2("A1^2-A2^2").exact_div(parse2("A1-A2")) == parse2("A1+A2"));
    CHECK_THROWS_AS(parse2("A1+A2").exact_div(parse2("A1+1")), NotDivisible);
}

TEST_CASE("laurent_eval examples") {
    LaurentPoly p = parse2("A1^-1*A2 + A1^-1");
    CHECK(p.eval({Rat(2), Rat(3)}) == Rat(2));
    CHECK(LaurentPoly::one(2).eval({Rat(5), Rat(-7)}) == Rat(1));
    CHECK(parse2("A1*A2 - 1").eval({Rat(3), Rat(1, 3)}) == Rat(0));
    CHECK_THROWS_AS(p.eval({Rat(0), Rat(1)}), std::domain_error);
}

TEST_CASE("laurent ring axioms on random triples") {
    RatSampler rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly a = random_poly(rng, 3, 4);
        LaurentPoly b = random_poly(rng, 3, 4);
        LaurentPoly c = random_poly(rng, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("exact_div inverts multiplication") {
    RatSampler rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly a = random_poly(rng, 3, 4);
        LaurentPoly b = random_poly(rng, 3, 3);
        if (b.is_zero()) continue;
        CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("eval is a ring homomorphism") {
    RatSampler rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly a = random_poly(rng, 2, 4);
        LaurentPoly b = random_poly(rng, 2, 4);
        std::vector<Rat> point{rng.nonzero_rational(), rng.nonzero_rational()};
        CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
        CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
    }
}

TEST_CASE("laurent text round trip") {
    RatSampler rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly p = random_poly(rng, 3, 5);
        CHECK(LaurentPoly::parse(p.to_string(), 3) == p);
    }
    CHECK(LaurentPoly::parse("0", 2).is_zero());
    CHECK(parse2("- A1 + 2").to_string() == "-A1 + 2");
}

TEST_CASE("mat_minor examples") {
    RatMatrix m{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    CHECK(mat_minor(m, {0, 1}, {0, 1}) == Rat(-2));
    CHECK(mat_minor(RatMatrix::identity(3), {1, 2}, {1, 2}) == Rat(1));
    RatMatrix swap2{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(mat_minor(swap2, {0}, {0}) == Rat(0));
    CHECK_THROWS_AS(mat_minor(m, {0}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(mat_minor(m, {0}, {5}), std::out_of_range);
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    RatSampler rng(321);
    for (int trial = 0; trial < 25; ++trial) {
        RatMatrix m = random_matrix(rng, 4);
        CHECK(m.det() == m.det_cofactor());
    }
    for (int trial = 0; trial < 5; ++trial) {
        RatMatrix m = random_matrix(rng, 5);
        CHECK(m.det() == m.det_cofactor());
    }
}

TEST_CASE("matrix inverse and rank") {
    RatSampler rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix m = random_matrix(rng, 3);
        if (m.det() == 0) {
            CHECK(m.rank() < 3);
            continue;
        }
        CHECK(m * m.inverse() == RatMatrix::identity(3));
        CHECK(m.rank() == 3);
    }
}
