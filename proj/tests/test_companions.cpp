// Companion fractions, u-sequences, intervals, translation matrices.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "markov/companions.hpp"

using markov::CompanionRef;
using markov::QuadraticSurd;
using markov::Rational;
using markov::Side;
using markov::SurdInterval;
using markov::TranslationMatrix;
using markov::USequence;

TEST_CASE("u-sequence tables for small Markov numbers") {
    // q = 1 gives the even-index Fibonacci numbers
    const long fib[] = {0, 1, 3, 8, 21, 55, 144, 377};
    for (std::size_t k = 0; k < 8; ++k) CHECK(markov::u_seq(1, long(k)) == fib[k]);
    // q = 2 gives half the even-index Pell numbers
    const long pell_halves[] = {0, 1, 6, 35, 204, 1189};
    for (std::size_t k = 0; k < 6; ++k) CHECK(markov::u_seq(2, long(k)) == pell_halves[k]);
    const long q5[] = {0, 1, 15, 224, 3345, 49951};
    for (std::size_t k = 0; k < 6; ++k) CHECK(markov::u_seq(5, long(k)) == q5[k]);
    CHECK(markov::u_seq(13, 2) == 39);
    CHECK(markov::u_seq(13, 3) == 1520);
    CHECK(markov::u_seq(13, 4) == 59241);
    CHECK(markov::u_seq(13, 5) == 2308879);
}

TEST_CASE("u-sequence rejects non-Markov moduli") {
    CHECK_THROWS_AS(markov::u_seq(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(markov::u_seq(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(markov::u_seq(-2, 1), std::invalid_argument);
    CHECK_THROWS_AS(USequence(mpz_class(12)), std::invalid_argument);
    try {
        markov::u_seq(7, 2);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("7") != std::string::npos);
    }
}

TEST_CASE("u-sequence is odd in the index") {
    for (long q : {1L, 2L, 5L, 29L}) {
        for (long k = 0; k <= 12; ++k) {
            CHECK(markov::u_seq(q, -k) == -markov::u_seq(q, k));
        }
    }
}

TEST_CASE("consecutive u-values satisfy the conservation law and are coprime") {
    for (long q : {1L, 2L, 5L, 13L, 29L, 34L, 89L}) {
        USequence u((mpz_class(q)));
        for (std::size_t k = 0; k + 1 <= 30; ++k) {
            mpz_class a = u.at_index(k);
            mpz_class b = u.at_index(k + 1);
            CHECK(b * b - 3 * q * a * b + a * a == 1);
            CHECK(gcd(a, b) == 1);
        }
    }
}

TEST_CASE("companion fractions at named points") {
    CHECK(markov::gamma(Rational(2, 5), Side::Right, 2) == Rational(31, 75));
    CHECK(markov::gamma(Rational(2, 5), Side::Left, 3) == Rational(433, 1120));
    CHECK(markov::gamma(Rational(1, 2), Side::Right, 3) == Rational(41, 70));
    CHECK(markov::gamma(Rational(0), Side::Right, 2) == Rational(1, 3));
    CHECK(markov::gamma(Rational(0), Side::Left, 2) == Rational(-1, 3));
    CHECK(markov::gamma(Rational(1, 2), Side::Left, 2) == Rational(5, 12));
    CHECK(markov::gamma(Rational(1, 2), Side::Right, 2) == Rational(7, 12));
    CHECK(markov::gamma(CompanionRef{Rational(2, 5), Side::Right, 3}) == Rational(463, 1120));
}

TEST_CASE("companion fractions land in lowest terms with denominator q*u_k") {
    for (Rational base : {Rational(0), Rational(1, 2), Rational(2, 5), Rational(5, 13)}) {
        for (long k = 2; k <= 6; ++k) {
            Rational g = markov::gamma(base, Side::Left, k);
            CHECK(g.den() == base.den() * markov::u_seq(base.den(), k));
            CHECK(markov::gamma(base, Side::Right, k).den() == g.den());
        }
    }
}

TEST_CASE("left and right companions average to the base") {
    for (Rational base : {Rational(0), Rational(1, 2), Rational(2, 5), Rational(-3),
                          Rational(12, 29), Rational(7, 2)}) {
        for (long k = 2; k <= 7; ++k) {
            Rational sum = markov::gamma(base, Side::Left, k) + markov::gamma(base, Side::Right, k);
            CHECK(sum == base + base);
        }
    }
}

TEST_CASE("negative index recovers the opposite side three units over") {
    // u_{k+1} + u_{k-1} = 3 q u_k turns base + u_{-k-1}/(q u_{-k}) into the
    // left companion of base + 3.
    for (Rational base : {Rational(0), Rational(1, 2), Rational(2, 5)}) {
        const mpz_class& q = base.den();
        for (long k = 2; k <= 6; ++k) {
            Rational neg = base + Rational(markov::u_seq(q, -k - 1), q * markov::u_seq(q, -k));
            CHECK(neg == markov::gamma(base + Rational(3), Side::Left, k));
        }
    }
}

TEST_CASE("gamma rejects bad inputs") {
    CHECK_THROWS_AS(markov::gamma(Rational(2, 5), Side::Right, 1), std::invalid_argument);
    CHECK_THROWS_AS(markov::gamma(Rational(2, 5), Side::Right, 0), std::invalid_argument);
    CHECK_THROWS_AS(markov::gamma(Rational(3, 7), Side::Left, 2), std::domain_error);
    CHECK_THROWS_AS(markov::gamma(Rational(5, 12), Side::Left, 2), std::domain_error);
    CHECK_THROWS_AS(markov::gamma(Rational::infinity(), Side::Left, 2), std::invalid_argument);
    try {
        markov::gamma(Rational(3, 7), Side::Left, 2);
        CHECK(false);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("3/7") != std::string::npos);
    }
}

TEST_CASE("consecutive companions on one side are 1/(q u_k u_{k+1}) apart") {
    for (Rational base : {Rational(1, 2), Rational(2, 5), Rational(5, 13)}) {
        const mpz_class& q = base.den();
        for (long k = 2; k <= 6; ++k) {
            Rational gap =
                abs(markov::gamma(base, Side::Right, k + 1) - markov::gamma(base, Side::Right, k));
            CHECK(gap == Rational(1, q * markov::u_seq(q, k) * markov::u_seq(q, k + 1)));
        }
    }
}

TEST_CASE("interval endpoints in canonical surd form") {
    SurdInterval i0 = markov::interval(Rational(0));
    CHECK(i0.lo == QuadraticSurd(-3, 1, 2, 5));
    CHECK(i0.hi == QuadraticSurd(3, -1, 2, 5));
    CHECK(i0.hi.str() == "(3-sqrt(5))/2");

    SurdInterval ih = markov::interval(Rational(1, 2));
    CHECK(ih.hi == QuadraticSurd(2, -1, 1, 2));
    CHECK(ih.hi.str() == "2-sqrt(2)");
    CHECK(ih.lo == QuadraticSurd(-1, 1, 1, 2));
    CHECK(ih.lo.str() == "-1+sqrt(2)");

    SurdInterval iq = markov::interval(Rational(2, 5));
    CHECK(iq.hi == QuadraticSurd(19, -1, 10, 221));
    CHECK(iq.hi.str() == "(19-sqrt(221))/10");

    CHECK_THROWS_AS(markov::interval(Rational(3, 7)), std::domain_error);
}

TEST_CASE("interval midpoint and width") {
    for (Rational base :
         {Rational(0), Rational(1, 2), Rational(2, 5), Rational(5, 13), Rational(-2)}) {
        SurdInterval iv = markov::interval(base);
        const mpz_class& q = base.den();
        QuadraticSurd two(Rational(2));
        CHECK((iv.lo + iv.hi) / two == QuadraticSurd(base));
        CHECK(iv.hi - iv.lo == QuadraticSurd(3 * q, -1, q, 9 * q * q - 4));
        CHECK(markov::surd_cmp(iv.lo, base) == std::strong_ordering::less);
        CHECK(markov::surd_cmp(iv.hi, base) == std::strong_ordering::greater);
    }
}

TEST_CASE("upper endpoint is the fixed point of the translation matrix") {
    for (Rational base : {Rational(0), Rational(1, 2), Rational(2, 5), Rational(5, 13)}) {
        const mpz_class& p = base.num();
        const mpz_class& q = base.den();
        mpz_class w = (p * p + 1) / q;
        QuadraticSurd z = markov::interval(base).hi;
        // q z^2 - (3q + 2p) z + (3p + w) = 0
        QuadraticSurd expr = z * z * QuadraticSurd(Rational(q)) -
                             z * QuadraticSurd(Rational(3 * q + 2 * p)) +
                             QuadraticSurd(Rational(3 * p + w));
        CHECK(expr == QuadraticSurd(Rational(0)));
    }
}

TEST_CASE("interval membership decided rationally") {
    CHECK(markov::interval_contains(Rational(0), Rational(1, 3)));
    CHECK(markov::interval_contains(Rational(1, 2), Rational(3, 7)));
    CHECK_FALSE(markov::interval_contains(Rational(2, 5), Rational(3, 7)));
    CHECK(markov::interval_contains(Rational(1, 2), Rational(29, 70)));
    CHECK_FALSE(markov::interval_contains(Rational(1, 2), Rational(2, 5)));
    CHECK(markov::interval_contains(Rational(12, 29), Rational(12, 29)));
    CHECK_THROWS_AS(markov::interval_contains(Rational(0), Rational::infinity()),
                    std::invalid_argument);
}

TEST_CASE("membership agrees with surd comparisons against the endpoints") {
    std::vector<Rational> bases;
    for (const auto& node :
         markov::enumerate_forest(0, markov::ForestLimit::denominator(30))) {
        bases.push_back(node.triple.x2);
    }
    bases.emplace_back(0);
    bases.emplace_back(1);
    for (const Rational& base : bases) {
        SurdInterval iv = markov::interval(base);
        for (long j = -5; j <= 65; ++j) {
            Rational y(j, 60);
            bool in = markov::interval_contains(base, y);
            bool in_surd = markov::surd_cmp(iv.lo, y) != std::strong_ordering::greater &&
                           markov::surd_cmp(iv.hi, y) != std::strong_ordering::less;
            CHECK(in == in_surd);
        }
    }
}

TEST_CASE("intervals around distinct Markov fractions have disjoint interiors") {
    CHECK(markov::intervals_disjoint(Rational(0), Rational(1, 2)));
    CHECK(markov::intervals_disjoint(Rational(0), Rational(1)));
    CHECK(markov::intervals_disjoint(Rational(2, 5), Rational(12, 29)));
    CHECK(markov::intervals_disjoint(Rational(12, 29), Rational(1, 2)));
    CHECK_THROWS_AS(markov::intervals_disjoint(Rational(0), Rational(0)), std::invalid_argument);

    std::vector<Rational> bases{Rational(0), Rational(1)};
    for (const auto& node :
         markov::enumerate_forest(0, markov::ForestLimit::denominator(40))) {
        bases.push_back(node.triple.x2);
    }
    for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            CHECK(markov::intervals_disjoint(bases[i], bases[j]));
        }
    }
}

TEST_CASE("translation matrix shape and orbit at the base zero") {
    TranslationMatrix t = markov::t_matrix(Rational(0));
    CHECK(t == TranslationMatrix{0, 1, -1, 3});
    Rational x = Rational::infinity();
    const Rational orbit[] = {Rational(0), Rational(1, 3), Rational(3, 8), Rational(8, 21)};
    for (const Rational& want : orbit) {
        x = t.apply(x);
        CHECK(x == want);
    }
}

TEST_CASE("translation matrix has determinant one and trace 3q") {
    for (Rational base :
         {Rational(0), Rational(1, 2), Rational(2, 5), Rational(5, 13), Rational(-5, 2)}) {
        TranslationMatrix t = markov::t_matrix(base);
        CHECK(t.a * t.d - t.b * t.c == 1);
        CHECK(t.a + t.d == 3 * base.den());
    }
    CHECK_THROWS_AS(markov::t_matrix(Rational(3, 7)), std::domain_error);
}

TEST_CASE("translation matrix orbit of infinity lists the right companions") {
    for (Rational base : {Rational(0), Rational(2, 5), Rational(1, 2)}) {
        TranslationMatrix t = markov::t_matrix(base);
        Rational x = t.apply(Rational::infinity());
        CHECK(x == base);
        for (long k = 2; k <= 6; ++k) {
            x = t.apply(x);
            CHECK(x == markov::gamma(base, Side::Right, k));
        }
    }
}

TEST_CASE("moebius action sends the pole to infinity") {
    TranslationMatrix t = markov::t_matrix(Rational(1, 2));  // [[-1, 4], [-2, 7]]
    CHECK(t.apply(Rational(7, 2)) == Rational::infinity());
}

TEST_CASE("locating the controlling interval") {
    CHECK(markov::locate_interval(Rational(3, 7)) == Rational(1, 2));
    CHECK(markov::locate_interval(Rational(1, 3)) == Rational(0));
    CHECK(markov::locate_interval(Rational(29, 70)) == Rational(1, 2));
    CHECK(markov::locate_interval(Rational(41, 70)) == Rational(1, 2));
    CHECK(markov::locate_interval(Rational(12, 29)) == Rational(12, 29));
    CHECK(markov::locate_interval(Rational(5, 7)) == Rational(1));
    CHECK(markov::locate_interval(Rational(2, 3)) == Rational(1));
    CHECK(markov::locate_interval(Rational(463, 1120)) == Rational(2, 5));
    CHECK(markov::locate_interval(Rational(-1, 3)) == Rational(0));
    CHECK(markov::locate_interval(Rational(4)) == Rational(4));
    CHECK(markov::locate_interval(Rational(-17, 2)) == Rational(-17, 2));
    CHECK_THROWS_AS(markov::locate_interval(Rational::infinity()), std::invalid_argument);
}

TEST_CASE("recognizing companions") {
    CHECK(markov::companion_of(Rational(7, 12)) ==
          CompanionRef{Rational(1, 2), Side::Right, 2});
    CHECK(markov::companion_of(Rational(5, 12)) == CompanionRef{Rational(1, 2), Side::Left, 2});
    CHECK(markov::companion_of(Rational(29, 70)) == CompanionRef{Rational(1, 2), Side::Left, 3});
    CHECK(markov::companion_of(Rational(41, 70)) ==
          CompanionRef{Rational(1, 2), Side::Right, 3});
    CHECK(markov::companion_of(Rational(1, 3)) == CompanionRef{Rational(0), Side::Right, 2});
    CHECK(markov::companion_of(Rational(2, 3)) == CompanionRef{Rational(1), Side::Left, 2});
    CHECK(markov::companion_of(Rational(31, 75)) ==
          CompanionRef{Rational(2, 5), Side::Right, 2});
    CHECK(markov::companion_of(Rational(463, 1120)) ==
          CompanionRef{Rational(2, 5), Side::Right, 3});
    CHECK_FALSE(markov::companion_of(Rational(3, 7)).has_value());
    CHECK_FALSE(markov::companion_of(Rational(5, 7)).has_value());
    CHECK_FALSE(markov::companion_of(Rational(5, 9)).has_value());
    CHECK_THROWS_AS(markov::companion_of(Rational(12, 29)), std::domain_error);
    CHECK_THROWS_AS(markov::companion_of(Rational(4)), std::domain_error);
    CHECK_THROWS_AS(markov::companion_of(Rational::infinity()), std::invalid_argument);
}

TEST_CASE("companion recognition inverts gamma") {
    for (Rational base : {Rational(0), Rational(1, 2), Rational(2, 5), Rational(5, 13),
                          Rational(-3), Rational(7, 2)}) {
        for (Side side : {Side::Left, Side::Right}) {
            for (long k = 2; k <= 5; ++k) {
                CompanionRef want{base, side, k};
                auto got = markov::companion_of(markov::gamma(want));
                REQUIRE(got.has_value());
                CHECK(*got == want);
            }
        }
    }
}

TEST_CASE("self-intersection count and side characters") {
    CHECK(CompanionRef{Rational(0), Side::Right, 2}.self_intersections() == 1);
    CHECK(CompanionRef{Rational(0), Side::Right, 5}.self_intersections() == 4);
    CHECK(markov::side_char(Side::Left) == 'L');
    CHECK(markov::side_char(Side::Right) == 'R');
    CHECK(markov::side_from_char('L') == Side::Left);
    CHECK(markov::side_from_char('r') == Side::Right);
    CHECK_THROWS_AS(markov::side_from_char('x'), std::invalid_argument);
}
