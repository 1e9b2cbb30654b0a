#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "markov/forest.hpp"

using namespace markov;

namespace {
Rational rat(const char* s) { return Rational::parse(s); }
RationalMarkovTriple triple(const char* a, const char* b, const char* c) {
    return {rat(a), rat(b), rat(c)};
}
}

TEST_CASE("markov triples") {
    CHECK(is_markov_triple({1, 1, 1}));
    CHECK(is_markov_triple({1, 5, 2}));
    CHECK(is_markov_triple({2, 29, 5}));
    CHECK_FALSE(is_markov_triple({1, 2, 3}));
    CHECK_FALSE(is_markov_triple({0, 0, 0}));
    CHECK_FALSE(is_markov_triple({1, -1, 1}));
}

TEST_CASE("vieta neighbors") {
    MarkovTriple t{1, 5, 2};
    CHECK(vieta_neighbor(t, 1) == MarkovTriple{29, 5, 2});
    CHECK(vieta_neighbor(t, 2) == MarkovTriple{1, 1, 2});
    CHECK(vieta_neighbor(t, 3) == MarkovTriple{1, 5, 13});
    for (int i = 1; i <= 3; ++i) {
        CHECK(is_markov_triple(vieta_neighbor(t, i)));
        CHECK(vieta_neighbor(vieta_neighbor(t, i), i) == t);
    }
    CHECK_THROWS_AS(vieta_neighbor(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(vieta_neighbor({1, 2, 3}, 1), std::invalid_argument);
}

TEST_CASE("markov numbers") {
    std::set<long> expect{1,    2,    5,    13,   29,   34,   89,   169,  194,
                          233,  433,  610,  985,  1325, 1597, 2897, 4181, 5741,
                          6466, 7561, 9077};
    for (long q = 1; q <= 10000; ++q)
        CHECK(is_markov_number(q) == (expect.count(q) != 0));
    CHECK(is_markov_number(mpz_class(9647009)));
    CHECK_FALSE(is_markov_number(mpz_class(9647010)));
    CHECK_FALSE(is_markov_number(0));
    CHECK_FALSE(is_markov_number(-5));
}

TEST_CASE("triple validation") {
    CHECK(is_rational_markov_triple(triple("0", "1/2", "1")));
    CHECK(is_rational_markov_triple(triple("0", "2/5", "1/2")));
    CHECK(is_rational_markov_triple(triple("12/29", "1/2", "17/5")));
    CHECK_FALSE(is_rational_markov_triple(triple("0", "1/2", "2")));
    CHECK_FALSE(is_rational_markov_triple(triple("1/2", "0", "1")));
}

TEST_CASE("complete_triple") {
    CHECK(complete_triple(CompletionMode::From12, rat("0"), rat("2/5"), {1, 5, 2}) ==
          triple("0", "2/5", "1/2"));
    CHECK(complete_triple(CompletionMode::From13, rat("0"), rat("1"), {1, 2, 1}) ==
          triple("0", "1/2", "1"));
    CHECK(complete_triple(CompletionMode::From13, rat("0"), rat("1/2"), {1, 5, 2}) ==
          triple("0", "2/5", "1/2"));
    CHECK(complete_triple(CompletionMode::From23, rat("2/5"), rat("1/2"), {1, 5, 2}) ==
          triple("0", "2/5", "1/2"));
    CHECK(complete_triple(CompletionMode::From12, rat("2/5"), rat("12/29"), {5, 29, 2}) ==
          triple("2/5", "12/29", "1/2"));

    CHECK_THROWS_WITH_AS(complete_triple(CompletionMode::From12, rat("0"), rat("3/5"), {1, 5, 2}),
                         "determinant relation p2*q1 - p1*q2 = q3 failed", std::invalid_argument);
    CHECK_THROWS_AS(complete_triple(CompletionMode::From12, rat("0"), rat("2/5"), {1, 5, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(complete_triple(CompletionMode::From12, rat("0"), rat("1/2"), {1, 5, 2}),
                    std::invalid_argument);
}

TEST_CASE("children") {
    RationalMarkovTriple root = interval_root(0);
    CHECK(root == triple("0", "1/2", "1"));
    CHECK(left_child(root).x2 == rat("2/5"));
    CHECK(right_child(root).x2 == rat("3/5"));
    RationalMarkovTriple t = triple("0", "2/5", "1/2");
    CHECK(left_child(t) == triple("0", "5/13", "2/5"));
    CHECK(right_child(t) == triple("2/5", "12/29", "1/2"));
    auto [l, r] = children(t);
    CHECK(l == left_child(t));
    CHECK(r == right_child(t));
}

TEST_CASE("parents") {
    auto [via_right, via_left] = parents(interval_root(0));
    CHECK(via_right == triple("-1", "0", "1"));
    CHECK(via_left == triple("0", "1", "2"));
    // down one level the parents recover the tree edge plus an integer shift
    RationalMarkovTriple t = triple("0", "2/5", "1/2");
    auto [pr, pl] = parents(t);
    CHECK(pl == interval_root(0));
    CHECK(pr == triple("-2", "0", "1/2"));
    CHECK(right_child(pr) == t);
    // tree edges: the left child's via_left parent and the right child's
    // via_right parent are the node itself
    RationalMarkovTriple nodes[] = {interval_root(0), t, triple("2/5", "12/29", "1/2"),
                                    interval_root(-2), triple("12/29", "1/2", "17/5")};
    for (const auto& n : nodes) {
        CHECK(parents(left_child(n)).second == n);
        CHECK(parents(right_child(n)).first == n);
    }
}

TEST_CASE("centered") {
    CHECK(is_centered(triple("0", "2/5", "1/2")));
    CHECK(is_centered(interval_root(3)));
    CHECK(is_centered(integral_triple(7)));
    CHECK_FALSE(is_centered(triple("12/29", "1/2", "17/5")));
    // both children of a centered triple are centered
    std::vector<RationalMarkovTriple> lvl{interval_root(0)};
    for (int d = 0; d < 6; ++d) {
        std::vector<RationalMarkovTriple> nxt;
        for (const auto& t : lvl) {
            CHECK(is_centered(t));
            auto [l, r] = children(t);
            nxt.push_back(l);
            nxt.push_back(r);
        }
        lvl = nxt;
    }
}

TEST_CASE("centered_triple_of") {
    CHECK(centered_triple_of(rat("12/29")) == triple("2/5", "12/29", "1/2"));
    CHECK(centered_triple_of(rat("5")) == triple("4", "5", "6"));
    CHECK(centered_triple_of(rat("1/2")) == interval_root(0));
    CHECK(centered_triple_of(rat("-5/2")) == interval_root(-3));
    CHECK(centered_triple_of(rat("70/169")).has_value());
    CHECK_FALSE(centered_triple_of(rat("3/7")).has_value());
    CHECK_FALSE(centered_triple_of(rat("1/3")).has_value());
    CHECK_THROWS_AS(centered_triple_of(Rational::infinity()), std::invalid_argument);
}

TEST_CASE("markov fractions") {
    CHECK(is_markov_fraction(rat("70/169")));
    CHECK(is_markov_fraction(rat("89/233")));
    CHECK(is_markov_fraction(rat("-3")));
    CHECK(is_markov_fraction(rat("9/2")));
    CHECK(is_markov_fraction(rat("12/29") + Rational(7)));
    CHECK_FALSE(is_markov_fraction(rat("1/3")));
    CHECK_FALSE(is_markov_fraction(rat("3/7")));
    CHECK_FALSE(is_markov_fraction(rat("5/12")));
}

TEST_CASE("enumerate_forest by denominator") {
    auto nodes = enumerate_forest(0, ForestLimit::denominator(30));
    std::set<Rational> middles;
    for (const auto& n : nodes)
        middles.insert(n.triple.x2);
    std::set<Rational> expect{rat("1/2"),  rat("2/5"),  rat("12/29"), rat("5/13"),
                              rat("17/29"), rat("3/5"),  rat("8/13")};
    CHECK(middles == expect);
    // breadth-first, left before right
    CHECK(nodes[0].address.turns == "");
    CHECK(nodes[1].address.turns == "L");
    CHECK(nodes[2].address.turns == "R");
    CHECK(nodes[0].address.base == 0);
}

TEST_CASE("enumerate_forest by depth") {
    CHECK(enumerate_forest(0, ForestLimit::depth(0)).size() == 1);
    for (long d = 0; d <= 6; ++d) {
        auto nodes = enumerate_forest(2, ForestLimit::depth(d));
        CHECK(nodes.size() == (2u << d) - 1);
    }
    // path addresses replay to the triple they are stored with
    for (const auto& node : enumerate_forest(1, ForestLimit::depth(4))) {
        RationalMarkovTriple t = interval_root(node.address.base);
        for (char c : node.address.turns)
            t = c == 'L' ? left_child(t) : right_child(t);
        CHECK(t == node.triple);
    }
    ForestLimit both;
    both.max_depth = 2;
    both.max_denominator = 10;
    CHECK_THROWS_AS(enumerate_forest(0, both), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_forest(0, ForestLimit{}), std::invalid_argument);
}

TEST_CASE("mu") {
    CHECK(mu(rat("0")) == rat("0"));
    CHECK(mu(Rational::infinity()) == rat("1"));
    CHECK(mu(rat("1/3")) == rat("5/13"));
    CHECK(mu(rat("1/2")) == rat("2/5"));
    CHECK(mu(rat("2/3")) == rat("12/29"));
    CHECK(mu(rat("1")) == rat("1/2"));
    CHECK(mu(rat("3/2")) == rat("17/29"));
    CHECK(mu(rat("2")) == rat("3/5"));
    CHECK(mu(rat("3")) == rat("8/13"));
    CHECK_THROWS_AS(mu(rat("-1/2")), std::domain_error);
    // mu(n/m) + mu(m/n) = 1
    for (long m = 1; m <= 15; ++m)
        for (long n = 0; n <= 15; ++n) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), mpz_class(m).get_mpz_t(), mpz_class(n).get_mpz_t());
            if (g != 1)
                continue;
            Rational a = mu(Rational(n, m));
            Rational b = n == 0 ? mu(Rational::infinity()) : mu(Rational(m, n));
            CHECK(a + b == Rational(1));
        }
}

TEST_CASE("mu_inverse") {
    CHECK(mu_inverse(rat("5/13")) == rat("1/3"));
    CHECK(mu_inverse(rat("8/13")) == rat("3"));
    CHECK(mu_inverse(rat("0")) == rat("0"));
    CHECK(mu_inverse(rat("1")) == Rational::infinity());
    CHECK(mu_inverse(rat("1/2")) == rat("1"));
    CHECK_THROWS_AS(mu_inverse(rat("1/3")), std::domain_error);
    CHECK_THROWS_AS(mu_inverse(rat("3/2")), std::domain_error);
    CHECK_THROWS_AS(mu_inverse(rat("-1/2")), std::domain_error);
    // round trip through the forest
    for (const auto& node : enumerate_forest(0, ForestLimit::depth(5)))
        CHECK(mu(mu_inverse(node.triple.x2)) == node.triple.x2);
}

TEST_CASE("audit_uniqueness") {
    auto a1 = audit_uniqueness(1);
    CHECK(a1.size() == 1);
    CHECK(a1.at(1) == std::vector<Rational>{rat("0")});

    auto a1000 = audit_uniqueness(1000);
    std::vector<long> dens;
    for (const auto& [q, v] : a1000) {
        CHECK(v.size() == 1);
        dens.push_back(q.get_si());
    }
    CHECK(dens == std::vector<long>{1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985});
    CHECK(a1000.at(5) == std::vector<Rational>{rat("2/5")});
    CHECK(a1000.at(985) == std::vector<Rational>{rat("408/985")});
    CHECK_THROWS_AS(audit_uniqueness(0), std::invalid_argument);
}
