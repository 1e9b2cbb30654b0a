// Markov triples and the binary forest of rational Markov triples, one tree
// per unit interval [n, n+1], together with the Stern-Brocot labeling mu.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "markov/rational.hpp"

namespace markov {

struct MarkovTriple {
    mpz_class q1, q2, q3;

    friend bool operator==(const MarkovTriple& a, const MarkovTriple& b) {
        return a.q1 == b.q1 && a.q2 == b.q2 && a.q3 == b.q3;
    }
};

// q1^2 + q2^2 + q3^2 == 3 q1 q2 q3 with all entries positive.
bool is_markov_triple(const MarkovTriple& t);

// Replaces the index-th entry (1-based) by 3*qj*qk - qi; an involution.
MarkovTriple vieta_neighbor(const MarkovTriple& t, int index);

// Membership in the tree of Markov numbers grown from (1, 1, 1).
bool is_markov_number(const mpz_class& q);

struct RationalMarkovTriple {
    Rational x1, x2, x3;

    MarkovTriple denominators() const { return {x1.den(), x2.den(), x3.den()}; }

    friend bool operator==(const RationalMarkovTriple& a, const RationalMarkovTriple& b) {
        return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
    }
};

bool is_rational_markov_triple(const RationalMarkovTriple& t);

enum class CompletionMode { From12, From23, From13 };

// Fills in the missing member from two of (x1, x2, x3) plus the denominator
// triple, checking the determinant relations and divisibility along the way;
// throws std::invalid_argument naming the first relation that fails.
RationalMarkovTriple complete_triple(CompletionMode mode, const Rational& a, const Rational& b,
                                     const MarkovTriple& dens);

RationalMarkovTriple left_child(const RationalMarkovTriple& t);
RationalMarkovTriple right_child(const RationalMarkovTriple& t);
std::pair<RationalMarkovTriple, RationalMarkovTriple> children(const RationalMarkovTriple& t);

// The two triples having t as a child: (y, x1, x3) via its right child and
// (x1, x3, y+3) via its left child.
std::pair<RationalMarkovTriple, RationalMarkovTriple> parents(const RationalMarkovTriple& t);

bool is_centered(const RationalMarkovTriple& t);  // middle denominator is largest

RationalMarkovTriple interval_root(const mpz_class& n);    // (n, n+1/2, n+1)
RationalMarkovTriple integral_triple(const mpz_class& n);  // (n-1, n, n+1)

// The unique centered triple with x as its middle, when one exists.
std::optional<RationalMarkovTriple> centered_triple_of(const Rational& x);

bool is_markov_fraction(const Rational& x);

struct SternBrocotPath {
    mpz_class base;     // which unit interval [n, n+1]
    std::string turns;  // 'L'/'R' from the interval root; empty = root
};

struct ForestNode {
    SternBrocotPath address;
    RationalMarkovTriple triple;
};

// Exactly one of the two limits must be set.
struct ForestLimit {
    std::optional<long> max_depth;
    std::optional<mpz_class> max_denominator;

    static ForestLimit depth(long d) { return {d, std::nullopt}; }
    static ForestLimit denominator(mpz_class q) { return {std::nullopt, std::move(q)}; }
};

// Breadth-first over the tree of interval [n, n+1], left child before right.
void enumerate_forest(const mpz_class& n, const ForestLimit& limit,
                      const std::function<void(const ForestNode&)>& fn);
std::vector<ForestNode> enumerate_forest(const mpz_class& n, const ForestLimit& limit);

// Middle fractions of the interval-0 tree indexed by nonnegative Stern-Brocot
// labels: mu(0/1) = 0/1, mu(1/0) = 1/1, and labels descend in parallel.
Rational mu(const Rational& label);
Rational mu_inverse(const Rational& x);  // throws unless x = mu(label) for some label

// All Markov fractions in [0, 1/2] with denominator <= bound, keyed by
// denominator; the uniqueness conjecture holds iff every list has length 1.
std::map<mpz_class, std::vector<Rational>> audit_uniqueness(const mpz_class& bound);

}  // namespace markov
