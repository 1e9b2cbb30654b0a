// The approximation constant C(x) = min over p/q != x of q^2 |x - p/q|, its
// closed forms on Markov fractions and companions, a brute-force evaluator
// used as the oracle, and the three-way classification by C(x) >= 1/3.
#pragma once

#include <variant>
#include <vector>

#include "markov/companions.hpp"

namespace markov {

struct BestApproximation {
    Rational constant;              // C(x), attained
    std::vector<Rational> argmins;  // every attaining p/q, ascending
};

// Exact minimum over reduced p/q != x with 1 <= q <= den(x); the minimum over
// all fractions is attained in that range.  Per q only the floor and ceiling
// of xq can win (the neighbors x +/- 1/q when xq is an integer).
BestApproximation c_constant_bruteforce(const Rational& x);

// C of the middle of a centered triple: q1 q3 / q2.
Rational c_markov(const RationalMarkovTriple& t);

// C(gamma_k) = q u_{k-1} / u_k; at least 1/3, with equality exactly at k = 2.
Rational c_companion(const CompanionRef& ref);

struct MarkovFractionCase {
    RationalMarkovTriple triple;  // centered triple with the input as middle
};
struct CompanionCase {
    CompanionRef ref;
};
struct NeitherCase {
    Rational witness;  // approximant certifying C < 1/3
    Rational quality;  // its q^2 |x - p/q|, equal to C(x)
};
using Classification = std::variant<MarkovFractionCase, CompanionCase, NeitherCase>;

Classification classify(const Rational& y);
const char* classification_name(const Classification& c);

// The constant classify implies: c_markov, c_companion, or the witness quality.
Rational classified_constant(const Classification& c);

// e^d = 2 q^2 |x - p/q| for the distance d from the horocycle at p/q to the
// vertical geodesic at x; kept exact by returning the exponential.
Rational horocycle_gap(const Rational& x, const mpz_class& p, const mpz_class& q);

// Consecutive companions leave no room for a third value with C >= 1/3:
// |gamma_{k+1} - gamma_k| < 1/(3 q^2 u_{k+1}^2) + 1/(3 q^2 u_k^2), checked
// exactly; k = 1 compares the base with its first companion.
bool gap_inequality_check(const Rational& base, Side side, long k);

}  // namespace markov
