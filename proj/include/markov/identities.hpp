// Identity checks that tie the modules together: the reciprocal form of the
// Markov equation, quadratic-residue witnesses, closed-geodesic lengths, and
// exact enclosures of the McShane-style interval-length sum.
#pragma once

#include "markov/companions.hpp"
#include "markov/surd.hpp"

namespace markov {

// q1/(q2 q3) + q2/(q3 q1) + q3/(q1 q2) = 3, checked in rational arithmetic.
bool check_markov_q(const MarkovTriple& t);

// The middle numerator p2, after asserting q2 | p2^2 + 1.
mpz_class quadratic_residue_witness(const RationalMarkovTriple& t);

// e^{L/2} = (3q + sqrt(9q^2 - 4))/2 for the closed geodesic attached to the
// Markov number q; satisfies value + 1/value = 3q.
QuadraticSurd geodesic_length(const mpz_class& q);

// Verifies 1/(1 + e^L) = 2 delta_q / 6 exactly, the per-term form of the
// McShane-style identity.
bool mcshane_term(const mpz_class& q);

struct McShaneSummary {
    long depth = 0;
    Rational partial_lo, partial_hi;  // enclosure of the partial sum
};

// Sum of interval lengths 2 delta_q over Markov fractions in [0, 3) down to
// the given forest depth, each term bracketed to `bits` dyadic digits.  The
// full sum is exactly 3.
McShaneSummary mcshane_partial_sum(long depth, long bits);

}  // namespace markov
