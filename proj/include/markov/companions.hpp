// Companion fractions gamma_k around each Markov fraction, the recurrence
// u_{k+1} = 3q u_k - u_{k-1} driving them, the closed quadratic interval I_x
// each Markov fraction controls, and the translation matrix whose orbit of
// infinity walks the right companions.
#pragma once

#include <optional>

#include "markov/forest.hpp"
#include "markov/surd.hpp"

namespace markov {

enum class Side { Left, Right };

char side_char(Side s);
Side side_from_char(char c);

class USequence {
public:
    explicit USequence(mpz_class q);  // q must be a Markov number

    const mpz_class& q() const { return q_; }
    mpz_class at_index(std::size_t k);  // u_k for k >= 0
    mpz_class at(long k);               // extends by u_{-k} = -u_k

private:
    mpz_class q_;
    std::vector<mpz_class> u_;
};

// Cached per (q, thread); validates q like USequence does.
mpz_class u_seq(const mpz_class& q, long k);

struct CompanionRef {
    Rational base;
    Side side;
    long k;  // k >= 2; gamma_1 is the base itself and is not a companion

    // the geodesic loop for gamma_k crosses itself k-1 times
    long self_intersections() const { return k - 1; }

    friend bool operator==(const CompanionRef& a, const CompanionRef& b) {
        return a.base == b.base && a.side == b.side && a.k == b.k;
    }
};

// base +/- u_{k-1}/(q u_k); requires a Markov fraction base and k >= 2.
Rational gamma(const Rational& base, Side side, long k);
Rational gamma(const CompanionRef& ref);

struct SurdInterval {
    Rational base;
    QuadraticSurd lo, hi;  // base -/+ delta_q with delta_q = 3/2 - sqrt(9/4 - 1/q^2)
};
SurdInterval interval(const Rational& base);

// Exact membership y in [base - delta_q, base + delta_q], by rational
// arithmetic alone.
bool interval_contains(const Rational& base, const Rational& y);

// Whether the open interiors of the intervals around two distinct Markov
// fractions are disjoint; decided exactly.
bool intervals_disjoint(const Rational& a, const Rational& b);

struct TranslationMatrix {
    mpz_class a, b, c, d;  // row-major [[a, b], [c, d]], det = 1, trace = 3q

    Rational apply(const Rational& x) const;  // Moebius action on extended rationals

    friend bool operator==(const TranslationMatrix& s, const TranslationMatrix& t) {
        return s.a == t.a && s.b == t.b && s.c == t.c && s.d == t.d;
    }
};
TranslationMatrix t_matrix(const Rational& base);

// The Markov fraction whose closed interval contains y.
Rational locate_interval(const Rational& y);

// Recognizes y = gamma_k(x) for the Markov fraction x whose interval holds y;
// empty when y is no companion.  Rejects Markov fractions themselves.
std::optional<CompanionRef> companion_of(const Rational& y);

}  // namespace markov
