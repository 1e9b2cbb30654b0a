// Real quadratic surds (a + b*sqrt(d))/c in a canonical form: c > 0, d >= 0
// square-free, gcd(a, b, c) = 1, and b = 0, d = 0 exactly when the value is
// rational.  Comparisons against rationals and dyadic enclosures are exact;
// no floating point is involved anywhere.
#pragma once

#include <compare>
#include <string>
#include <utility>

#include "markov/rational.hpp"

namespace markov {

class QuadraticSurd {
public:
    QuadraticSurd() : a_(0), b_(0), c_(1), d_(0) {}
    QuadraticSurd(const Rational& r) : a_(r.num()), b_(0), c_(r.den()), d_(0) {
        if (r.is_infinity())
            throw std::domain_error("surd from the point at infinity");
    }
    QuadraticSurd(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    const mpz_class& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    Rational rational_value() const;  // requires is_rational()

    int sign() const;

    QuadraticSurd operator-() const;
    QuadraticSurd& operator+=(const QuadraticSurd& o);
    QuadraticSurd& operator-=(const QuadraticSurd& o);
    QuadraticSurd& operator*=(const QuadraticSurd& o);
    QuadraticSurd& operator/=(const QuadraticSurd& o);

    friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
    friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
    friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
    friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }

    // Canonical forms are equal exactly when the values are equal.
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

    std::string str() const;  // "(a+b*sqrt(d))/c" with the obvious cosmetic trims

private:
    mpz_class a_, b_, c_, d_;

    void canonicalize();
    void require_same_field(const QuadraticSurd& o) const;
};

// Exact order of a surd against a rational.
std::strong_ordering surd_cmp(const QuadraticSurd& s, const Rational& r);

// Dyadic enclosure lo <= s <= hi with hi - lo <= 2^-bits; collapses to the
// exact value when s is rational.
std::pair<Rational, Rational> surd_bracket(const QuadraticSurd& s, unsigned bits);

mpz_class floor_surd(const QuadraticSurd& s);

// Exact order of sqrt(x) + sqrt(y) against a rational r, for x, y >= 0.
std::strong_ordering sqrt_sum_cmp(const Rational& x, const Rational& y, const Rational& r);

// Dyadic enclosure of sqrt(x) for rational x >= 0, without building a surd
// (and so without square-free reduction of huge radicands).
std::pair<Rational, Rational> sqrt_bracket(const Rational& x, unsigned bits);

}  // namespace markov
