// Exact rational arithmetic on the extended rationals, with the single point
// at infinity represented by the sentinel 1/0.
#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace markov {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(const mpz_class& n) : num_(n), den_(1) {}
    Rational(mpz_class n, mpz_class d);

    static Rational infinity();

    // Accepts "p/q" or "n" with an optional leading sign; throws
    // std::invalid_argument on anything else (including "p/0").
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_infinity() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Finite values only; throws std::domain_error for the infinite sentinel.
    mpz_class floor() const;

    std::string str() const;   // "p/q", or "p" when the denominator is 1

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpz_class num_, den_;

    void normalize();
    void require_finite(const char* op) const;
};

Rational abs(const Rational& x);

// Mediant of two extended rationals read as lax vectors:
// (a/b, c/d) -> (a+c)/(b+d).  Total; mediant(0/1, 1/0) = 1/1.
Rational mediant(const Rational& x, const Rational& y);

// n + sign*x for sign in {+1, -1}; the integer-translation/reflection group.
Rational affine_apply(const Rational& x, int sign, const mpz_class& n);

// How well p/q approximates x, scaled by q^2: q^2 * |x - p/q|.
// Rejects approximant == x and infinite arguments.
struct ApproximationQuality {
    Rational value;
};
ApproximationQuality approx_quality(const Rational& x, const Rational& approximant);

}  // namespace markov
