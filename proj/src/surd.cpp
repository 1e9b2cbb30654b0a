#include "markov/surd.hpp"

namespace markov {

namespace {

// Largest s with s^2 dividing d (d >= 2).
mpz_class square_part(const mpz_class& d) {
    if (mpz_perfect_square_p(d.get_mpz_t()))
        return sqrt(d);
    if (d.fits_ulong_p()) {
        unsigned long rem = d.get_ui(), s = 1;
        for (unsigned long p = 2; p <= rem / p; ++p) {
            unsigned long pp = p * p;
            while (rem % pp == 0) {
                rem /= pp;
                s *= p;
            }
        }
        return mpz_class(s);
    }
    mpz_class rem = d, s = 1;
    for (mpz_class p = 2; p * p <= rem; ++p) {
        mpz_class pp = p * p;
        while (rem % pp == 0) {
            rem /= pp;
            s *= p;
        }
    }
    return s;
}

int sign_of(const mpz_class& x) {
    return sgn(x);
}

// Sign of E + F*sqrt(d).
int linear_sign(const mpz_class& E, const mpz_class& F, const mpz_class& d) {
    if (F == 0 || d == 0)
        return sign_of(E);
    int se = sign_of(E), sf = sign_of(F);
    if (se == 0 || se == sf)
        return sf;
    int c = cmp(E * E, F * F * d);
    if (c == 0)
        return 0;
    return c > 0 ? se : sf;
}

std::strong_ordering order_from_sign(int s) {
    return s <=> 0;
}

}  // namespace

QuadraticSurd::QuadraticSurd(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    canonicalize();
}

void QuadraticSurd::canonicalize() {
    if (c_ == 0)
        throw std::invalid_argument("surd denominator must be nonzero");
    if (d_ < 0)
        throw std::invalid_argument("surd radicand must be nonnegative");
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
    } else if (d_ > 1) {
        mpz_class s = square_part(d_);
        if (s > 1) {
            b_ *= s;
            d_ /= s * s;
        }
    }
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

void QuadraticSurd::require_same_field(const QuadraticSurd& o) const {
    if (b_ != 0 && o.b_ != 0 && d_ != o.d_)
        throw std::domain_error("surds lie in different quadratic fields");
}

Rational QuadraticSurd::rational_value() const {
    if (!is_rational())
        throw std::domain_error("surd is irrational");
    return Rational(a_, c_);
}

int QuadraticSurd::sign() const {
    return linear_sign(a_, b_, d_);
}

QuadraticSurd QuadraticSurd::operator-() const {
    QuadraticSurd r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
    require_same_field(o);
    mpz_class d = b_ != 0 ? d_ : o.d_;
    a_ = a_ * o.c_ + o.a_ * c_;
    b_ = b_ * o.c_ + o.b_ * c_;
    c_ *= o.c_;
    d_ = d;
    canonicalize();
    return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) {
    return *this += -o;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
    require_same_field(o);
    mpz_class d = b_ != 0 ? d_ : o.d_;
    mpz_class a = a_ * o.a_ + b_ * o.b_ * d;
    mpz_class b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    c_ *= o.c_;
    d_ = d;
    canonicalize();
    return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
    require_same_field(o);
    if (o.sign() == 0)
        throw std::domain_error("division by zero surd");
    mpz_class d = b_ != 0 ? d_ : o.d_;
    mpz_class norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
    return *this *= QuadraticSurd(o.c_ * o.a_, -o.c_ * o.b_, norm, d);
}

std::string QuadraticSurd::str() const {
    if (is_rational())
        return rational_value().str();
    std::string core;
    if (a_ != 0) {
        core = a_.get_str();
        core += b_ > 0 ? "+" : "-";
    } else if (b_ < 0) {
        core = "-";
    }
    mpz_class ab = abs(b_);
    if (ab != 1)
        core += ab.get_str() + "*";
    core += "sqrt(" + d_.get_str() + ")";
    if (c_ == 1)
        return core;
    return "(" + core + ")/" + c_.get_str();
}

std::strong_ordering surd_cmp(const QuadraticSurd& s, const Rational& r) {
    if (r.is_infinity())
        return std::strong_ordering::less;
    // s - r = ((a q - p c) + b q sqrt(d)) / (c q) with c q > 0
    mpz_class E = s.a() * r.den() - r.num() * s.c();
    mpz_class F = s.b() * r.den();
    return order_from_sign(linear_sign(E, F, s.d()));
}

namespace {

// floor(value(s) * 2^bits), exactly.
mpz_class floor_scaled(const QuadraticSurd& s, unsigned bits) {
    mpz_class A = s.a() << bits;
    mpz_class B = s.b() << bits;
    mpz_class fB = 0;
    if (B != 0 && s.d() > 0) {
        mpz_class sq = B * B * s.d();
        mpz_class t = sqrt(sq);
        if (B > 0) {
            fB = t;
        } else if (t * t == sq) {
            fB = -t;
        } else {
            fB = -(t + 1);
        }
    }
    mpz_class M = A + fB, N;
    mpz_fdiv_q(N.get_mpz_t(), M.get_mpz_t(), s.c().get_mpz_t());
    return N;
}

}  // namespace

std::pair<Rational, Rational> surd_bracket(const QuadraticSurd& s, unsigned bits) {
    if (s.is_rational()) {
        Rational v = s.rational_value();
        return {v, v};
    }
    mpz_class N = floor_scaled(s, bits);
    mpz_class scale = mpz_class(1) << bits;
    return {Rational(N, scale), Rational(N + 1, scale)};
}

mpz_class floor_surd(const QuadraticSurd& s) {
    return floor_scaled(s, 0);
}

std::strong_ordering sqrt_sum_cmp(const Rational& x, const Rational& y, const Rational& r) {
    if (x < Rational(0) || y < Rational(0))
        throw std::invalid_argument("sqrt_sum_cmp needs nonnegative radicands");
    bool zero = x.num() == 0 && y.num() == 0;
    if (r.num() <= 0) {
        if (zero)
            return Rational(0) <=> r;
        return std::strong_ordering::greater;
    }
    if (zero)
        return std::strong_ordering::less;
    // square twice, tracking that both sides stay nonnegative
    Rational t = r * r - (x + y);
    if (t < Rational(0))
        return std::strong_ordering::greater;
    return Rational(4) * x * y <=> t * t;
}

std::pair<Rational, Rational> sqrt_bracket(const Rational& x, unsigned bits) {
    if (x < Rational(0))
        throw std::invalid_argument("sqrt_bracket needs a nonnegative radicand");
    // floor(sqrt(p/q) * 2^bits) = isqrt(floor(p * 4^bits / q))
    mpz_class scaled_p = x.num() << (2 * bits);
    mpz_class inner, N;
    mpz_fdiv_q(inner.get_mpz_t(), scaled_p.get_mpz_t(), x.den().get_mpz_t());
    N = sqrt(inner);
    mpz_class scale = mpz_class(1) << bits;
    if (N * N * x.den() == scaled_p)
        return {Rational(N, scale), Rational(N, scale)};
    return {Rational(N, scale), Rational(N + 1, scale)};
}

}  // namespace markov
