// Companion fractions, u-sequences, quadratic intervals, translation matrices.
#include "markov/companions.hpp"

#include <map>
#include <stdexcept>

namespace markov {

char side_char(Side s) { return s == Side::Left ? 'L' : 'R'; }

Side side_from_char(char c) {
    if (c == 'L' || c == 'l') return Side::Left;
    if (c == 'R' || c == 'r') return Side::Right;
    throw std::invalid_argument(std::string("side must be L or R, got '") + c + "'");
}

USequence::USequence(mpz_class q) : q_(std::move(q)) {
    if (q_ <= 0 || !is_markov_number(q_)) {
        throw std::invalid_argument("u-sequence needs a Markov number, and " + q_.get_str() +
                                    " is not one");
    }
    u_.push_back(0);
    u_.push_back(1);
}

mpz_class USequence::at_index(std::size_t k) {
    while (u_.size() <= k) {
        std::size_t n = u_.size();
        u_.push_back(3 * q_ * u_[n - 1] - u_[n - 2]);
    }
    return u_[k];
}

mpz_class USequence::at(long k) {
    if (k >= 0) return at_index(static_cast<std::size_t>(k));
    return -at_index(static_cast<std::size_t>(-k));
}

mpz_class u_seq(const mpz_class& q, long k) {
    thread_local std::map<mpz_class, USequence> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, USequence(q)).first;
    return it->second.at(k);
}

namespace {

void require_markov_fraction(const Rational& base, const char* what) {
    if (!is_markov_fraction(base)) {
        throw std::domain_error(std::string(what) + " needs a Markov fraction, and " +
                                base.str() + " is not one");
    }
}

// gamma without revalidating the base; callers guarantee it is Markov.
Rational gamma_raw(const Rational& base, Side side, long k) {
    mpz_class q = base.den();
    mpz_class uk = u_seq(q, k);
    mpz_class ukm1 = u_seq(q, k - 1);
    Rational offset(ukm1, q * uk);
    return side == Side::Right ? base + offset : base - offset;
}

}  // namespace

Rational gamma(const Rational& base, Side side, long k) {
    require_markov_fraction(base, "gamma");
    if (k < 2) {
        throw std::invalid_argument("gamma needs k >= 2, got " + std::to_string(k));
    }
    return gamma_raw(base, side, k);
}

Rational gamma(const CompanionRef& ref) { return gamma(ref.base, ref.side, ref.k); }

SurdInterval interval(const Rational& base) {
    require_markov_fraction(base, "interval");
    const mpz_class& p = base.num();
    const mpz_class& q = base.den();
    mpz_class d = 9 * q * q - 4;
    // base -/+ (3q - sqrt(d))/(2q)
    return SurdInterval{base, QuadraticSurd(2 * p - 3 * q, 1, 2 * q, d),
                        QuadraticSurd(2 * p + 3 * q, -1, 2 * q, d)};
}

bool interval_contains(const Rational& base, const Rational& y) {
    if (base.is_infinity() || y.is_infinity()) {
        throw std::invalid_argument("interval membership needs finite values");
    }
    // |y - base| <= 3/2 - sqrt(9/4 - 1/q^2), with both sides nonnegative,
    // squares to a rational comparison.
    Rational r = abs(y - base);
    Rational t = Rational(3, 2) - r;
    if (t < Rational(0)) return false;
    const mpz_class& q = base.den();
    return t * t >= Rational(9, 4) - Rational(1, q * q);
}

bool intervals_disjoint(const Rational& a, const Rational& b) {
    if (a == b) throw std::invalid_argument("interval disjointness needs distinct bases");
    require_markov_fraction(a, "intervals_disjoint");
    require_markov_fraction(b, "intervals_disjoint");
    // delta_a + delta_b <= |a - b| rearranges to
    // sqrt(9/4 - 1/qa^2) + sqrt(9/4 - 1/qb^2) >= 3 - |a - b|.
    Rational pa = Rational(9, 4) - Rational(1, a.den() * a.den());
    Rational pb = Rational(9, 4) - Rational(1, b.den() * b.den());
    return sqrt_sum_cmp(pa, pb, Rational(3) - abs(a - b)) >= 0;
}

Rational TranslationMatrix::apply(const Rational& x) const {
    // Lax coordinates make the point at infinity just another input.
    return Rational(a * x.num() + b * x.den(), c * x.num() + d * x.den());
}

TranslationMatrix t_matrix(const Rational& base) {
    require_markov_fraction(base, "t_matrix");
    const mpz_class& p = base.num();
    const mpz_class& q = base.den();
    mpz_class w = (p * p + 1) / q;  // integral for Markov fractions
    return TranslationMatrix{-p, 3 * p + w, -q, 3 * q + p};
}

Rational locate_interval(const Rational& y) {
    if (y.is_infinity()) throw std::invalid_argument("locate_interval needs a finite value");
    if (y.is_integer()) return y;
    RationalMarkovTriple t = interval_root(y.floor());
    for (;;) {
        if (interval_contains(t.x1, y)) return t.x1;
        if (interval_contains(t.x2, y)) return t.x2;
        if (interval_contains(t.x3, y)) return t.x3;
        t = y < t.x2 ? left_child(t) : right_child(t);
    }
}

std::optional<CompanionRef> companion_of(const Rational& y) {
    if (y.is_infinity()) throw std::invalid_argument("companion_of needs a finite value");
    Rational x = locate_interval(y);
    if (x == y) {
        throw std::domain_error(y.str() + " is a Markov fraction, not a companion");
    }
    Side side = y > x ? Side::Right : Side::Left;
    Rational d = abs(y - x);
    const mpz_class& q = x.den();
    USequence u(q);
    // gamma_k has reduced denominator q u_k, so the search ends once that
    // outgrows den(y).
    for (long k = 2;; ++k) {
        mpz_class qden = q * u.at_index(static_cast<std::size_t>(k));
        if (qden > y.den()) return std::nullopt;
        if (d == Rational(u.at_index(static_cast<std::size_t>(k - 1)), qden)) {
            return CompanionRef{x, side, k};
        }
    }
}

}  // namespace markov
