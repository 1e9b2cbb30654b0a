// Approximation constants, best approximants, and the classification.
#include "markov/approximation.hpp"

#include <algorithm>
#include <stdexcept>

namespace markov {

BestApproximation c_constant_bruteforce(const Rational& x) {
    if (x.is_infinity())
        throw std::invalid_argument("approximation constant needs a finite value");
    const mpz_class& a = x.num();
    const mpz_class& b = x.den();
    BestApproximation best;
    bool have = false;
    for (mpz_class q = 1; q <= b; ++q) {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), mpz_class(a * q).get_mpz_t(), b.get_mpz_t());
        std::vector<mpz_class> ps;
        if (f * b == a * q) {
            ps = {f - 1, f + 1};  // xq integral: the excluded p is xq itself
        } else {
            ps = {f, f + 1};
        }
        for (const mpz_class& p : ps) {
            if (gcd(p, q) != 1) continue;
            // q^2 |x - p/q| = q |a q - p b| / b
            Rational quality(q * abs(a * q - p * b), b);
            if (!have || quality < best.constant) {
                best.constant = quality;
                best.argmins.clear();
                have = true;
            }
            if (quality == best.constant) best.argmins.emplace_back(p, q);
        }
    }
    std::sort(best.argmins.begin(), best.argmins.end());
    return best;
}

Rational c_markov(const RationalMarkovTriple& t) {
    if (!is_centered(t)) {
        throw std::domain_error("approximation constant formula needs a centered triple");
    }
    auto [q1, q2, q3] = t.denominators();
    return Rational(q1 * q3, q2);
}

Rational c_companion(const CompanionRef& ref) {
    if (ref.k < 2) {
        throw std::invalid_argument("companion constant needs k >= 2, got " +
                                    std::to_string(ref.k));
    }
    const mpz_class& q = ref.base.den();
    return Rational(q * u_seq(q, ref.k - 1), u_seq(q, ref.k));
}

Classification classify(const Rational& y) {
    if (y.is_infinity()) throw std::invalid_argument("classify needs a finite value");
    if (auto t = centered_triple_of(y)) return MarkovFractionCase{*t};
    if (auto ref = companion_of(y)) return CompanionCase{*ref};
    BestApproximation oracle = c_constant_bruteforce(y);
    return NeitherCase{oracle.argmins.front(), oracle.constant};
}

const char* classification_name(const Classification& c) {
    switch (c.index()) {
        case 0: return "MarkovFraction";
        case 1: return "Companion";
        default: return "Neither";
    }
}

Rational classified_constant(const Classification& c) {
    if (const auto* m = std::get_if<MarkovFractionCase>(&c)) return c_markov(m->triple);
    if (const auto* g = std::get_if<CompanionCase>(&c)) return c_companion(g->ref);
    return std::get<NeitherCase>(c).quality;
}

Rational horocycle_gap(const Rational& x, const mpz_class& p, const mpz_class& q) {
    if (x.is_infinity()) throw std::invalid_argument("horocycle gap needs a finite value");
    if (q <= 0) throw std::invalid_argument("horocycle gap needs a positive denominator");
    if (gcd(p, q) != 1) throw std::invalid_argument("horocycle gap needs a reduced fraction");
    if (p * x.den() == x.num() * q) {
        throw std::domain_error("horocycle gap undefined at the fraction itself");
    }
    return Rational(2 * q * abs(x.num() * q - p * x.den()), x.den());
}

bool gap_inequality_check(const Rational& base, Side side, long k) {
    if (!is_markov_fraction(base)) {
        throw std::domain_error("gap inequality needs a Markov fraction base");
    }
    if (k < 1) throw std::invalid_argument("gap inequality needs k >= 1");
    const mpz_class& q = base.den();
    mpz_class uk = u_seq(q, k);
    mpz_class uk1 = u_seq(q, k + 1);
    Rational offset_k(u_seq(q, k - 1), q * uk);
    Rational offset_k1(uk, q * uk1);
    Rational gk = side == Side::Right ? base + offset_k : base - offset_k;
    Rational gk1 = side == Side::Right ? base + offset_k1 : base - offset_k1;
    Rational rhs = Rational(1, 3 * q * q * uk1 * uk1) + Rational(1, 3 * q * q * uk * uk);
    return abs(gk1 - gk) < rhs;
}

}  // namespace markov
