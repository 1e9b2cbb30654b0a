#include "markov/rational.hpp"

namespace markov {

Rational::Rational(mpz_class n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

Rational Rational::infinity() {
    Rational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
}

void Rational::normalize() {
    if (den_ == 0) {
        if (num_ == 0)
            throw std::domain_error("rational 0/0 is undefined");
        num_ = 1;  // single sentinel for the point at infinity
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

void Rational::require_finite(const char* op) const {
    if (is_infinity())
        throw std::domain_error(std::string(op) + " is undefined for the point at infinity");
}

Rational Rational::parse(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("cannot parse rational: \"" + text + "\""); };
    auto slash = text.find('/');
    auto is_int = [&](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = (allow_sign && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string s) {
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return s;
    };
    if (slash == std::string::npos) {
        if (!is_int(text, true)) bad();
        return Rational(mpz_class(strip_plus(text)));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false)) bad();
    num = strip_plus(num);
    mpz_class d(den);
    if (d == 0) bad();
    return Rational(mpz_class(num), d);
}

mpz_class Rational::floor() const {
    require_finite("floor");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (den_ == 1)
        return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.num_ = -r.num_;
    if (r.den_ == 0)
        r.num_ = 1;  // -inf folds back onto the single sentinel
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    require_finite("addition");
    o.require_finite("addition");
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    require_finite("subtraction");
    o.require_finite("subtraction");
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    require_finite("multiplication");
    o.require_finite("multiplication");
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    require_finite("division");
    o.require_finite("division");
    if (o.num_ == 0)
        throw std::domain_error("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.is_infinity() || b.is_infinity()) {
        if (a.is_infinity() && b.is_infinity())
            return std::strong_ordering::equal;
        return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    return c <=> 0;
}

Rational abs(const Rational& x) {
    return x.num() < 0 ? -x : x;
}

Rational mediant(const Rational& x, const Rational& y) {
    return Rational(x.num() + y.num(), x.den() + y.den());
}

Rational affine_apply(const Rational& x, int sign, const mpz_class& n) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("affine sign must be +1 or -1");
    if (x.is_infinity())
        return x;
    return Rational(sign * x.num() + n * x.den(), x.den());
}

ApproximationQuality approx_quality(const Rational& x, const Rational& approximant) {
    if (x.is_infinity() || approximant.is_infinity())
        throw std::domain_error("approximation quality needs finite arguments");
    if (x == approximant)
        throw std::invalid_argument("approximant must differ from the target");
    const mpz_class& q = approximant.den();
    return {abs(x - approximant) * Rational(q * q)};
}

}  // namespace markov
