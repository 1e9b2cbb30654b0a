#include "markov/forest.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

namespace markov {

namespace {

void require_valid(const RationalMarkovTriple& t) {
    if (t.x1.is_infinity() || t.x2.is_infinity() || t.x3.is_infinity())
        throw std::invalid_argument("triple members must be finite");
    if (!(t.x1 < t.x2 && t.x2 < t.x3))
        throw std::invalid_argument("triple is not increasing");
    const mpz_class &p1 = t.x1.num(), &q1 = t.x1.den();
    const mpz_class &p2 = t.x2.num(), &q2 = t.x2.den();
    const mpz_class &p3 = t.x3.num(), &q3 = t.x3.den();
    if (p2 * q1 - p1 * q2 != q3)
        throw std::invalid_argument("determinant relation p2*q1 - p1*q2 = q3 failed");
    if (p3 * q2 - p2 * q3 != q1)
        throw std::invalid_argument("determinant relation p3*q2 - p2*q3 = q1 failed");
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den, const char* what) {
    if (num % den != 0)
        throw std::invalid_argument(std::string(what) + " is not integral");
    return num / den;
}

}  // namespace

bool is_markov_triple(const MarkovTriple& t) {
    if (t.q1 < 1 || t.q2 < 1 || t.q3 < 1)
        return false;
    return t.q1 * t.q1 + t.q2 * t.q2 + t.q3 * t.q3 == 3 * t.q1 * t.q2 * t.q3;
}

MarkovTriple vieta_neighbor(const MarkovTriple& t, int index) {
    if (!is_markov_triple(t))
        throw std::invalid_argument("not a Markov triple");
    MarkovTriple r = t;
    switch (index) {
        case 1: r.q1 = 3 * t.q2 * t.q3 - t.q1; break;
        case 2: r.q2 = 3 * t.q3 * t.q1 - t.q2; break;
        case 3: r.q3 = 3 * t.q1 * t.q2 - t.q3; break;
        default: throw std::invalid_argument("vieta index must be 1, 2 or 3");
    }
    return r;
}

bool is_markov_number(const mpz_class& q) {
    if (q < 1)
        return false;
    if (q <= 2)
        return true;
    static thread_local std::set<mpz_class> known;
    static thread_local mpz_class explored = 0;
    if (q > explored) {
        known.clear();
        known.insert(1);
        known.insert(2);
        std::vector<std::array<mpz_class, 3>> stack;
        if (q >= 5)
            stack.push_back({1, 2, 5});
        while (!stack.empty()) {
            auto [a, b, c] = stack.back();
            stack.pop_back();
            known.insert(c);
            mpz_class m1 = 3 * a * c - b;  // replaces b, keeps (a, c)
            if (m1 <= q)
                stack.push_back({a, c, m1});
            mpz_class m2 = 3 * b * c - a;  // replaces a, keeps (b, c)
            if (m2 <= q)
                stack.push_back({b, c, m2});
        }
        explored = q;
    }
    return known.count(q) != 0;
}

bool is_rational_markov_triple(const RationalMarkovTriple& t) {
    try {
        require_valid(t);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

RationalMarkovTriple complete_triple(CompletionMode mode, const Rational& a, const Rational& b,
                                     const MarkovTriple& dens) {
    if (!is_markov_triple(dens))
        throw std::invalid_argument("denominators do not satisfy the Markov equation");
    const mpz_class &q1 = dens.q1, &q2 = dens.q2, &q3 = dens.q3;
    RationalMarkovTriple t;
    switch (mode) {
        case CompletionMode::From12: {
            if (a.den() != q1 || b.den() != q2)
                throw std::invalid_argument("given fractions do not match the denominator triple");
            const mpz_class &p1 = a.num(), &p2 = b.num();
            if (p2 * q1 - p1 * q2 != q3)
                throw std::invalid_argument("determinant relation p2*q1 - p1*q2 = q3 failed");
            mpz_class w = exact_div(p2 * p2 + 1, q2, "(p2^2+1)/q2");
            t = {a, b, Rational(q1 * w - p1 * p2, q3)};
            break;
        }
        case CompletionMode::From23: {
            if (a.den() != q2 || b.den() != q3)
                throw std::invalid_argument("given fractions do not match the denominator triple");
            const mpz_class &p2 = a.num(), &p3 = b.num();
            if (p3 * q2 - p2 * q3 != q1)
                throw std::invalid_argument("determinant relation p3*q2 - p2*q3 = q1 failed");
            mpz_class w = exact_div(p2 * p2 + 1, q2, "(p2^2+1)/q2");
            t = {Rational(p2 * p3 - q3 * w, q1), a, b};
            break;
        }
        case CompletionMode::From13: {
            if (a.den() != q1 || b.den() != q3)
                throw std::invalid_argument("given fractions do not match the denominator triple");
            const mpz_class &p1 = a.num(), &p3 = b.num();
            mpz_class q2p = exact_div(q1 * q1 + q3 * q3, q2, "(q1^2+q3^2)/q2");
            if (p3 * q1 - p1 * q3 != q2p)
                throw std::invalid_argument("determinant relation p3*q1 - p1*q3 = (q1^2+q3^2)/q2 failed");
            mpz_class p2 = exact_div(p1 * q1 + p3 * q3, q2p, "middle numerator (p1*q1+p3*q3)/q2'");
            t = {a, Rational(p2, q2), b};
            break;
        }
    }
    require_valid(t);
    if (t.x2.den() != q2)
        throw std::invalid_argument("completed middle is not in lowest terms over q2");
    return t;
}

RationalMarkovTriple left_child(const RationalMarkovTriple& t) {
    require_valid(t);
    const mpz_class &p1 = t.x1.num(), &q1 = t.x1.den();
    const mpz_class &p2 = t.x2.num(), &q2 = t.x2.den();
    const mpz_class &q3 = t.x3.den();
    mpz_class q = exact_div(q1 * q1 + q2 * q2, q3, "left child denominator");
    mpz_class p = exact_div(p1 * q1 + p2 * q2, q3, "left child numerator");
    return {t.x1, Rational(p, q), t.x2};
}

RationalMarkovTriple right_child(const RationalMarkovTriple& t) {
    require_valid(t);
    const mpz_class &p2 = t.x2.num(), &q2 = t.x2.den();
    const mpz_class &p3 = t.x3.num(), &q3 = t.x3.den();
    const mpz_class &q1 = t.x1.den();
    mpz_class q = exact_div(q2 * q2 + q3 * q3, q1, "right child denominator");
    mpz_class p = exact_div(p2 * q2 + p3 * q3, q1, "right child numerator");
    return {t.x2, Rational(p, q), t.x3};
}

std::pair<RationalMarkovTriple, RationalMarkovTriple> children(const RationalMarkovTriple& t) {
    return {left_child(t), right_child(t)};
}

std::pair<RationalMarkovTriple, RationalMarkovTriple> parents(const RationalMarkovTriple& t) {
    require_valid(t);
    const mpz_class &p1 = t.x1.num(), &q1 = t.x1.den();
    const mpz_class &q2 = t.x2.den();
    const mpz_class &p3 = t.x3.num(), &q3 = t.x3.den();
    mpz_class qp = exact_div(q1 * q1 + q3 * q3, q2, "parent middle denominator");
    mpz_class w = exact_div(p1 * p1 + 1, q1, "(p1^2+1)/q1");
    Rational y(p3 * p1 - w * q3, qp);
    RationalMarkovTriple via_right{y, t.x1, t.x3};
    RationalMarkovTriple via_left{t.x1, t.x3, y + Rational(3)};
    require_valid(via_right);
    require_valid(via_left);
    return {via_right, via_left};
}

bool is_centered(const RationalMarkovTriple& t) {
    require_valid(t);
    return t.x2.den() >= t.x1.den() && t.x2.den() >= t.x3.den();
}

RationalMarkovTriple interval_root(const mpz_class& n) {
    return {Rational(n), Rational(2 * n + 1, 2), Rational(n + 1)};
}

RationalMarkovTriple integral_triple(const mpz_class& n) {
    return {Rational(n - 1), Rational(n), Rational(n + 1)};
}

std::optional<RationalMarkovTriple> centered_triple_of(const Rational& x) {
    if (x.is_infinity())
        throw std::invalid_argument("no centered triple at infinity");
    if (x.is_integer())
        return integral_triple(x.num());
    RationalMarkovTriple t = interval_root(x.floor());
    if (x == t.x2)
        return t;
    while (true) {
        t = x < t.x2 ? left_child(t) : right_child(t);
        if (x == t.x2)
            return t;
        if (t.x2.den() > x.den())
            return std::nullopt;
    }
}

bool is_markov_fraction(const Rational& x) {
    return centered_triple_of(x).has_value();
}

void enumerate_forest(const mpz_class& n, const ForestLimit& limit,
                      const std::function<void(const ForestNode&)>& fn) {
    if (limit.max_depth.has_value() == limit.max_denominator.has_value())
        throw std::invalid_argument("exactly one forest limit must be set");
    auto admitted = [&](const RationalMarkovTriple& t, long depth) {
        if (limit.max_depth)
            return depth <= *limit.max_depth;
        return t.x2.den() <= *limit.max_denominator;
    };
    std::deque<ForestNode> queue;
    RationalMarkovTriple root = interval_root(n);
    if (admitted(root, 0))
        queue.push_back({{n, ""}, root});
    while (!queue.empty()) {
        ForestNode node = std::move(queue.front());
        queue.pop_front();
        fn(node);
        long depth = static_cast<long>(node.address.turns.size());
        auto [l, r] = children(node.triple);
        if (admitted(l, depth + 1))
            queue.push_back({{n, node.address.turns + "L"}, l});
        if (admitted(r, depth + 1))
            queue.push_back({{n, node.address.turns + "R"}, r});
    }
}

std::vector<ForestNode> enumerate_forest(const mpz_class& n, const ForestLimit& limit) {
    std::vector<ForestNode> out;
    enumerate_forest(n, limit, [&](const ForestNode& node) { out.push_back(node); });
    return out;
}

Rational mu(const Rational& label) {
    if (!label.is_infinity() && label < Rational(0))
        throw std::domain_error("label must be nonnegative");
    if (label == Rational(0))
        return Rational(0);
    if (label.is_infinity())
        return Rational(1);
    Rational lo(0), hi = Rational::infinity();
    RationalMarkovTriple t = interval_root(0);
    while (true) {
        Rational med = mediant(lo, hi);
        if (label == med)
            return t.x2;
        if (label < med) {
            hi = med;
            t = left_child(t);
        } else {
            lo = med;
            t = right_child(t);
        }
    }
}

Rational mu_inverse(const Rational& x) {
    if (x == Rational(0))
        return Rational(0);
    if (x == Rational(1))
        return Rational::infinity();
    auto reject = [&] {
        throw std::domain_error("mu_inverse: " + x.str() + " is not a Markov fraction in [0, 1]");
    };
    if (x.is_infinity() || x < Rational(0) || x > Rational(1))
        reject();
    Rational lo(0), hi = Rational::infinity();
    RationalMarkovTriple t = interval_root(0);
    while (true) {
        Rational med = mediant(lo, hi);
        if (x == t.x2)
            return med;
        if (x < t.x2) {
            hi = med;
            t = left_child(t);
        } else {
            lo = med;
            t = right_child(t);
        }
        if (t.x2.den() > x.den())
            reject();
    }
}

std::map<mpz_class, std::vector<Rational>> audit_uniqueness(const mpz_class& bound) {
    if (bound < 1)
        throw std::invalid_argument("audit bound must be at least 1");
    std::map<mpz_class, std::vector<Rational>> out;
    out[1].push_back(Rational(0));
    if (bound >= 2)
        out[2].push_back(Rational(1, 2));
    if (bound >= 5) {
        // middles of the [0, 1/2] subtree; middles grow strictly, so pruning
        // at the bound loses nothing
        std::vector<RationalMarkovTriple> stack{left_child(interval_root(0))};
        while (!stack.empty()) {
            RationalMarkovTriple t = stack.back();
            stack.pop_back();
            if (t.x2.den() > bound)
                continue;
            out[t.x2.den()].push_back(t.x2);
            auto [l, r] = children(t);
            stack.push_back(l);
            stack.push_back(r);
        }
    }
    for (auto& [q, v] : out)
        std::sort(v.begin(), v.end());
    return out;
}

}  // namespace markov
