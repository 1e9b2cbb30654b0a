// Cross-cutting identity checks.
#include "markov/identities.hpp"

#include <stdexcept>
#include <vector>

#include "markov/forest.hpp"

namespace markov {

bool check_markov_q(const MarkovTriple& t) {
    if (t.q1 <= 0 || t.q2 <= 0 || t.q3 <= 0) {
        throw std::invalid_argument("reciprocal Markov form needs positive integers");
    }
    Rational sum = Rational(t.q1, t.q2 * t.q3) + Rational(t.q2, t.q3 * t.q1) +
                   Rational(t.q3, t.q1 * t.q2);
    return sum == Rational(3);
}

mpz_class quadratic_residue_witness(const RationalMarkovTriple& t) {
    if (!is_rational_markov_triple(t)) {
        throw std::invalid_argument("quadratic-residue witness needs a valid triple");
    }
    const mpz_class& p2 = t.x2.num();
    const mpz_class& q2 = t.x2.den();
    if ((p2 * p2 + 1) % q2 != 0) {
        throw std::logic_error("corrupted triple: q2 does not divide p2^2 + 1");
    }
    return p2;
}

QuadraticSurd geodesic_length(const mpz_class& q) {
    if (q <= 0 || !is_markov_number(q)) {
        throw std::invalid_argument("geodesic length needs a Markov number, and " +
                                    q.get_str() + " is not one");
    }
    return QuadraticSurd(3 * q, 1, 2, 9 * q * q - 4);
}

bool mcshane_term(const mpz_class& q) {
    QuadraticSurd half = geodesic_length(q);
    QuadraticSurd one{Rational(1)};
    QuadraticSurd lhs = one / (one + half * half);
    // 2 delta_q / 6 = (3q - sqrt(9q^2 - 4)) / (6q)
    QuadraticSurd rhs(3 * q, -1, 6 * q, 9 * q * q - 4);
    return lhs == rhs;
}

McShaneSummary mcshane_partial_sum(long depth, long bits) {
    if (depth < 0) throw std::invalid_argument("partial sum needs depth >= 0");
    if (bits < 16) throw std::invalid_argument("partial sum needs bits >= 16");
    mpz_class b = mpz_class(1) << static_cast<unsigned long>(bits);
    mpz_class floors = 0;
    long count = 0;
    // dyadic floor of (3q - sqrt(9q^2 - 4))/q; the true term sits in
    // [n, n+1] / 2^bits
    auto add_term = [&](const mpz_class& q) {
        mpz_class f = sqrt(mpz_class((9 * q * q - 4) * b * b));
        mpz_class n;
        mpz_class num = 3 * q * b - f - 1;
        mpz_fdiv_q(n.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
        floors += n;
        ++count;
    };
    // denominators repeat across unit intervals, so sum one tree and triple it
    add_term(1);
    struct Item {
        RationalMarkovTriple t;
        long level;
    };
    std::vector<Item> stack{{interval_root(0), 0}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        add_term(it.t.x2.den());
        if (it.level < depth) {
            stack.push_back({left_child(it.t), it.level + 1});
            stack.push_back({right_child(it.t), it.level + 1});
        }
    }
    return {depth, Rational(3 * floors, b), Rational(3 * (floors + count), b)};
}

}  // namespace markov
