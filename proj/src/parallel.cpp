// Serial and OpenMP variants of the heavy scans.  Parallel versions fill an
// index-aligned result vector and reduce serially, so their outcomes are
// bit-identical to the reference implementations.
#include "markov/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <variant>
#include <vector>

#include "markov/companions.hpp"
#include "markov/forest.hpp"

namespace markov {

namespace {

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

std::vector<Rational> unit_interval_fractions(long max_den) {
    if (max_den < 1) throw std::invalid_argument("scan needs max_den >= 1");
    std::vector<Rational> ys;
    for (long q = 1; q <= max_den; ++q)
        for (long p = 0; p <= q; ++p)
            if (std::gcd(p, q) == 1) ys.emplace_back(p, q);
    return ys;
}

struct ItemVerdict {
    int category = 0;  // index into the Classification variant
    bool ok = false;
};

ItemVerdict examine(const Rational& y) {
    Classification c = classify(y);
    BestApproximation oracle = c_constant_bruteforce(y);
    bool special = !std::holds_alternative<NeitherCase>(c);
    bool oracle_special = oracle.constant >= Rational(1, 3);
    ItemVerdict v;
    v.category = static_cast<int>(c.index());
    v.ok = special == oracle_special && classified_constant(c) == oracle.constant;
    return v;
}

ScanOutcome reduce_scan(const std::vector<ItemVerdict>& verdicts) {
    ScanOutcome o;
    o.total = static_cast<long>(verdicts.size());
    for (const ItemVerdict& v : verdicts) {
        if (v.category == 0)
            ++o.markov_fractions;
        else if (v.category == 1)
            ++o.companions;
        else
            ++o.neither;
        if (!v.ok) ++o.mismatches;
    }
    return o;
}

// Markov fractions near [0, 3] dense enough to decide coverage: any interval
// containing y approximates it within 1/(2 q^2), so its base is a convergent
// of y and has denominator <= den(y).
std::vector<Rational> cover_bases(long max_den) {
    std::vector<Rational> bases;
    for (long n = -1; n <= 4; ++n) bases.emplace_back(n);
    for (long n = -1; n <= 3; ++n)
        enumerate_forest(n, ForestLimit::denominator(max_den),
                         [&](const ForestNode& node) { bases.push_back(node.triple.x2); });
    std::sort(bases.begin(), bases.end());
    return bases;
}

bool covered_once(const Rational& y, const std::vector<Rational>& bases) {
    // intervals reach at most 1/2 to each side, so only nearby bases matter
    Rational half(1, 2);
    auto lo = std::lower_bound(bases.begin(), bases.end(), y - half);
    auto hi = std::upper_bound(bases.begin(), bases.end(), y + half);
    long hits = 0;
    Rational found;
    for (auto it = lo; it != hi; ++it) {
        if (interval_contains(*it, y)) {
            ++hits;
            found = *it;
        }
    }
    return hits == 1 && found == locate_interval(y);
}

std::vector<Rational> cover_targets(long max_den) {
    if (max_den < 1) throw std::invalid_argument("scan needs max_den >= 1");
    std::vector<Rational> ys;
    for (long q = 1; q <= max_den; ++q)
        for (long p = 0; p < 3 * q; ++p)
            if (std::gcd(p, q) == 1) ys.emplace_back(p, q);
    return ys;
}

CoverOutcome reduce_cover(const std::vector<char>& oks) {
    CoverOutcome o;
    o.total = static_cast<long>(oks.size());
    for (char ok : oks)
        if (!ok) ++o.mismatches;
    return o;
}

std::vector<mpz_class> mcshane_denominators(long depth) {
    std::vector<mpz_class> dens{1};
    struct Item {
        RationalMarkovTriple t;
        long level;
    };
    std::vector<Item> stack{{interval_root(0), 0}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        dens.push_back(it.t.x2.den());
        if (it.level < depth) {
            stack.push_back({left_child(it.t), it.level + 1});
            stack.push_back({right_child(it.t), it.level + 1});
        }
    }
    return dens;
}

}  // namespace

ScanOutcome theorem_scan_serial(long max_den) {
    std::vector<Rational> ys = unit_interval_fractions(max_den);
    std::vector<ItemVerdict> verdicts(ys.size());
    for (size_t i = 0; i < ys.size(); ++i) verdicts[i] = examine(ys[i]);
    return reduce_scan(verdicts);
}

ScanOutcome theorem_scan_parallel(long max_den, int jobs) {
    std::vector<Rational> ys = unit_interval_fractions(max_den);
    std::vector<ItemVerdict> verdicts(ys.size());
    long n = static_cast<long>(ys.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count(jobs))
    for (long i = 0; i < n; ++i) verdicts[i] = examine(ys[i]);
    return reduce_scan(verdicts);
}

CoverOutcome cover_scan_serial(long max_den) {
    std::vector<Rational> ys = cover_targets(max_den);
    std::vector<Rational> bases = cover_bases(max_den);
    std::vector<char> oks(ys.size());
    for (size_t i = 0; i < ys.size(); ++i) oks[i] = covered_once(ys[i], bases);
    return reduce_cover(oks);
}

CoverOutcome cover_scan_parallel(long max_den, int jobs) {
    std::vector<Rational> ys = cover_targets(max_den);
    std::vector<Rational> bases = cover_bases(max_den);
    std::vector<char> oks(ys.size());
    long n = static_cast<long>(ys.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count(jobs))
    for (long i = 0; i < n; ++i) oks[i] = covered_once(ys[i], bases);
    return reduce_cover(oks);
}

McShaneSummary mcshane_partial_sum_parallel(long depth, long bits, int jobs) {
    if (depth < 0) throw std::invalid_argument("partial sum needs depth >= 0");
    if (bits < 16) throw std::invalid_argument("partial sum needs bits >= 16");
    mpz_class b = mpz_class(1) << static_cast<unsigned long>(bits);
    std::vector<mpz_class> dens = mcshane_denominators(depth);
    std::vector<mpz_class> terms(dens.size());
    long n = static_cast<long>(dens.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(jobs))
    for (long i = 0; i < n; ++i) {
        const mpz_class& q = dens[i];
        mpz_class f = sqrt(mpz_class((9 * q * q - 4) * b * b));
        mpz_class num = 3 * q * b - f - 1;
        mpz_fdiv_q(terms[i].get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    }
    mpz_class floors = 0;
    for (const mpz_class& t : terms) floors += t;
    return {depth, Rational(3 * floors, b), Rational(3 * (floors + n), b)};
}

}  // namespace markov
