// Scan kernels over ranges of rationals.  Each kernel has a serial reference
// and an OpenMP version; both must produce bit-identical outcomes, which the
// tests and the benchmark enforce.
#pragma once

#include "markov/approximation.hpp"
#include "markov/identities.hpp"

namespace markov {

struct ScanOutcome {
    long total = 0;
    long markov_fractions = 0;
    long companions = 0;
    long neither = 0;
    long mismatches = 0;  // classifications contradicting the brute-force oracle

    friend bool operator==(const ScanOutcome&, const ScanOutcome&) = default;
};

// Classify every reduced fraction in [0,1] with denominator <= max_den and
// cross-check each result against c_constant_bruteforce.
ScanOutcome theorem_scan_serial(long max_den);
ScanOutcome theorem_scan_parallel(long max_den, int jobs = 0);  // 0 = runtime default

struct CoverOutcome {
    long total = 0;
    long mismatches = 0;  // values not in exactly one interval, or located wrongly

    friend bool operator==(const CoverOutcome&, const CoverOutcome&) = default;
};

// Check that every reduced fraction in [0,3) with denominator <= max_den lies
// in exactly one closed interval, the one locate_interval names.  Any other
// containing base would approximate better than 1/(2 q^2), so its denominator
// is at most max_den and the candidate list below is exhaustive.
CoverOutcome cover_scan_serial(long max_den);
CoverOutcome cover_scan_parallel(long max_den, int jobs = 0);

// Same enclosure as mcshane_partial_sum, with the per-term square roots
// spread across threads.
McShaneSummary mcshane_partial_sum_parallel(long depth, long bits, int jobs = 0);

}  // namespace markov
