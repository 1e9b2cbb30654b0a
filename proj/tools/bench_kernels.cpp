// Wall-clock comparison of the serial and OpenMP scan kernels; exits nonzero
// if any pair of runs disagrees.
#include <chrono>
#include <cstdio>

#include <CLI11.hpp>

#include "markov/parallel.hpp"

using namespace markov;

namespace {

template <typename F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return dt.count();
}

bool report(const char* name, double serial, double parallel, bool match) {
    std::printf("%-14s serial %7.3fs   parallel %7.3fs   x%.2f   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, match ? "match" : "MISMATCH");
    return match;
}

}  // namespace

int main(int argc, char** argv) {
    long scan_den = 120, cover_den = 80, depth = 10, bits = 64;
    int jobs = 0;
    CLI::App app{"compare serial and parallel scan kernels"};
    app.add_option("--scan-den", scan_den, "denominator bound for the theorem scan");
    app.add_option("--cover-den", cover_den, "denominator bound for the cover scan");
    app.add_option("--depth", depth, "tree depth for the partial sum");
    app.add_option("--bits", bits, "dyadic resolution for the partial sum");
    app.add_option("--jobs", jobs, "threads for the parallel runs, 0 = runtime default");
    CLI11_PARSE(app, argc, argv);

    bool ok = true;

    ScanOutcome scan_s, scan_p;
    double t1 = seconds([&] { scan_s = theorem_scan_serial(scan_den); });
    double t2 = seconds([&] { scan_p = theorem_scan_parallel(scan_den, jobs); });
    ok &= report("theorem scan", t1, t2, scan_s == scan_p && scan_s.mismatches == 0);

    CoverOutcome cover_s, cover_p;
    double t3 = seconds([&] { cover_s = cover_scan_serial(cover_den); });
    double t4 = seconds([&] { cover_p = cover_scan_parallel(cover_den, jobs); });
    ok &= report("cover scan", t3, t4, cover_s == cover_p && cover_s.mismatches == 0);

    McShaneSummary sum_s{}, sum_p{};
    double t5 = seconds([&] { sum_s = mcshane_partial_sum(depth, bits); });
    double t6 = seconds([&] { sum_p = mcshane_partial_sum_parallel(depth, bits, jobs); });
    ok &= report("partial sum", t5, t6,
                 sum_s.partial_lo == sum_p.partial_lo && sum_s.partial_hi == sum_p.partial_hi);

    return ok ? 0 : 1;
}
