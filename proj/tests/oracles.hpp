#pragma once

// Brute-force reference implementations used as independent oracles. These
// deliberately share no code with the library: counting is a naive loop and
// the extremization enumerates every critical box, with a small epsilon
// nudge standing in for the open/closed limits.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "udseq/core.hpp"

namespace oracle {

// Naive A([0,t); N) with t perturbed by eps to emulate limits.
inline double star_deviation_1d(const std::vector<double>& xs, double t) {
    std::size_t count = 0;
    for (double x : xs)
        if (x < t) ++count;
    return std::fabs(static_cast<double>(count) / xs.size() - t);
}

// Exhaustive 1-D star discrepancy over anchored intervals [0, t): candidates
// are each sample value and each value nudged past itself, plus t = 1.
inline double star_1d(const std::vector<double>& xs) {
    const double eps = 1e-13;
    double best = 0.0;
    std::vector<double> cands{1.0};
    for (double x : xs) {
        cands.push_back(x);
        cands.push_back(std::min(1.0, x + eps));
    }
    for (double t : cands)
        if (t > 0.0) best = std::max(best, star_deviation_1d(xs, t));
    return best;
}

// Exhaustive 1-D extreme discrepancy over half-open intervals [a, b).
inline double extreme_1d(const std::vector<double>& xs) {
    const double eps = 1e-13;
    std::vector<double> as{0.0}, bs{1.0};
    for (double x : xs) {
        as.push_back(x);
        as.push_back(std::min(1.0, x + eps));
        bs.push_back(x);
        bs.push_back(std::min(1.0, x + eps));
    }
    double best = 0.0;
    for (double a : as)
        for (double b : bs) {
            if (!(a < b)) continue;
            std::size_t count = 0;
            for (double x : xs)
                if (a <= x && x < b) ++count;
            best = std::max(best, std::fabs(static_cast<double>(count) / xs.size() -
                                            (b - a)));
        }
    return best;
}

// Dense-grid lower bound for the n-D star discrepancy: max deviation of
// anchored boxes with corners on the uniform grid {k/G}^n.
inline double star_grid_lower_bound(const udseq::PointList& seq, uint64_t N,
                                    int G) {
    const int n = seq.dim();
    std::vector<int> ix(n, 1);
    double best = 0.0;
    for (;;) {
        double vol = 1.0;
        std::vector<double> t(n);
        for (int i = 0; i < n; ++i) {
            t[i] = static_cast<double>(ix[i]) / G;
            vol *= t[i];
        }
        std::size_t count = 0;
        for (uint64_t j = 1; j <= N; ++j) {
            bool in = true;
            for (int i = 0; i < n; ++i)
                if (!(seq.coord(j, i) < t[i])) {
                    in = false;
                    break;
                }
            if (in) ++count;
        }
        best = std::max(best,
                        std::fabs(static_cast<double>(count) / N - vol));
        int axis = 0;
        while (axis < n && ++ix[axis] > G) ix[axis++] = 1;
        if (axis == n) break;
    }
    return best;
}

// Radical inverse by digit arithmetic in long double, written independently
// of the library's integer-reversal version.
inline double radical_inverse_ref(uint64_t j, uint64_t base) {
    long double r = 0.0L;
    long double scale = 1.0L / static_cast<long double>(base);
    while (j > 0) {
        r += static_cast<long double>(j % base) * scale;
        scale /= static_cast<long double>(base);
        j /= base;
    }
    return static_cast<double>(r);
}

}  // namespace oracle
