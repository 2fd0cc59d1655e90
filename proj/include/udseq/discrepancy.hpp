#pragma once

// Exact counting and exact star / extreme discrepancy.
//
// All rectangles are half-open. Suprema that are only approached (a box
// whose boundary would have to sit just past a sample point) are captured
// by evaluating both the boundary-excluding and boundary-including count
// at each critical corner and taking the larger deviation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "udseq/core.hpp"

namespace udseq {

// ---------------------------------------------------------------------------
// A(R; N, omega)

inline uint64_t count_hits(const PointList& seq, const Rect& rect, uint64_t N) {
    if (N > seq.size())
        throw validation_error("prefix length N exceeds available points");
    if (rect.dim() != seq.dim())
        throw validation_error("rectangle dimension mismatch");
    const int n = seq.dim();
    uint64_t hits = 0;
    for (uint64_t j = 1; j <= N; ++j) {
        bool in = true;
        for (int i = 0; i < n; ++i) {
            const double x = seq.coord(j, i);
            if (!(rect.low[i] <= x && x < rect.high[i])) {
                in = false;
                break;
            }
        }
        if (in) ++hits;
    }
    return hits;
}

// ---------------------------------------------------------------------------

enum class DiscMethod { closed_form_1d, critical_grid, oracle };

inline const char* to_string(DiscMethod m) {
    switch (m) {
        case DiscMethod::closed_form_1d: return "closed_form_1d";
        case DiscMethod::critical_grid: return "critical_grid";
        case DiscMethod::oracle: return "oracle";
    }
    return "?";
}

struct DiscrepancyReport {
    int n = 1;
    uint64_t N = 0;
    double star = 0.0;
    std::optional<double> extreme;
    // Corners of a box attaining (or approaching) the reported supremum.
    // witness_boundary_in says whether the approached box includes its
    // upper/right boundary (a limit of half-open boxes).
    std::vector<double> witness_low, witness_high;
    bool witness_boundary_in = false;
    DiscMethod method = DiscMethod::closed_form_1d;
};

namespace detail {

struct Extremum {
    double value = -1.0;
    std::vector<double> low, high;
    bool boundary_in = false;
};

inline void consider(Extremum& best, double value, std::vector<double> lo,
                     std::vector<double> hi, bool boundary_in) {
    if (value > best.value + 1e-15) {
        best.value = value;
        best.low = std::move(lo);
        best.high = std::move(hi);
        best.boundary_in = boundary_in;
    }
}

// --- 1-D closed forms ------------------------------------------------------

// Star: D*_N = max_i max( x_(i) - (i-1)/N , i/N - x_(i) ), equivalently
// 1/(2N) + max_i |x_(i) - (2i-1)/(2N)|.
inline Extremum star_1d(const std::vector<double>& sorted) {
    const double N = static_cast<double>(sorted.size());
    Extremum best;
    for (size_t i = 1; i <= sorted.size(); ++i) {
        const double x = sorted[i - 1];
        consider(best, x - (i - 1) / N, {0.0}, {x}, false);
        consider(best, i / N - x, {0.0}, {x}, true);
    }
    return best;
}

// Extreme: split the supremum into the overcount direction (closed box
// hugging a run of sample points) and the undercount direction (open box
// between sample points), each a linear scan over the sorted coordinates.
// The combined value equals Niederreiter's formula
//   D_N = 1/N + max_i (i/N - x_(i)) - min_i (i/N - x_(i)).
inline Extremum extreme_1d(const std::vector<double>& sorted) {
    const size_t m = sorted.size();
    const double N = static_cast<double>(m);
    Extremum best;

    // Overcount: max over p <= q of (q - p + 1)/N - (x_(q) - x_(p)).
    double best_f = -std::numeric_limits<double>::infinity();
    double best_f_x = 0.0;
    for (size_t q = 1; q <= m; ++q) {
        const double xq = sorted[q - 1];
        const double f = xq - static_cast<double>(q) / N;  // x_(p) - p/N at p=q
        if (f > best_f) {
            best_f = f;
            best_f_x = xq;
        }
        const double value = (static_cast<double>(q) + 1.0) / N - xq + best_f;
        consider(best, value, {best_f_x}, {xq}, true);
    }

    // Undercount: max over a < b of (b - a) - #{a < x < b}/N with the box
    // boundaries pushed onto sample values (excluded) or the walls 0, 1.
    // f(a) = C(<=a)/N - a over a in {0} u {x+}, g(b) = b - C(<b)/N over
    // b in {x} u {1}.
    double best_g_scan = 0.0;  // f(0) = 0
    double best_a = 0.0;
    size_t idx = 0;
    while (idx < m) {
        size_t run = idx;
        while (run < m && sorted[run] == sorted[idx]) ++run;
        const double v = sorted[idx];
        const double g = v - static_cast<double>(idx) / N;  // C(<v) = idx
        consider(best, g + best_g_scan, {best_a}, {v}, false);
        const double f = static_cast<double>(run) / N - v;  // C(<=v) = run
        if (f > best_g_scan) {
            best_g_scan = f;
            best_a = v;
        }
        idx = run;
    }
    consider(best, best_g_scan, {best_a}, {1.0}, false);  // g(1) = 0
    return best;
}

// Niederreiter's closed form, kept separate as a cross-check.
inline double extreme_1d_formula(const std::vector<double>& sorted) {
    const double N = static_cast<double>(sorted.size());
    double mx = -std::numeric_limits<double>::infinity();
    double mn = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i <= sorted.size(); ++i) {
        const double t = static_cast<double>(i) / N - sorted[i - 1];
        mx = std::max(mx, t);
        mn = std::min(mn, t);
    }
    return 1.0 / N + mx - mn;
}

inline std::vector<double> sorted_coords(const PointList& seq, uint64_t N,
                                         int axis) {
    std::vector<double> v(N);
    for (uint64_t j = 1; j <= N; ++j) v[j - 1] = seq.coord(j, axis);
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<double> unique_coords(const PointList& seq, uint64_t N,
                                         int axis) {
    std::vector<double> v = sorted_coords(seq, N, axis);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// --- n-D star via the critical grid ----------------------------------------
//
// The supremum over anchored boxes [0,t) is attained, or approached, at
// corners whose coordinates are sample coordinates or 1. At each corner the
// boundary-excluding count handles boxes ending exactly at a point and the
// boundary-including count handles the limit from above.

inline Extremum star_nd(const PointList& seq, uint64_t N) {
    const int n = seq.dim();
    std::vector<std::vector<double>> cand(n);
    double corners = 1.0;
    for (int i = 0; i < n; ++i) {
        cand[i] = unique_coords(seq, N, i);
        cand[i].push_back(1.0);
        corners *= static_cast<double>(cand[i].size());
    }
    if (corners * static_cast<double>(N) > 1e9 ||
        (n == 2 && N > 500) || (n == 3 && N > 80))
        throw guard_error(
            "exact star-discrepancy search too large for n=" +
            std::to_string(n) + ", N=" + std::to_string(N) +
            "; reduce N (guards: N<=500 for n=2, N<=80 for n=3)");

    Extremum best;
    std::vector<size_t> ix(n, 0);
    std::vector<double> t(n);
    for (;;) {
        double vol = 1.0;
        for (int i = 0; i < n; ++i) {
            t[i] = cand[i][ix[i]];
            vol *= t[i];
        }
        uint64_t open = 0, closed = 0;
        for (uint64_t j = 1; j <= N; ++j) {
            bool in_open = true, in_closed = true;
            for (int i = 0; i < n; ++i) {
                const double x = seq.coord(j, i);
                if (x >= t[i]) in_open = false;
                if (x > t[i]) {
                    in_closed = false;
                    break;
                }
            }
            if (in_open) ++open;
            if (in_closed) ++closed;
        }
        const double Nd = static_cast<double>(N);
        consider(best, vol - static_cast<double>(open) / Nd,
                 std::vector<double>(n, 0.0), t, false);
        consider(best, static_cast<double>(closed) / Nd - vol,
                 std::vector<double>(n, 0.0), t, true);

        int axis = 0;
        while (axis < n && ++ix[axis] == cand[axis].size()) ix[axis++] = 0;
        if (axis == n) break;
    }
    return best;
}

// --- 2-D extreme via slab sweeps -------------------------------------------

// Overcount direction: closed boxes with corners on sample coordinates.
inline void extreme_2d_overcount(const PointList& seq, uint64_t N,
                                 Extremum& best) {
    const double Nd = static_cast<double>(N);
    std::vector<std::pair<double, double>> pts(N);
    for (uint64_t j = 1; j <= N; ++j)
        pts[j - 1] = {seq.coord(j, 0), seq.coord(j, 1)};
    std::sort(pts.begin(), pts.end());
    std::vector<double> ux;
    for (auto& p : pts)
        if (ux.empty() || ux.back() != p.first) ux.push_back(p.first);

    for (size_t ia = 0; ia < ux.size(); ++ia) {
        const double a1 = ux[ia];
        std::vector<double> ys;  // y-sorted points with a1 <= x <= b1
        size_t next = std::lower_bound(pts.begin(), pts.end(),
                                       std::make_pair(a1, -1.0)) -
                      pts.begin();
        for (size_t ib = ia; ib < ux.size(); ++ib) {
            const double b1 = ux[ib];
            while (next < pts.size() && pts[next].first <= b1) {
                const double y = pts[next].second;
                ys.insert(std::upper_bound(ys.begin(), ys.end(), y), y);
                ++next;
            }
            const double w = b1 - a1;
            // max over p <= q of (q - p + 1)/N - w * (ys[q] - ys[p])
            double bf = -std::numeric_limits<double>::infinity();
            double bf_y = 0.0;
            for (size_t q = 1; q <= ys.size(); ++q) {
                const double yq = ys[q - 1];
                const double f = w * yq - static_cast<double>(q) / Nd;
                if (f > bf) {
                    bf = f;
                    bf_y = yq;
                }
                const double value =
                    (static_cast<double>(q) + 1.0) / Nd - w * yq + bf;
                consider(best, value, {a1, bf_y}, {b1, yq}, true);
            }
        }
    }
}

// Undercount direction: open boxes with boundaries on sample coordinates
// (excluded) or the walls.
inline void extreme_2d_undercount(const PointList& seq, uint64_t N,
                                  Extremum& best) {
    const double Nd = static_cast<double>(N);
    std::vector<std::pair<double, double>> pts(N);
    for (uint64_t j = 1; j <= N; ++j)
        pts[j - 1] = {seq.coord(j, 0), seq.coord(j, 1)};
    std::sort(pts.begin(), pts.end());
    std::vector<double> ux{0.0};
    for (auto& p : pts)
        if (ux.back() != p.first) ux.push_back(p.first);

    for (double a1 : ux) {
        std::vector<double> xb;  // upper slab candidates > a1
        for (auto& p : pts)
            if (p.first > a1 && (xb.empty() || xb.back() != p.first))
                xb.push_back(p.first);
        xb.push_back(1.0);

        std::vector<double> ys;  // y-sorted points with a1 < x < b1
        size_t next = std::upper_bound(pts.begin(), pts.end(),
                                       std::make_pair(a1, 2.0)) -
                      pts.begin();
        for (double b1 : xb) {
            while (next < pts.size() && pts[next].first < b1) {
                const double y = pts[next].second;
                ys.insert(std::upper_bound(ys.begin(), ys.end(), y), y);
                ++next;
            }
            const double w = b1 - a1;
            // max over a2 < b2 of w*(b2 - a2) - #{a2 < y < b2}/N
            double bf = 0.0;  // f(0) = 0
            double bf_y = 0.0;
            size_t idx = 0;
            const size_t m = ys.size();
            while (idx < m) {
                size_t run = idx;
                while (run < m && ys[run] == ys[idx]) ++run;
                const double v = ys[idx];
                const double g = w * v - static_cast<double>(idx) / Nd;
                consider(best, g + bf, {a1, bf_y}, {b1, v}, false);
                const double f = static_cast<double>(run) / Nd - w * v;
                if (f > bf) {
                    bf = f;
                    bf_y = v;
                }
                idx = run;
            }
            consider(best, w * 1.0 - static_cast<double>(m) / Nd + bf,
                     {a1, bf_y}, {b1, 1.0}, false);
        }
    }
}

inline Extremum extreme_2d(const PointList& seq, uint64_t N) {
    if (N > 500)
        throw guard_error(
            "exact 2-D extreme-discrepancy search limited to N <= 500");
    Extremum best;
    extreme_2d_overcount(seq, N, best);
    extreme_2d_undercount(seq, N, best);
    return best;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline DiscrepancyReport star_discrepancy_exact(const PointList& seq,
                                                uint64_t N) {
    if (N < 1 || N > seq.size())
        throw validation_error("prefix length N out of range");
    DiscrepancyReport rep;
    rep.n = seq.dim();
    rep.N = N;
    detail::Extremum ex;
    if (seq.dim() == 1) {
        ex = detail::star_1d(detail::sorted_coords(seq, N, 0));
        rep.method = DiscMethod::closed_form_1d;
    } else {
        ex = detail::star_nd(seq, N);
        rep.method = DiscMethod::critical_grid;
    }
    rep.star = ex.value;
    rep.witness_low = std::move(ex.low);
    rep.witness_high = std::move(ex.high);
    rep.witness_boundary_in = ex.boundary_in;
    return rep;
}

inline DiscrepancyReport extreme_discrepancy_exact(const PointList& seq,
                                                   uint64_t N) {
    if (N < 1 || N > seq.size())
        throw validation_error("prefix length N out of range");
    DiscrepancyReport rep;
    rep.n = seq.dim();
    rep.N = N;
    detail::Extremum ex;
    if (seq.dim() == 1) {
        ex = detail::extreme_1d(detail::sorted_coords(seq, N, 0));
        rep.method = DiscMethod::closed_form_1d;
        rep.star = detail::star_1d(detail::sorted_coords(seq, N, 0)).value;
    } else if (seq.dim() == 2) {
        ex = detail::extreme_2d(seq, N);
        rep.method = DiscMethod::critical_grid;
        rep.star = detail::star_nd(seq, N).value;
    } else {
        throw guard_error(
            "exact extreme discrepancy is implemented for n <= 2; use the "
            "1-D closed form per axis or the sandwich bound 2^n * D*_N");
    }
    rep.extreme = ex.value;
    rep.witness_low = std::move(ex.low);
    rep.witness_high = std::move(ex.high);
    rep.witness_boundary_in = ex.boundary_in;
    return rep;
}

// ---------------------------------------------------------------------------
// Asymptotic diagnostics. These report where the prefix sits relative to
// Kiefer's law, the low-discrepancy benchmark and Roth's lower bound; they
// are observations, not assertions.

struct DiscrepancyRatios {
    double kiefer = 0.0;    // D*_N * sqrt(2N / log log N)
    double low_disc = 0.0;  // N * D_N / (log N)^n
    double roth = 0.0;      // N * D_N / (log N)^((n-1)/2)
    bool exact = true;      // false when D_N had to fall back to a bound
};

inline DiscrepancyRatios discrepancy_ratios(const PointList& seq, uint64_t N) {
    if (N < 16)
        throw validation_error(
            "discrepancy ratios need N >= 16 so that log log N > 0");
    const int n = seq.dim();
    DiscrepancyRatios r;
    const DiscrepancyReport star = star_discrepancy_exact(seq, N);
    double extreme;
    if (n <= 2) {
        extreme = *extreme_discrepancy_exact(seq, N).extreme;
    } else {
        extreme = star.star;  // lower bound D_N >= D*_N
        r.exact = false;
    }
    const double Nd = static_cast<double>(N);
    const double logN = std::log(Nd);
    r.kiefer = star.star * std::sqrt(2.0 * Nd / std::log(logN));
    r.low_disc = Nd * extreme / std::pow(logN, n);
    r.roth = Nd * extreme / std::pow(logN, (n - 1) / 2.0);
    return r;
}

}  // namespace udseq
