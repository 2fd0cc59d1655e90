#pragma once

// Weighted Hausdorff-dimension formulas and their cross-checks.
//
// dimension_formula evaluates min_j (1 + sum_{i: tau_j >= tau_i}
// (tau_j - tau_i)) / tau_j. ww_lower_bound evaluates the ubiquity-based
// lower bound over the candidate set A = {a_i} u {a_i + t_i} with the
// K1/K2/K3 partition, and choose_weights builds the exponents (a, t) that
// make the two coincide. upper_bound_exponent is the covering exponent,
// whose index set uses the strict inequality tau_k > tau_i; the two index
// conventions agree at the minimizer because ties contribute zero.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "udseq/core.hpp"
#include "udseq/limsup.hpp"

namespace udseq {

using WeightVector = std::vector<double>;

inline void validate_weights(const WeightVector& tau) {
    if (tau.empty()) throw validation_error("weight vector is empty");
    double sum = 0.0;
    for (double t : tau) {
        if (!(t > 0.0)) throw validation_error("weights must be positive");
        sum += t;
    }
    if (!(sum > 1.0))
        throw validation_error("dimension formulas need sum tau_i > 1, got " +
                               fp17(sum));
}

struct UbiquityExponents {
    std::vector<double> a;  // sum a_i = 1
    std::vector<double> t;  // t_i >= 0

    UbiquityExponents() = default;
    UbiquityExponents(std::vector<double> a_, std::vector<double> t_)
        : a(std::move(a_)), t(std::move(t_)) {
        validate();
    }

    void validate() const {
        if (a.empty() || a.size() != t.size())
            throw validation_error("exponent vectors malformed");
        double sum = 0.0;
        for (double x : a) {
            if (!(x > 0.0)) throw validation_error("a_i must be positive");
            sum += x;
        }
        if (std::fabs(sum - 1.0) > 1e-12)
            throw validation_error("sum a_i must equal 1, got " + fp17(sum));
        for (double x : t)
            if (!(x >= 0.0)) throw validation_error("t_i must be >= 0");
    }

    bool boundary_t() const {
        for (double x : t)
            if (x == 0.0) return true;
        return false;
    }
};

struct DimensionReport {
    double value = 0.0;
    size_t argmin = 0;             // 1-based index of the minimizing j / A
    std::vector<double> per_candidate;
    std::string method;            // closed_form | ww_lower | box_counting
    // ww_lower only:
    double witness_A = 0.0;
    bool boundary_t = false;       // some t_i = 0 (allowed, flagged)
    // box_counting only:
    std::vector<double> scales;
    std::vector<uint64_t> counts;
    double slope = 0.0;
    double r2 = 0.0;
};

// ---------------------------------------------------------------------------

inline DimensionReport dimension_formula(const WeightVector& tau) {
    validate_weights(tau);
    const size_t n = tau.size();
    DimensionReport rep;
    rep.method = "closed_form";
    rep.per_candidate.resize(n);
    for (size_t j = 0; j < n; ++j) {
        double excess = 0.0;
        for (size_t i = 0; i < n; ++i)
            if (tau[j] >= tau[i]) excess += tau[j] - tau[i];
        rep.per_candidate[j] = (1.0 + excess) / tau[j];
    }
    rep.argmin = 1;
    for (size_t j = 1; j < n; ++j)
        if (rep.per_candidate[j] < rep.per_candidate[rep.argmin - 1])
            rep.argmin = j + 1;
    rep.value = rep.per_candidate[rep.argmin - 1];
    return rep;
}

inline double upper_bound_exponent(const WeightVector& tau, size_t k) {
    validate_weights(tau);
    if (k < 1 || k > tau.size())
        throw validation_error("coordinate index out of range");
    double excess = 0.0;
    for (size_t i = 0; i < tau.size(); ++i)
        if (tau[k - 1] > tau[i]) excess += tau[k - 1] - tau[i];
    return (1.0 + excess) / tau[k - 1];
}

// ---------------------------------------------------------------------------
// Weight selection from the two-case construction: equal weights a_i = 1/n
// when every tau_i >= 1/n; otherwise sort descending and level the u largest
// coordinates at D = (1 - sum_{i>u} tau_i)/u, where u is chosen so that
// tau_u > D >= tau_{u+1} (tau_{n+1} = 0). Existence of such u is part of
// the construction; failing to find one is an internal bug, not bad input.

inline UbiquityExponents choose_weights(const WeightVector& tau) {
    validate_weights(tau);
    const size_t n = tau.size();
    const double inv_n = 1.0 / static_cast<double>(n);

    std::vector<double> a(n), t(n);
    const bool all_large =
        std::all_of(tau.begin(), tau.end(), [&](double x) { return x >= inv_n; });
    if (all_large) {
        for (size_t i = 0; i < n; ++i) {
            a[i] = inv_n;
            t[i] = tau[i] - inv_n;
        }
        return UbiquityExponents(std::move(a), std::move(t));
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return tau[x] > tau[y]; });

    double suffix = 0.0;  // sum of tau over positions > u (sorted)
    for (size_t i = 0; i < n; ++i) suffix += tau[order[i]];
    size_t u = 0;
    double level = 0.0;
    for (size_t cand = 1; cand <= n; ++cand) {
        suffix -= tau[order[cand - 1]];
        const double D = (1.0 - suffix) / static_cast<double>(cand);
        const double next = cand < n ? tau[order[cand]] : 0.0;
        if (tau[order[cand - 1]] > D && D >= next) {
            u = cand;
            level = D;
            break;
        }
    }
    if (u == 0)
        throw error("choose_weights: no admissible leveling index; this is an "
                    "internal invariant violation");

    for (size_t pos = 0; pos < n; ++pos) {
        const size_t i = order[pos];
        a[i] = pos < u ? level : tau[i];
        t[i] = tau[i] - a[i];
    }
    return UbiquityExponents(std::move(a), std::move(t));
}

// ---------------------------------------------------------------------------

inline DimensionReport ww_lower_bound(const UbiquityExponents& exps) {
    exps.validate();
    const size_t n = exps.a.size();

    std::vector<double> candidates;
    candidates.reserve(2 * n);
    for (size_t i = 0; i < n; ++i) {
        candidates.push_back(exps.a[i]);
        candidates.push_back(exps.a[i] + exps.t[i]);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    DimensionReport rep;
    rep.method = "ww_lower";
    rep.boundary_t = exps.boundary_t();
    rep.per_candidate.resize(candidates.size());
    rep.value = std::numeric_limits<double>::infinity();
    for (size_t c = 0; c < candidates.size(); ++c) {
        const double A = candidates[c];
        size_t k1 = 0, k2 = 0;
        double a3 = 0.0, t2 = 0.0;
        for (size_t j = 0; j < n; ++j) {
            if (exps.a[j] >= A) {
                ++k1;
            } else if (exps.a[j] + exps.t[j] <= A) {
                ++k2;
                t2 += exps.t[j];
            } else {
                a3 += exps.a[j];
            }
        }
        const double score =
            static_cast<double>(k1) + static_cast<double>(k2) + (a3 - t2) / A;
        rep.per_candidate[c] = score;
        if (score < rep.value) {
            rep.value = score;
            rep.argmin = c + 1;
            rep.witness_A = A;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Box-counting estimator for the truncated limsup surrogate.
//
// At scale delta the counted set is the collection of boxes holding the
// center omega_j of a window rectangle that is still resolved at that
// scale, meaning every side 2 psi_i(j) >= delta. Counting whole unions
// saturates instead: any window starting at a j with psi(j) >= 1/2 covers
// the cube outright and every estimate would read slope n. Dropping
// unresolved rectangles mirrors how the covering exponent balances box
// size against rectangle count, and reproduces slope 1/tau for power
// profiles; psi == const keeps every rectangle resolved and reproduces
// slope n.

inline DimensionReport box_dimension_estimate(const PointList& seq,
                                              const ApproxProfile& psi,
                                              Window win,
                                              const std::vector<double>& scales,
                                              uint64_t samples_per_scale = 16) {
    (void)samples_per_scale;  // occupancy is exact; kept for interface parity
    const int n = seq.dim();
    if (n > 2) throw guard_error("box counting supports n <= 2");
    if (psi.dim() != n) throw validation_error("profile dimension mismatch");
    if (win.j_max > seq.size())
        throw validation_error("window reaches past the available prefix");
    if (scales.size() < 3)
        throw validation_error("box-count regression needs at least 3 scales");
    for (size_t s = 0; s < scales.size(); ++s) {
        if (!(scales[s] > 0.0))
            throw validation_error("scales must be positive");
        if (s > 0 && !(scales[s] < scales[s - 1]))
            throw validation_error("scales must be strictly decreasing");
    }

    // Smallest rectangle side at the window start; every scale must resolve
    // the first rectangle or the count could be empty.
    double first_side = std::numeric_limits<double>::infinity();
    for (const auto& p : psi.psi)
        first_side = std::min(first_side, 2.0 * p.value(win.j_min));
    if (!(scales.front() <= first_side))
        throw validation_error(
            "largest scale exceeds the rectangle size at j_min (" +
            fp17(first_side) + ")");

    // min_i 2 psi_i(j) is non-increasing in j, so the resolved set at each
    // scale is a prefix of the window.
    const uint64_t count = win.j_max - win.j_min + 1;
    std::vector<double> side(count);
    for (uint64_t r = 0; r < count; ++r) {
        const uint64_t j = win.j_min + r;
        double s = std::numeric_limits<double>::infinity();
        for (const auto& p : psi.psi) s = std::min(s, 2.0 * p.value(j));
        side[r] = s;
    }

    DimensionReport rep;
    rep.method = "box_counting";
    rep.scales = scales;
    rep.counts.reserve(scales.size());
    for (double delta : scales) {
        // resolved prefix: side[r] >= delta
        uint64_t m = 0;
        while (m < count && side[m] >= delta) ++m;
        const auto cells = static_cast<uint64_t>(std::floor(1.0 / delta));
        std::unordered_set<uint64_t> boxes;
        for (uint64_t r = 0; r < m; ++r) {
            const uint64_t j = win.j_min + r;
            uint64_t key = 0;
            for (int i = 0; i < n; ++i) {
                auto c = static_cast<uint64_t>(seq.coord(j, i) *
                                               static_cast<double>(cells));
                c = std::min(c, cells - 1);
                key = (key << 32) | c;
            }
            boxes.insert(key);
        }
        rep.counts.push_back(boxes.size());
    }

    // Least squares of log(count) on log(1/delta).
    const size_t S = scales.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t s = 0; s < S; ++s) {
        if (rep.counts[s] == 0)
            throw validation_error("no resolved rectangles at scale " +
                                   fp17(scales[s]));
        const double x = std::log(1.0 / scales[s]);
        const double y = std::log(static_cast<double>(rep.counts[s]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double Sd = static_cast<double>(S);
    const double vxx = sxx - sx * sx / Sd;
    const double vyy = syy - sy * sy / Sd;
    const double vxy = sxy - sx * sy / Sd;
    rep.slope = vxy / vxx;
    rep.r2 = vyy > 0.0 ? (vxy * vxy) / (vxx * vyy) : 1.0;
    rep.value = rep.slope;
    return rep;
}

}  // namespace udseq
