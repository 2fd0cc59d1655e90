#pragma once

// Schedules N_1 < N_2 < ... , the blocks (N_{k-1}, N_k], and finite-horizon
// verification of the discrepancy-satisfying-sequence condition
//   D_{N_i} < v(N_i)   and   limsup_i N_{i-1} v(N_i) < 1.
// On a finite horizon the limsup is replaced by the max over all checked i
// (with N_0 = 0), and the verdict is explicitly a finite-horizon statement.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "udseq/core.hpp"
#include "udseq/discrepancy.hpp"
#include "udseq/rates.hpp"

namespace udseq {

// ---------------------------------------------------------------------------

struct Schedule {
    std::vector<uint64_t> indices;  // N_1 < N_2 < ...

    Schedule() = default;
    explicit Schedule(std::vector<uint64_t> idx) : indices(std::move(idx)) {
        validate();
    }

    void validate() const {
        if (indices.empty()) throw validation_error("schedule is empty");
        if (indices.front() < 1) throw validation_error("schedule needs N_1 >= 1");
        for (size_t i = 1; i < indices.size(); ++i)
            if (indices[i] <= indices[i - 1])
                throw validation_error("schedule must be strictly increasing");
    }

    size_t blocks() const { return indices.size(); }

    // Block k is (lower(k), upper(k)], 1-based k, with N_0 = 0.
    uint64_t lower(size_t k) const { return k == 1 ? 0 : indices[k - 2]; }
    uint64_t upper(size_t k) const { return indices[k - 1]; }
};

enum class ScheduleKind { geometric, triple_exp, square_exp, explicit_list };

namespace detail {

inline bool is_integral(double x) { return x == std::floor(x) && x >= 2.0; }

// round(M^e) with an overflow guard against 2^63.
inline uint64_t pow_rounded(double M, double e, bool* overflow) {
    if (e * std::log2(M) > 62.9) {
        *overflow = true;
        return 0;
    }
    *overflow = false;
    if (is_integral(M)) {
        const double er = std::floor(e + 0.5);
        if (er == e) {
            bool of = false;
            const uint64_t r =
                ipow_checked(static_cast<uint64_t>(M), static_cast<unsigned>(e), &of);
            if (!of) return r;
        }
    }
    return static_cast<uint64_t>(std::llroundl(powl(static_cast<long double>(M),
                                                    static_cast<long double>(e))));
}

}  // namespace detail

inline Schedule make_schedule(ScheduleKind kind, double M, uint64_t horizon,
                              const std::vector<uint64_t>& explicit_list = {}) {
    if (kind == ScheduleKind::explicit_list) return Schedule(explicit_list);
    if (!(M > 1.0)) throw validation_error("schedule base M must be > 1");
    if (horizon < 1) throw validation_error("schedule horizon must be >= 1");

    std::vector<uint64_t> idx;
    idx.reserve(horizon);
    for (uint64_t j = 1; j <= horizon; ++j) {
        double e = 0.0;
        switch (kind) {
            case ScheduleKind::geometric: e = static_cast<double>(j); break;
            case ScheduleKind::triple_exp: e = std::pow(3.0, static_cast<double>(j)); break;
            case ScheduleKind::square_exp: e = static_cast<double>(j) * static_cast<double>(j); break;
            case ScheduleKind::explicit_list: break;
        }
        bool overflow = false;
        const uint64_t Nj = detail::pow_rounded(M, e, &overflow);
        if (overflow)
            throw guard_error("schedule overflows 2^63 at j=" + std::to_string(j) +
                              "; max feasible horizon is " + std::to_string(j - 1));
        idx.push_back(Nj);
    }
    return Schedule(std::move(idx));
}

// ---------------------------------------------------------------------------

struct DssIndexRecord {
    size_t i = 0;        // 1-based position in the schedule
    uint64_t N = 0;
    double discrepancy = 0.0;  // D_N, exact where computed
    double rate = 0.0;         // v(N)
    bool pass = false;         // D_N < v(N), strict, no tolerance
    bool skipped = false;      // exact-discrepancy guard refused this index
};

enum class DssVerdict { pass, fail, inconclusive };

inline const char* to_string(DssVerdict v) {
    switch (v) {
        case DssVerdict::pass: return "pass";
        case DssVerdict::fail: return "fail";
        case DssVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct DssReport {
    std::vector<DssIndexRecord> records;
    double tail_sup = 0.0;  // max over checked i of N_{i-1} * v(N_i), N_0 = 0
    DssVerdict verdict = DssVerdict::inconclusive;
};

inline DssReport check_dss(const PointList& seq, const Schedule& sched,
                           const RateFunction& v) {
    if (sched.indices.back() > seq.size())
        throw validation_error("schedule reaches past the available prefix");

    DssReport rep;
    bool any_skipped = false;
    bool all_pass = true;
    uint64_t prev = 0;
    for (size_t i = 1; i <= sched.blocks(); ++i) {
        DssIndexRecord rec;
        rec.i = i;
        rec.N = sched.upper(i);
        rec.rate = v.value(rec.N);
        const bool feasible =
            seq.dim() == 1 || (seq.dim() == 2 && rec.N <= 500);
        if (feasible) {
            rec.discrepancy = *extreme_discrepancy_exact(seq, rec.N).extreme;
            rec.pass = rec.discrepancy < rec.rate;
            all_pass = all_pass && rec.pass;
        } else {
            rec.skipped = true;
            any_skipped = true;
        }
        rep.tail_sup = std::max(rep.tail_sup,
                                static_cast<double>(prev) * rec.rate);
        prev = rec.N;
        rep.records.push_back(rec);
    }
    rep.verdict = any_skipped ? DssVerdict::inconclusive
                 : (all_pass && rep.tail_sup < 1.0) ? DssVerdict::pass
                                                    : DssVerdict::fail;
    return rep;
}

// ---------------------------------------------------------------------------
// c-regularity: f(N_{i+1}) <= c f(N_i) from some index on.

struct CRegularity {
    std::optional<size_t> holds_from;  // 1-based; empty when the tail violates
    std::vector<double> ratios;        // f(N_{i+1}) / f(N_i)
};

inline CRegularity check_c_regular(const std::function<double(uint64_t)>& f,
                                   const Schedule& sched, double c) {
    if (!(c > 0.0 && c < 1.0))
        throw validation_error("c-regularity needs c in (0,1)");
    CRegularity out;
    const size_t K = sched.blocks();
    size_t last_violation = 0;
    for (size_t i = 1; i + 1 <= K; ++i) {
        const double fi = f(sched.indices[i - 1]);
        const double fn = f(sched.indices[i]);
        out.ratios.push_back(fn / fi);
        if (!(fn <= c * fi)) last_violation = i;
    }
    if (last_violation == K - 1 && K >= 2)
        out.holds_from = std::nullopt;  // violated at the final checked ratio
    else
        out.holds_from = last_violation + 1;
    return out;
}

inline CRegularity check_c_regular(const RateFunction& f, const Schedule& sched,
                                   double c) {
    return check_c_regular(
        [&f](uint64_t N) { return f.value(N); }, sched, c);
}

// ---------------------------------------------------------------------------
// Greedy schedule search over the candidate mesh N in ceil(1.25^k): accept N
// when D_N < v(N) and N_prev * v(N) <= 1 - slack.

inline Schedule propose_schedule(const PointList& seq, const RateFunction& v,
                                 double slack) {
    if (!(slack > 0.0 && slack < 1.0))
        throw validation_error("slack must lie in (0,1)");
    if (seq.dim() != 1)
        throw guard_error("propose_schedule needs n = 1 (exact D_N per candidate)");

    std::vector<uint64_t> mesh;
    for (double x = 1.0; x <= static_cast<double>(seq.size()); x *= 1.25) {
        const uint64_t N = static_cast<uint64_t>(std::ceil(x));
        if (N > seq.size()) break;
        if (mesh.empty() || N > mesh.back()) mesh.push_back(N);
    }

    std::vector<uint64_t> accepted;
    uint64_t prev = 0;
    for (uint64_t N : mesh) {
        double rate;
        try {
            rate = v.value(N);
        } catch (const validation_error&) {
            continue;  // below the rate's domain (e.g. polylog at N=1)
        }
        if (static_cast<double>(prev) * rate > 1.0 - slack) continue;
        const double D = *extreme_discrepancy_exact(seq, N).extreme;
        if (D < rate) {
            accepted.push_back(N);
            prev = N;
        }
    }
    if (accepted.empty())
        throw validation_error(
            "no admissible schedule index: D_N < v(N) with the lacunarity "
            "margin never holds on the candidate mesh");
    return Schedule(std::move(accepted));
}

}  // namespace udseq
