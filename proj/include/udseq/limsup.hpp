#pragma once

// The truncated limsup set machinery: membership tests against
// |x_i - omega_{j,i}| < psi_i(j), hit enumeration over an index window,
// Monte Carlo measure estimates, and partial sums of the divergence
// criteria. Windows are always reported alongside results; nothing here
// claims anything about the untruncated set.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "udseq/core.hpp"
#include "udseq/dss.hpp"
#include "udseq/rates.hpp"

namespace udseq {

// ---------------------------------------------------------------------------
// One coordinate function psi_i.

class PsiCoordinate {
  public:
    enum class Family { power, rate_power, table };

    // C * j^(-tau). C = 0 is the degenerate "never hits" profile.
    static PsiCoordinate power(double C, double tau) {
        if (!(C >= 0.0)) throw validation_error("psi power needs C >= 0");
        if (!(tau >= 0.0)) throw validation_error("psi power needs tau >= 0");
        PsiCoordinate p;
        p.family_ = Family::power;
        p.c_ = C;
        p.tau_ = tau;
        return p;
    }

    // v(j)^tau for a scalar rate v.
    static PsiCoordinate rate_power(RateFunction v, double tau) {
        if (!(tau > 0.0)) throw validation_error("psi rate_power needs tau > 0");
        PsiCoordinate p;
        p.family_ = Family::rate_power;
        p.rate_ = std::move(v);
        p.tau_ = tau;
        return p;
    }

    static PsiCoordinate table(std::vector<std::pair<uint64_t, double>> pairs) {
        PsiCoordinate p;
        p.family_ = Family::table;
        p.rate_ = RateFunction::table(std::move(pairs));
        return p;
    }

    double value(uint64_t j) const {
        switch (family_) {
            case Family::power:
                return c_ * std::pow(static_cast<double>(j), -tau_);
            case Family::rate_power:
                return std::pow(rate_->value(j), tau_);
            case Family::table:
                return rate_->value(j);
        }
        throw validation_error("unknown psi family");
    }

    // ln psi at ln j.
    double log_value(double logj) const {
        switch (family_) {
            case Family::power:
                if (c_ == 0.0) return -std::numeric_limits<double>::infinity();
                return std::log(c_) - tau_ * logj;
            case Family::rate_power:
                return tau_ * rate_->log_value(logj);
            case Family::table:
                return rate_->log_value(logj);
        }
        throw validation_error("unknown psi family");
    }

    Family family() const { return family_; }
    double coefficient() const { return c_; }
    double tau() const { return tau_; }
    const RateFunction& rate() const { return *rate_; }

  private:
    PsiCoordinate() = default;
    Family family_ = Family::power;
    double c_ = 1.0;
    double tau_ = 0.0;
    std::optional<RateFunction> rate_;
};

struct ApproxProfile {
    std::vector<PsiCoordinate> psi;

    int dim() const { return static_cast<int>(psi.size()); }

    std::vector<double> values(uint64_t j) const {
        std::vector<double> v(psi.size());
        for (size_t i = 0; i < psi.size(); ++i) v[i] = psi[i].value(j);
        return v;
    }
};

struct Window {
    uint64_t j_min = 1;
    uint64_t j_max = 1;

    Window() = default;
    Window(uint64_t lo, uint64_t hi) : j_min(lo), j_max(hi) {
        if (lo < 1 || hi < lo)
            throw validation_error("window needs 1 <= j_min <= j_max");
    }
};

// ---------------------------------------------------------------------------

inline bool is_hit(const Point& x, const Point& w,
                   const std::vector<double>& psi_values) {
    if (x.size() != w.size() || x.size() != psi_values.size())
        throw validation_error("is_hit dimension mismatch");
    for (size_t i = 0; i < x.size(); ++i)
        if (!(std::fabs(x[i] - w[i]) < psi_values[i])) return false;
    return true;
}

namespace detail {

// Bucket index over the first coordinate of the window's points. Monotone
// psi means psi_1(j) <= psi_1(j_min) for every j in the window, so any hit
// lies within one bucket width of x in coordinate 0.
class HitSearcher {
  public:
    HitSearcher(const PointList& seq, Window win, const ApproxProfile& psi)
        : seq_(&seq), win_(win), psi_(&psi) {
        if (win.j_max > seq.size())
            throw validation_error("window reaches past the available prefix");
        if (psi.dim() != seq.dim())
            throw validation_error("profile dimension mismatch");
        reach_ = 0.0;
        for (const auto& p : psi.psi)
            reach_ = std::max(reach_, p.value(win.j_min));
        if (reach_ <= 0.0) return;  // psi == 0: nothing can ever hit
        if (reach_ >= 0.25) return;  // few buckets would not pay; linear scan
        const uint64_t window_count = win.j_max - win.j_min + 1;
        bucket_count_ = static_cast<size_t>(std::min(
            std::ceil(1.0 / reach_), 4.0 * static_cast<double>(window_count)));
        bucket_width_ = 1.0 / static_cast<double>(bucket_count_);
        buckets_.resize(bucket_count_);
        for (uint64_t j = win.j_min; j <= win.j_max; ++j)
            buckets_[bucket_of(seq.coord(j, 0))].push_back(j);
    }

    // Ascending hit indices in the window.
    std::vector<uint64_t> hits(const Point& x) const {
        std::vector<uint64_t> out;
        scan(x, [&out](uint64_t j) {
            out.push_back(j);
            return false;
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    bool any_hit(const Point& x) const {
        bool found = false;
        scan(x, [&found](uint64_t) {
            found = true;
            return true;  // stop
        });
        return found;
    }

  private:
    size_t bucket_of(double c) const {
        const auto b = static_cast<size_t>(c / bucket_width_);
        return std::min(b, bucket_count_ - 1);
    }

    bool test(const Point& x, uint64_t j) const {
        const int n = seq_->dim();
        for (int i = 0; i < n; ++i) {
            if (!(std::fabs(x[i] - seq_->coord(j, i)) < psi_->psi[i].value(j)))
                return false;
        }
        return true;
    }

    template <class F>
    void scan(const Point& x, F&& on_hit) const {
        if (static_cast<int>(x.size()) != seq_->dim())
            throw validation_error("sample point dimension mismatch");
        if (reach_ <= 0.0) return;
        if (buckets_.empty()) {
            for (uint64_t j = win_.j_min; j <= win_.j_max; ++j)
                if (test(x, j) && on_hit(j)) return;
            return;
        }
        const double lo = x[0] - reach_;
        const double hi = x[0] + reach_;
        const size_t b_lo = lo <= 0.0 ? 0 : bucket_of(lo);
        const size_t b_hi = hi >= 1.0 ? bucket_count_ - 1 : bucket_of(hi);
        for (size_t b = b_lo; b <= b_hi; ++b)
            for (uint64_t j : buckets_[b])
                if (test(x, j) && on_hit(j)) return;
    }

    const PointList* seq_;
    Window win_;
    const ApproxProfile* psi_;
    double reach_ = 0.0;         // max_i psi_i(j_min): no hit can be farther
    double bucket_width_ = 1.0;
    size_t bucket_count_ = 0;
    std::vector<std::vector<uint64_t>> buckets_;
};

}  // namespace detail

inline std::vector<uint64_t> hit_indices(const Point& x, const PointList& seq,
                                         Window win, const ApproxProfile& psi) {
    return detail::HitSearcher(seq, win, psi).hits(x);
}

// ---------------------------------------------------------------------------

struct MeasureEstimate {
    double fraction = 0.0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    double ci95 = 0.0;  // 1.96 * sqrt(p (1-p) / samples)
    Window window;
};

// Fraction of seeded uniform sample points hit by at least one window index.
// Sample s draws its coordinates from stream (seed, s), so any thread count
// produces the same fraction.
inline MeasureEstimate measure_estimate(const PointList& seq,
                                        const ApproxProfile& psi, Window win,
                                        uint64_t samples, uint64_t seed,
                                        int threads = 1) {
    if (samples < 100)
        throw validation_error("measure estimate needs samples >= 100");
    const detail::HitSearcher searcher(seq, win, psi);
    const int n = seq.dim();

    const int T = std::max(1, threads);
    std::vector<uint64_t> counts(T, 0);
    auto work = [&](int t) {
        uint64_t local = 0;
        Point x(n);
        for (uint64_t s = t; s < samples; s += T) {
            SplitMix64 rng = stream_for(seed, s);
            for (int i = 0; i < n; ++i) x[i] = rng.next_double();
            if (searcher.any_hit(x)) ++local;
        }
        counts[t] = local;
    };
    if (T == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < T; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    uint64_t hit = 0;
    for (uint64_t c : counts) hit += c;

    MeasureEstimate est;
    est.fraction = static_cast<double>(hit) / static_cast<double>(samples);
    est.samples = samples;
    est.seed = seed;
    est.ci95 = 1.96 * std::sqrt(est.fraction * (1.0 - est.fraction) /
                                static_cast<double>(samples));
    est.window = win;
    return est;
}

// ---------------------------------------------------------------------------
// Series criteria.

enum class SeriesKind { khintchine, thm12, thm13, bosh_chaika };

enum class SeriesTrend { diverging, converging, inconclusive };

inline const char* to_string(SeriesTrend t) {
    switch (t) {
        case SeriesTrend::diverging: return "diverging";
        case SeriesTrend::converging: return "converging";
        case SeriesTrend::inconclusive: return "inconclusive";
    }
    return "?";
}

struct SeriesResult {
    std::vector<double> terms;
    std::vector<double> partial_sums;
    SeriesTrend trend = SeriesTrend::inconclusive;
};

struct SeriesSpec {
    SeriesKind kind = SeriesKind::bosh_chaika;
    ApproxProfile psi;
    // khintchine only:
    std::optional<RateFunction> v;
    std::optional<Schedule> schedule;
    // thm12 / thm13 only:
    double M = 2.0;
};

namespace detail {

// ln of term j, evaluated without materializing N
// (thm12 visits N = M^(3^j), far beyond any integer type).
inline double log_term(const SeriesSpec& spec, uint64_t j) {
    const double jd = static_cast<double>(j);
    switch (spec.kind) {
        case SeriesKind::khintchine: {
            const uint64_t Nj = spec.schedule->indices[j - 1];
            const double logN = std::log(static_cast<double>(Nj));
            double lt = -spec.v->log_value(logN);
            for (const auto& p : spec.psi.psi) lt += p.log_value(logN);
            return lt;
        }
        case SeriesKind::thm12: {
            const double e = std::pow(3.0, jd);
            const double logN = e * std::log(spec.M);
            double lt = 0.5 * logN - 0.5 * std::log(jd);
            for (const auto& p : spec.psi.psi) lt += p.log_value(logN);
            return lt;
        }
        case SeriesKind::thm13: {
            const double logN = jd * jd * std::log(spec.M);
            const int n = spec.psi.dim();
            double lt = logN - 2.0 * n * std::log(jd);
            for (const auto& p : spec.psi.psi) lt += p.log_value(logN);
            return lt;
        }
        case SeriesKind::bosh_chaika: {
            double lt = 0.0;
            for (const auto& p : spec.psi.psi) lt += p.log_value(std::log(jd));
            return lt;
        }
    }
    throw validation_error("unknown series kind");
}

}  // namespace detail

// Heuristic trend thresholds, fixed and documented: geometric decay when the
// term ratio stays <= 0.9 over the last 10 terms; divergence when the last
// 10 terms stay >= 1e-6 or the partial sums grow at least log-linearly over
// the second half. The label is a heuristic, never a proof.
inline SeriesResult series_partial_sums(const SeriesSpec& spec, uint64_t J) {
    if (J < 1) throw validation_error("series horizon must be >= 1");
    if (spec.psi.psi.empty()) throw validation_error("series needs a profile");
    if (spec.kind == SeriesKind::khintchine) {
        if (!spec.v || !spec.schedule)
            throw validation_error("khintchine series needs v and a schedule");
        if (J > spec.schedule->blocks())
            throw validation_error("series horizon exceeds the schedule");
    }
    if ((spec.kind == SeriesKind::thm12 || spec.kind == SeriesKind::thm13) &&
        !(spec.M > 1.0))
        throw validation_error("series base M must be > 1");

    SeriesResult out;
    out.terms.reserve(J);
    out.partial_sums.reserve(J);
    double sum = 0.0;
    for (uint64_t j = 1; j <= J; ++j) {
        const double lt = detail::log_term(spec, j);
        if (lt > 690.0)
            throw guard_error("series term overflows at j=" + std::to_string(j) +
                              "; shorten the horizon");
        const double term = std::exp(lt);
        sum += term;
        out.terms.push_back(term);
        out.partial_sums.push_back(sum);
    }

    const size_t W = std::min<size_t>(10, out.terms.size());
    bool geometric = out.terms.size() >= 2;
    for (size_t i = out.terms.size() - W; i + 1 < out.terms.size(); ++i) {
        const double a = out.terms[i], b = out.terms[i + 1];
        if (!(a > 0.0) || !(b <= 0.9 * a)) geometric = false;
    }
    bool sustained = true;
    for (size_t i = out.terms.size() - W; i < out.terms.size(); ++i)
        if (!(out.terms[i] >= 1e-6)) sustained = false;

    if (geometric) {
        out.trend = SeriesTrend::converging;
    } else if (sustained) {
        out.trend = SeriesTrend::diverging;
    } else if (J >= 4) {
        const size_t h = J / 2;
        const double growth = out.partial_sums[J - 1] - out.partial_sums[h - 1];
        const double span = std::log(static_cast<double>(J)) -
                            std::log(static_cast<double>(h));
        out.trend = growth >= 1e-6 * span ? SeriesTrend::diverging
                                          : SeriesTrend::inconclusive;
    }
    return out;
}

}  // namespace udseq
