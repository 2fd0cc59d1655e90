#pragma once

// Core vocabulary for the library: points in [0,1)^n, half-open axis
// rectangles, sup-metric balls, error types, and the counter-based PRNG
// used everywhere a seed appears.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace udseq {

using std::size_t;
using std::uint64_t;

// ---------------------------------------------------------------------------
// Errors. The CLI maps these onto distinct exit codes.

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameters, malformed configs, violated preconditions.
struct validation_error : error {
    using error::error;
};

// A computation guard refused to run (search too large, horizon overflow).
struct guard_error : error {
    using error::error;
};

// File system and parsing problems.
struct io_error : error {
    using error::error;
};

// ---------------------------------------------------------------------------
// SplitMix64. Counter-based: the state advances by a fixed odd constant, so
// the k-th draw from a seed is random-access (state = seed + k * gamma).
// Reference: Steele, Lea, Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014. Period 2^64.

inline constexpr uint64_t splitmix64_gamma = 0x9E3779B97F4A7C15ull;

inline uint64_t splitmix64_mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Value of draw number `k` (k >= 1) from `seed`.
inline uint64_t splitmix64_at(uint64_t seed, uint64_t k) {
    return splitmix64_mix(seed + k * splitmix64_gamma);
}

// 53-bit mantissa double in [0,1).
inline double u64_to_unit(uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53;
}

class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += splitmix64_gamma;
        return splitmix64_mix(state_);
    }

    double next_double() { return u64_to_unit(next_u64()); }

  private:
    uint64_t state_;
};

// Derives an independent stream for (seed, index) pairs; used so that
// per-sample work can be farmed out to threads without changing results.
inline SplitMix64 stream_for(uint64_t seed, uint64_t index) {
    return SplitMix64(splitmix64_mix(seed ^ splitmix64_mix(index + 1)));
}

// ---------------------------------------------------------------------------

inline uint64_t ipow_checked(uint64_t base, unsigned exp, bool* overflow) {
    uint64_t r = 1;
    for (unsigned k = 0; k < exp; ++k) {
        if (r > std::numeric_limits<uint64_t>::max() / base) {
            *overflow = true;
            return 0;
        }
        r *= base;
    }
    *overflow = false;
    return r;
}

// ---------------------------------------------------------------------------
// Exact fractional part of j * alpha.
//
// fma gives the exact low part of the product, so the only rounding happens
// in the final addition; the accumulated error stays below 1e-15 even for
// j ~ 1e7, well under the 1e-12 budget the generators promise.

inline double frac_mul(uint64_t j, double alpha) {
    const double jd = static_cast<double>(j);
    const double hi = jd * alpha;
    const double lo = std::fma(jd, alpha, -hi);
    double f = hi - std::floor(hi) + lo;
    if (f >= 1.0) f -= 1.0;
    if (f < 0.0) f += 1.0;
    return f;
}

// ---------------------------------------------------------------------------
// Points.

using Point = std::vector<double>;

inline void validate_unit_point(const Point& p) {
    if (p.empty()) throw validation_error("point must have dimension >= 1");
    for (double c : p) {
        if (!(c >= 0.0 && c < 1.0))
            throw validation_error("coordinate " + std::to_string(c) +
                                   " outside [0,1)");
    }
}

// Finite prefix of a sequence in [0,1)^n. Indexing is 1-based to match the
// usual convention for omega_j; storage is flat and immutable after build.
class PointList {
  public:
    PointList() : dim_(0) {}
    explicit PointList(int dim) : dim_(dim) {
        if (dim < 1) throw validation_error("dimension must be >= 1");
    }

    int dim() const { return dim_; }
    uint64_t size() const { return dim_ == 0 ? 0 : flat_.size() / dim_; }
    bool empty() const { return flat_.empty(); }

    // j is 1-based, axis is 0-based.
    double coord(uint64_t j, int axis) const {
        return flat_[(j - 1) * dim_ + axis];
    }

    Point point(uint64_t j) const {
        Point p(dim_);
        for (int i = 0; i < dim_; ++i) p[i] = coord(j, i);
        return p;
    }

    void append(const Point& p) {
        if (dim_ == 0) dim_ = static_cast<int>(p.size());
        if (static_cast<int>(p.size()) != dim_)
            throw validation_error("point dimension mismatch");
        validate_unit_point(p);
        flat_.insert(flat_.end(), p.begin(), p.end());
    }

    // Fast path for generators that already guarantee the range invariant.
    void append_unchecked(const double* c) {
        flat_.insert(flat_.end(), c, c + dim_);
    }

    void reserve(uint64_t n) { flat_.reserve(n * dim_); }

    const std::vector<double>& flat() const { return flat_; }

  private:
    int dim_;
    std::vector<double> flat_;
};

// ---------------------------------------------------------------------------
// Half-open axis rectangle  prod_i [low_i, high_i).

struct Rect {
    std::vector<double> low;
    std::vector<double> high;

    Rect() = default;
    Rect(std::vector<double> lo, std::vector<double> hi)
        : low(std::move(lo)), high(std::move(hi)) {
        validate();
    }

    int dim() const { return static_cast<int>(low.size()); }

    void validate() const {
        if (low.empty() || low.size() != high.size())
            throw validation_error("rectangle bounds malformed");
        for (size_t i = 0; i < low.size(); ++i) {
            if (!(0.0 <= low[i] && low[i] < high[i] && high[i] <= 1.0))
                throw validation_error("rectangle needs 0 <= a_i < b_i <= 1");
        }
    }

    double volume() const {
        double v = 1.0;
        for (size_t i = 0; i < low.size(); ++i) v *= high[i] - low[i];
        return v;
    }

    // Half-open membership: a_i <= x_i < b_i in every coordinate.
    bool contains(const Point& x) const {
        for (size_t i = 0; i < low.size(); ++i)
            if (!(low[i] <= x[i] && x[i] < high[i])) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Sup-metric ball: an axis cube [c_i - r, c_i + r] clipped to [0,1]^n.

struct Ball {
    Point center;
    double radius = 0.0;

    Ball() = default;
    Ball(Point c, double r) : center(std::move(c)), radius(r) {
        if (center.empty()) throw validation_error("ball needs a center");
        if (!(radius > 0.0)) throw validation_error("ball radius must be > 0");
        if (!(clipped_volume() > 0.0))
            throw validation_error("ball has empty intersection with [0,1]^n");
    }

    int dim() const { return static_cast<int>(center.size()); }
    double lo(int i) const { return std::max(0.0, center[i] - radius); }
    double hi(int i) const { return std::min(1.0, center[i] + radius); }

    double side(int i) const { return hi(i) - lo(i); }
    double min_side() const {
        double m = std::numeric_limits<double>::infinity();
        for (int i = 0; i < dim(); ++i) m = std::min(m, side(i));
        return m;
    }

    double clipped_volume() const {
        double v = 1.0;
        for (int i = 0; i < dim(); ++i) v *= side(i);
        return v;
    }

    bool contains(const Point& x) const {
        for (int i = 0; i < dim(); ++i)
            if (x[i] < lo(i) || x[i] > hi(i)) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Formatting used by every CSV writer: round-trip exact, locale independent.

inline std::string fp17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace udseq
