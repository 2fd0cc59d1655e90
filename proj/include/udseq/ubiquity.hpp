#pragma once

// Measurable verification of local ubiquity: what fraction of a ball is
// covered by the rectangles Delta(omega_j, rho(N_k)) of an index block.
//
// The grid method decides each cell by whether its center is covered. Two
// interchangeable evaluation strategies exist:
//   - streaming: walk the block indices and mark cells (any source);
//   - inversion: for radical-inverse sequences in one dimension, walk the
//     candidate sequence values near a cell center instead. phi_b(j) for
//     j < b^L is rev_L(j)/b^L, so values in an interval enumerate as
//     integers m with m/b^L inside it, and j = rev_L(m) recovers the index.
// Both test the same strict predicate |center - omega_j| < rho_i, so they
// agree cell for cell; the inversion path makes blocks like (2^25, 2^36]
// affordable, where streaming would visit 7e10 points.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "udseq/core.hpp"
#include "udseq/dss.hpp"
#include "udseq/rates.hpp"
#include "udseq/sequences.hpp"

namespace udseq {

// ---------------------------------------------------------------------------
// rho_i(N) = base(N)^{e_i}. With sum e_i = 1 the rectangle volumes satisfy
// prod 2 rho_i = 2^n v, the normalization Proposition-style coverage needs.

struct RhoProfile {
    RateFunction base;
    std::vector<double> exponents;

    RhoProfile(RateFunction b, std::vector<double> exps)
        : base(std::move(b)), exponents(std::move(exps)) {
        if (exponents.empty())
            throw validation_error("rho profile needs at least one exponent");
        for (double e : exponents)
            if (!(e > 0.0))
                throw validation_error("rho exponents must be positive");
    }

    int dim() const { return static_cast<int>(exponents.size()); }

    double exponent_sum() const {
        double s = 0.0;
        for (double e : exponents) s += e;
        return s;
    }

    bool v_normalized() const { return std::fabs(exponent_sum() - 1.0) <= 1e-9; }

    std::vector<double> radii(uint64_t N) const {
        const double b = base.value(N);
        std::vector<double> r(exponents.size());
        for (size_t i = 0; i < exponents.size(); ++i)
            r[i] = std::pow(b, exponents[i]);
        return r;
    }

    // prod_i rho_i(N); equals v(N) when the exponents sum to 1.
    double product(uint64_t N) const {
        return std::pow(base.value(N), exponent_sum());
    }
};

// ---------------------------------------------------------------------------

struct CoverMethod {
    enum class Kind { grid, monte_carlo };

    Kind kind = Kind::grid;
    double resolution = 0.0;  // 0: default 1e-4 (n=1) or 1e-3 (n=2)
    uint64_t samples = 10000;
    uint64_t seed = 1;

    static CoverMethod grid(double res = 0.0) {
        CoverMethod m;
        m.kind = Kind::grid;
        m.resolution = res;
        return m;
    }
    static CoverMethod monte_carlo(uint64_t samples, uint64_t seed) {
        CoverMethod m;
        m.kind = Kind::monte_carlo;
        m.samples = samples;
        m.seed = seed;
        return m;
    }

    std::string describe() const {
        if (kind == Kind::grid) return "grid(" + fp17(resolution) + ")";
        return "monte_carlo(" + std::to_string(samples) + "," +
               std::to_string(seed) + ")";
    }
};

struct CoverageReport {
    size_t k = 0;
    double fraction = 0.0;
    CoverMethod method;
    double error_bound = 0.0;
    std::string note;
};

namespace detail {

// ∃ j in (j_lo, j_hi] with |phi_b(j) - x| < rho, by inverting the digit
// reversal. Exact for b^L <= 2^53 (the values enumerate without rounding).
inline bool radical_any_in(uint64_t base, uint64_t j_lo, uint64_t j_hi,
                           double x, double rho) {
    if (j_hi <= j_lo || !(rho > 0.0)) return false;
    unsigned L = 0;
    uint64_t PL = 1;
    while (PL <= j_hi) {
        if (PL > std::numeric_limits<uint64_t>::max() / base)
            throw guard_error("radical-inverse inversion overflows past 2^63");
        PL *= base;
        ++L;
    }
    const double PLd = static_cast<double>(PL);

    double lo_d = (x - rho) * PLd;
    double hi_d = (x + rho) * PLd;
    uint64_t m_lo = lo_d <= 1.0 ? 1 : static_cast<uint64_t>(lo_d);
    uint64_t m_hi =
        hi_d >= static_cast<double>(PL - 1) ? PL - 1
                                            : static_cast<uint64_t>(hi_d) + 1;
    if (m_hi < m_lo) return false;
    if (m_hi - m_lo > (uint64_t(1) << 23))
        throw guard_error(
            "radical-inverse inversion would enumerate > 8e6 candidates; "
            "use the streaming strategy or a coarser rho");

    for (uint64_t m = m_lo; m <= m_hi; ++m) {
        const double phi = static_cast<double>(m) / PLd;
        if (!(std::fabs(phi - x) < rho)) continue;
        uint64_t j = 0, t = m;
        for (unsigned d = 0; d < L; ++d) {
            j = j * base + t % base;
            t /= base;
        }
        if (j > j_lo && j <= j_hi) return true;
    }
    return false;
}

// Uniform cell grid over [0,1]^n restricted to a per-axis cell range,
// marked with which cell centers are covered by the union of open
// rectangles omega_j +- rho over j in (j_lo, j_hi].
class CoverGrid {
  public:
    CoverGrid(int n, uint64_t cells, std::vector<uint64_t> c_lo,
              std::vector<uint64_t> c_hi)
        : n_(n), cells_(cells), c_lo_(std::move(c_lo)), c_hi_(std::move(c_hi)) {
        total_ = 1;
        for (int i = 0; i < n_; ++i) total_ *= extent(i);
        covered_.assign(total_, 0);
    }

    uint64_t extent(int axis) const { return c_hi_[axis] - c_lo_[axis] + 1; }
    double center(int axis, uint64_t c) const {
        return (static_cast<double>(c) + 0.5) / static_cast<double>(cells_);
    }

    void mark_point(const double* x, const std::vector<double>& rho) {
        // Candidate cell range per axis, then the exact strict test.
        uint64_t lo[2], hi[2];
        for (int i = 0; i < n_; ++i) {
            const double a = (x[i] - rho[i]) * static_cast<double>(cells_) - 0.5;
            const double b = (x[i] + rho[i]) * static_cast<double>(cells_) - 0.5;
            int64_t la = static_cast<int64_t>(std::floor(a));
            int64_t lb = static_cast<int64_t>(std::ceil(b));
            la = std::max<int64_t>(la, static_cast<int64_t>(c_lo_[i]));
            lb = std::min<int64_t>(lb, static_cast<int64_t>(c_hi_[i]));
            if (la > lb) return;
            lo[i] = static_cast<uint64_t>(la);
            hi[i] = static_cast<uint64_t>(lb);
        }
        if (n_ == 1) {
            for (uint64_t c = lo[0]; c <= hi[0]; ++c)
                if (std::fabs(center(0, c) - x[0]) < rho[0])
                    covered_[c - c_lo_[0]] = 1;
        } else {
            for (uint64_t cx = lo[0]; cx <= hi[0]; ++cx) {
                if (!(std::fabs(center(0, cx) - x[0]) < rho[0])) continue;
                const uint64_t row = (cx - c_lo_[0]) * extent(1);
                for (uint64_t cy = lo[1]; cy <= hi[1]; ++cy)
                    if (std::fabs(center(1, cy) - x[1]) < rho[1])
                        covered_[row + cy - c_lo_[1]] = 1;
            }
        }
    }

    bool covered(const uint64_t* c) const {
        uint64_t idx = c[0] - c_lo_[0];
        if (n_ == 2) idx = idx * extent(1) + (c[1] - c_lo_[1]);
        return covered_[idx] != 0;
    }

    void set_covered(uint64_t flat) { covered_[flat] = 1; }
    uint8_t* data() { return covered_.data(); }
    uint64_t size() const { return total_; }
    uint64_t cells() const { return cells_; }
    uint64_t axis_lo(int i) const { return c_lo_[i]; }
    uint64_t axis_hi(int i) const { return c_hi_[i]; }

  private:
    int n_;
    uint64_t cells_;
    std::vector<uint64_t> c_lo_, c_hi_;
    uint64_t total_ = 0;
    std::vector<uint8_t> covered_;
};

inline uint64_t cells_for_resolution(double res, int n) {
    double r = res;
    if (r == 0.0) r = (n == 1) ? 1e-4 : 1e-3;
    if (!(r > 0.0 && r < 0.5))
        throw validation_error("grid resolution must lie in (0, 0.5)");
    const double c = 1.0 / r;
    const uint64_t C = static_cast<uint64_t>(std::llround(c));
    if (std::fabs(c - static_cast<double>(C)) > 1e-6)
        throw validation_error("grid resolution must divide 1");
    return C;
}

inline const RadicalInverseSource* as_radical_1d(const SequenceSource& src) {
    const auto* r = dynamic_cast<const RadicalInverseSource*>(&src);
    return (r && r->dim() == 1) ? r : nullptr;
}

inline void build_covered(CoverGrid& grid, const SequenceSource& src,
                          uint64_t j_lo, uint64_t j_hi,
                          const std::vector<double>& rho) {
    if (j_hi <= j_lo) return;  // empty block: nothing covered
    const int n = src.dim();
    if (const auto* rad = as_radical_1d(src)) {
        const uint64_t b = rad->bases()[0];
        for (uint64_t c = grid.axis_lo(0); c <= grid.axis_hi(0); ++c) {
            if (radical_any_in(b, j_lo, j_hi, grid.center(0, c), rho[0]))
                grid.set_covered(c - grid.axis_lo(0));
        }
        return;
    }
    if (j_hi - j_lo > 200000000)
        throw guard_error(
            "streaming a block of " + std::to_string(j_hi - j_lo) +
            " points is infeasible; only 1-D radical-inverse sources support "
            "blocks this large");
    std::vector<double> x(n);
    for (uint64_t j = j_lo + 1; j <= j_hi; ++j) {
        for (int i = 0; i < n; ++i) x[i] = src.coord(j, i);
        grid.mark_point(x.data(), rho);
    }
}

// Point membership query for the Monte Carlo method.
class UnionQuery {
  public:
    UnionQuery(const SequenceSource& src, uint64_t j_lo, uint64_t j_hi,
               std::vector<double> rho)
        : src_(&src), j_lo_(j_lo), j_hi_(j_hi), rho_(std::move(rho)) {
        radical_ = as_radical_1d(src);
        if (radical_ || j_hi <= j_lo) return;
        if (j_hi - j_lo > 20000000)
            throw guard_error(
                "block too large for monte_carlo point queries; use the grid "
                "method");
        const int n = src.dim();
        pts_.reserve(static_cast<size_t>(j_hi - j_lo));
        for (uint64_t j = j_lo + 1; j <= j_hi; ++j) {
            Entry e;
            e.x0 = src.coord(j, 0);
            for (int i = 1; i < n; ++i) e.rest.push_back(src.coord(j, i));
            pts_.push_back(std::move(e));
        }
        std::sort(pts_.begin(), pts_.end(),
                  [](const Entry& a, const Entry& b) { return a.x0 < b.x0; });
    }

    bool covered(const Point& x) const {
        if (j_hi_ <= j_lo_) return false;
        if (radical_)
            return radical_any_in(radical_->bases()[0], j_lo_, j_hi_, x[0],
                                  rho_[0]);
        const double lo = x[0] - rho_[0];
        auto it = std::lower_bound(
            pts_.begin(), pts_.end(), lo,
            [](const Entry& e, double v) { return e.x0 <= v; });
        for (; it != pts_.end() && it->x0 - x[0] < rho_[0]; ++it) {
            if (!(std::fabs(it->x0 - x[0]) < rho_[0])) continue;
            bool ok = true;
            for (size_t i = 0; i < it->rest.size(); ++i)
                if (!(std::fabs(it->rest[i] - x[i + 1]) < rho_[i + 1])) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
        return false;
    }

  private:
    struct Entry {
        double x0;
        std::vector<double> rest;
    };
    const SequenceSource* src_;
    const RadicalInverseSource* radical_ = nullptr;
    uint64_t j_lo_, j_hi_;
    std::vector<double> rho_;
    std::vector<Entry> pts_;
};

struct FractionResult {
    double fraction = 0.0;
    double error_bound = 0.0;
};

// Fraction of the ball covered by the union over (j_lo, j_hi].
inline FractionResult union_fraction(const SequenceSource& src, uint64_t j_lo,
                                     uint64_t j_hi,
                                     const std::vector<double>& rho,
                                     const Ball& ball,
                                     const CoverMethod& method) {
    const int n = src.dim();
    if (ball.dim() != n) throw validation_error("ball dimension mismatch");
    if (static_cast<int>(rho.size()) != n)
        throw validation_error("rho dimension mismatch");

    FractionResult out;
    if (method.kind == CoverMethod::Kind::grid) {
        if (n > 2)
            throw guard_error("grid coverage supports n <= 2; use monte_carlo");
        const uint64_t C = cells_for_resolution(method.resolution, n);
        const double res = 1.0 / static_cast<double>(C);
        if (ball.min_side() < 2.0 * res)
            throw guard_error(
                "ball is smaller than the grid resolution; use a finer grid "
                "or the monte_carlo method");
        std::vector<uint64_t> c_lo(n), c_hi(n);
        for (int i = 0; i < n; ++i) {
            // Cells whose centers lie inside the (closed) ball cube.
            const auto lo = static_cast<int64_t>(
                std::ceil(ball.lo(i) * static_cast<double>(C) - 0.5));
            const auto hi = static_cast<int64_t>(
                std::floor(ball.hi(i) * static_cast<double>(C) - 0.5));
            c_lo[i] = static_cast<uint64_t>(std::max<int64_t>(0, lo));
            c_hi[i] = static_cast<uint64_t>(
                std::min<int64_t>(static_cast<int64_t>(C) - 1, hi));
            if (c_lo[i] > c_hi[i])
                throw guard_error("no grid cell centers inside the ball");
        }
        CoverGrid grid(n, C, c_lo, c_hi);
        build_covered(grid, src, j_lo, j_hi, rho);
        uint64_t covered = 0;
        for (uint64_t f = 0; f < grid.size(); ++f)
            covered += grid.data()[f] != 0;
        out.fraction =
            static_cast<double>(covered) / static_cast<double>(grid.size());
        out.error_bound = 2.0 * n * res / ball.min_side();
        return out;
    }

    if (method.samples < 100)
        throw validation_error("monte_carlo needs samples >= 100");
    UnionQuery query(src, j_lo, j_hi, rho);
    uint64_t covered = 0;
    Point x(n);
    for (uint64_t s = 0; s < method.samples; ++s) {
        SplitMix64 rng = stream_for(method.seed, s);
        for (int i = 0; i < n; ++i)
            x[i] = ball.lo(i) + rng.next_double() * (ball.hi(i) - ball.lo(i));
        if (query.covered(x)) ++covered;
    }
    out.fraction =
        static_cast<double>(covered) / static_cast<double>(method.samples);
    out.error_bound = 3.0 * std::sqrt(out.fraction * (1.0 - out.fraction) /
                                      static_cast<double>(method.samples));
    return out;
}

inline std::string rho_note(const RhoProfile& rho) {
    if (rho.v_normalized()) return {};
    return "rho exponents sum to " + fp17(rho.exponent_sum()) +
           ", not 1; coverage is reported as-is";
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline CoverageReport block_cover_fraction(const SequenceSource& src,
                                           const Schedule& sched, size_t k,
                                           const RhoProfile& rho,
                                           const Ball& ball,
                                           const CoverMethod& method) {
    if (k < 1 || k > sched.blocks())
        throw validation_error("block index out of schedule range");
    if (sched.upper(k) > src.size())
        throw validation_error("block reaches past the available prefix");
    if (rho.dim() != src.dim())
        throw validation_error("rho profile dimension mismatch");

    const uint64_t Nk = sched.upper(k);
    const auto radii = rho.radii(Nk);
    const auto fr =
        detail::union_fraction(src, sched.lower(k), Nk, radii, ball, method);
    CoverageReport rep;
    rep.k = k;
    rep.fraction = fr.fraction;
    rep.method = method;
    rep.error_bound = fr.error_bound;
    rep.note = detail::rho_note(rho);
    return rep;
}

inline CoverageReport full_cover_fraction(const SequenceSource& src,
                                          uint64_t N_k, const RhoProfile& rho,
                                          const Ball& ball,
                                          const CoverMethod& method) {
    if (N_k < 1 || N_k > src.size())
        throw validation_error("prefix bound N_k out of range");
    if (rho.dim() != src.dim())
        throw validation_error("rho profile dimension mismatch");
    const auto radii = rho.radii(N_k);
    const auto fr = detail::union_fraction(src, 0, N_k, radii, ball, method);
    CoverageReport rep;
    rep.fraction = fr.fraction;
    rep.method = method;
    rep.error_bound = fr.error_bound;
    rep.note = detail::rho_note(rho);
    return rep;
}

struct PriorBlockExcess {
    size_t k = 0;
    double lhs = 0.0;  // normalized prior-block coverage of the ball
    double rhs = 0.0;  // (1+delta)(1+eta)^n N_{k-1} v(N_k)
    bool holds = false;
    CoverageReport cover;
};

inline PriorBlockExcess prior_block_excess(const SequenceSource& src,
                                           const Schedule& sched, size_t k,
                                           const RhoProfile& rho,
                                           const Ball& ball, double delta,
                                           double eta,
                                           const CoverMethod& method) {
    if (k < 1 || k > sched.blocks())
        throw validation_error("block index out of schedule range");
    if (!(delta > 0.0) || !(eta > 0.0))
        throw validation_error("delta and eta must be positive");
    if (rho.dim() != src.dim())
        throw validation_error("rho profile dimension mismatch");

    const uint64_t Nk = sched.upper(k);
    const uint64_t Nprev = sched.lower(k);
    if (Nprev > src.size())
        throw validation_error("prior block reaches past the available prefix");

    PriorBlockExcess out;
    out.k = k;
    out.rhs = (1.0 + delta) *
              std::pow(1.0 + eta, static_cast<double>(src.dim())) *
              static_cast<double>(Nprev) * rho.product(Nk);
    if (Nprev == 0) {
        out.lhs = 0.0;
        out.holds = true;  // empty prior block, nothing to bound
        out.cover.k = k;
        out.cover.method = method;
        out.cover.note = "empty prior block";
        return out;
    }
    const auto radii = rho.radii(Nk);
    const auto fr = detail::union_fraction(src, 0, Nprev, radii, ball, method);
    out.lhs = fr.fraction;
    out.holds = out.lhs < out.rhs;
    out.cover.k = k;
    out.cover.fraction = fr.fraction;
    out.cover.method = method;
    out.cover.error_bound = fr.error_bound;
    out.cover.note = detail::rho_note(rho);
    return out;
}

struct UbiquityEntry {
    size_t ball_id = 0;  // position in the input list, 1-based
    size_t k = 0;
    double fraction = 0.0;
    double error_bound = 0.0;
};

struct UbiquityVerification {
    double c_hat = 0.0;  // min fraction over balls and blocks
    std::vector<UbiquityEntry> table;
    CoverMethod method;
};

inline UbiquityVerification verify_local_ubiquity(
    const SequenceSource& src, const Schedule& sched, const RhoProfile& rho,
    const std::vector<Ball>& balls, size_t k_lo, size_t k_hi,
    const CoverMethod& method) {
    if (balls.empty()) throw validation_error("ball list is empty");
    if (k_lo < 1 || k_hi > sched.blocks() || k_lo > k_hi)
        throw validation_error("block range out of schedule range");
    if (rho.dim() != src.dim())
        throw validation_error("rho profile dimension mismatch");
    for (const auto& b : balls)
        if (b.dim() != src.dim())
            throw validation_error("ball dimension mismatch");
    if (sched.upper(k_hi) > src.size())
        throw validation_error("block range reaches past the available prefix");

    UbiquityVerification out;
    out.method = method;
    out.c_hat = std::numeric_limits<double>::infinity();

    for (size_t k = k_lo; k <= k_hi; ++k) {
        const uint64_t Nk = sched.upper(k);
        const auto radii = rho.radii(Nk);
        if (method.kind == CoverMethod::Kind::grid) {
            // One grid over [0,1]^n per block serves every ball.
            const int n = src.dim();
            if (n > 2)
                throw guard_error("grid coverage supports n <= 2; use monte_carlo");
            const uint64_t C = detail::cells_for_resolution(method.resolution, n);
            const double res = 1.0 / static_cast<double>(C);
            std::vector<uint64_t> lo(n, 0), hi(n, C - 1);
            detail::CoverGrid grid(n, C, lo, hi);
            detail::build_covered(grid, src, sched.lower(k), Nk, radii);
            for (size_t bi = 0; bi < balls.size(); ++bi) {
                const Ball& ball = balls[bi];
                if (ball.min_side() < 2.0 * res)
                    throw guard_error(
                        "ball smaller than the grid resolution; refine the grid");
                uint64_t covered = 0, total = 0;
                uint64_t c0_lo = static_cast<uint64_t>(std::max<int64_t>(
                    0, static_cast<int64_t>(
                           std::ceil(ball.lo(0) * static_cast<double>(C) - 0.5))));
                uint64_t c0_hi = static_cast<uint64_t>(std::min<int64_t>(
                    static_cast<int64_t>(C) - 1,
                    static_cast<int64_t>(
                        std::floor(ball.hi(0) * static_cast<double>(C) - 0.5))));
                if (n == 1) {
                    for (uint64_t c = c0_lo; c <= c0_hi; ++c) {
                        ++total;
                        covered += grid.covered(&c) ? 1 : 0;
                    }
                } else {
                    uint64_t c1_lo = static_cast<uint64_t>(std::max<int64_t>(
                        0, static_cast<int64_t>(std::ceil(
                               ball.lo(1) * static_cast<double>(C) - 0.5))));
                    uint64_t c1_hi = static_cast<uint64_t>(std::min<int64_t>(
                        static_cast<int64_t>(C) - 1,
                        static_cast<int64_t>(std::floor(
                            ball.hi(1) * static_cast<double>(C) - 0.5))));
                    uint64_t cc[2];
                    for (uint64_t cx = c0_lo; cx <= c0_hi; ++cx)
                        for (uint64_t cy = c1_lo; cy <= c1_hi; ++cy) {
                            cc[0] = cx;
                            cc[1] = cy;
                            ++total;
                            covered += grid.covered(cc) ? 1 : 0;
                        }
                }
                if (total == 0)
                    throw guard_error("no grid cell centers inside a ball");
                UbiquityEntry e;
                e.ball_id = bi + 1;
                e.k = k;
                e.fraction =
                    static_cast<double>(covered) / static_cast<double>(total);
                e.error_bound = 2.0 * n * res / ball.min_side();
                out.table.push_back(e);
                out.c_hat = std::min(out.c_hat, e.fraction);
            }
        } else {
            for (size_t bi = 0; bi < balls.size(); ++bi) {
                const auto fr = detail::union_fraction(
                    src, sched.lower(k), Nk, radii, balls[bi], method);
                UbiquityEntry e;
                e.ball_id = bi + 1;
                e.k = k;
                e.fraction = fr.fraction;
                e.error_bound = fr.error_bound;
                out.table.push_back(e);
                out.c_hat = std::min(out.c_hat, e.fraction);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// PointList convenience overloads.

class PointListSource final : public SequenceSource {
  public:
    explicit PointListSource(const PointList& p) : p_(&p) {}
    int dim() const override { return p_->dim(); }
    uint64_t size() const override { return p_->size(); }
    double coord(uint64_t j, int axis) const override {
        return p_->coord(j, axis);
    }

  private:
    const PointList* p_;
};

inline CoverageReport block_cover_fraction(const PointList& seq,
                                           const Schedule& sched, size_t k,
                                           const RhoProfile& rho,
                                           const Ball& ball,
                                           const CoverMethod& method) {
    PointListSource src(seq);
    return block_cover_fraction(static_cast<const SequenceSource&>(src), sched,
                                k, rho, ball, method);
}

inline CoverageReport full_cover_fraction(const PointList& seq, uint64_t N_k,
                                          const RhoProfile& rho,
                                          const Ball& ball,
                                          const CoverMethod& method) {
    PointListSource src(seq);
    return full_cover_fraction(static_cast<const SequenceSource&>(src), N_k,
                               rho, ball, method);
}

inline PriorBlockExcess prior_block_excess(const PointList& seq,
                                           const Schedule& sched, size_t k,
                                           const RhoProfile& rho,
                                           const Ball& ball, double delta,
                                           double eta,
                                           const CoverMethod& method) {
    PointListSource src(seq);
    return prior_block_excess(static_cast<const SequenceSource&>(src), sched,
                              k, rho, ball, delta, eta, method);
}

inline UbiquityVerification verify_local_ubiquity(
    const PointList& seq, const Schedule& sched, const RhoProfile& rho,
    const std::vector<Ball>& balls, size_t k_lo, size_t k_hi,
    const CoverMethod& method) {
    PointListSource src(seq);
    return verify_local_ubiquity(static_cast<const SequenceSource&>(src),
                                 sched, rho, balls, k_lo, k_hi, method);
}

}  // namespace udseq
