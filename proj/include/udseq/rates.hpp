#pragma once

// Scalar rate functions v : N -> R_+ used by the d.s.s. condition, the
// coverage radii and the series criteria. Each family evaluates both at an
// integer argument and in log space (input ln N, output ln v), so series
// terms at astronomically large schedule points never materialize N.
// log means natural log throughout.

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "udseq/core.hpp"

namespace udseq {

class RateFunction {
  public:
    enum class Family { power, kiefer, polylog, table };

    // C * N^(-theta)
    static RateFunction power(double C, double theta) {
        if (!(C > 0.0)) throw validation_error("power rate needs C > 0");
        if (!(theta >= 0.0)) throw validation_error("power rate needs theta >= 0");
        RateFunction f;
        f.family_ = Family::power;
        f.c_ = C;
        f.theta_ = theta;
        return f;
    }

    // (1 + eps) * sqrt(log log N / (2N)); defined for N >= 3.
    static RateFunction kiefer(double eps) {
        if (!(eps > -1.0)) throw validation_error("kiefer rate needs eps > -1");
        RateFunction f;
        f.family_ = Family::kiefer;
        f.eps_ = eps;
        return f;
    }

    // C * (log N)^m / N; defined for N >= 2.
    static RateFunction polylog(double C, int m) {
        if (!(C > 0.0)) throw validation_error("polylog rate needs C > 0");
        if (m < 0) throw validation_error("polylog rate needs exponent >= 0");
        RateFunction f;
        f.family_ = Family::polylog;
        f.c_ = C;
        f.log_exp_ = m;
        return f;
    }

    // Step function through tabulated (N, value) pairs: the value at N is
    // the entry with the largest tabulated argument <= N.
    static RateFunction table(std::vector<std::pair<uint64_t, double>> pairs) {
        if (pairs.empty()) throw validation_error("rate table is empty");
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (!(pairs[i].second >= 0.0))
                throw validation_error("rate table values must be >= 0");
            if (i > 0) {
                if (pairs[i].first <= pairs[i - 1].first)
                    throw validation_error("rate table arguments must increase");
                if (pairs[i].second > pairs[i - 1].second)
                    throw validation_error("rate table must be non-increasing");
            }
        }
        RateFunction f;
        f.family_ = Family::table;
        f.pairs_ = std::move(pairs);
        return f;
    }

    Family family() const { return family_; }

    double value(uint64_t N) const {
        const double Nd = static_cast<double>(N);
        switch (family_) {
            case Family::power:
                return c_ * std::pow(Nd, -theta_);
            case Family::kiefer: {
                if (N < 3)
                    throw validation_error("kiefer rate needs N >= 3");
                return (1.0 + eps_) * std::sqrt(std::log(std::log(Nd)) / (2.0 * Nd));
            }
            case Family::polylog: {
                if (N < 2)
                    throw validation_error("polylog rate needs N >= 2");
                return c_ * std::pow(std::log(Nd), log_exp_) / Nd;
            }
            case Family::table: {
                if (N < pairs_.front().first)
                    throw validation_error("rate table does not cover N=" +
                                           std::to_string(N));
                size_t lo = 0;
                for (size_t i = 0; i < pairs_.size() && pairs_[i].first <= N; ++i)
                    lo = i;
                return pairs_[lo].second;
            }
        }
        throw validation_error("unknown rate family");
    }

    // ln v at ln N. Table rates cannot be extended past 2^63.
    double log_value(double logN) const {
        switch (family_) {
            case Family::power:
                return std::log(c_) - theta_ * logN;
            case Family::kiefer:
                return std::log1p(eps_) +
                       0.5 * (std::log(std::log(logN)) - std::log(2.0) - logN);
            case Family::polylog:
                return std::log(c_) + log_exp_ * std::log(logN) - logN;
            case Family::table: {
                if (logN > 62.0 * std::log(2.0))
                    throw guard_error("rate table cannot be evaluated beyond 2^62");
                const double v = value(static_cast<uint64_t>(std::llround(
                    std::exp(logN))));
                if (v == 0.0) return -std::numeric_limits<double>::infinity();
                return std::log(v);
            }
        }
        throw validation_error("unknown rate family");
    }

    std::string describe() const {
        switch (family_) {
            case Family::power:
                return "power(C=" + fp17(c_) + ",theta=" + fp17(theta_) + ")";
            case Family::kiefer:
                return "kiefer(eps=" + fp17(eps_) + ")";
            case Family::polylog:
                return "polylog(C=" + fp17(c_) + ",m=" + std::to_string(log_exp_) + ")";
            case Family::table:
                return "table(" + std::to_string(pairs_.size()) + " entries)";
        }
        return "?";
    }

    double coefficient() const { return c_; }
    double theta() const { return theta_; }
    double eps() const { return eps_; }
    int log_exponent() const { return log_exp_; }
    const std::vector<std::pair<uint64_t, double>>& pairs() const { return pairs_; }

  private:
    RateFunction() = default;

    Family family_ = Family::power;
    double c_ = 1.0;
    double theta_ = 0.0;
    double eps_ = 0.0;
    int log_exp_ = 0;
    std::vector<std::pair<uint64_t, double>> pairs_;
};

}  // namespace udseq
