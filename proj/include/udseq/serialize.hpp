#pragma once

// JSON and CSV forms of the report types. CSV uses '.' decimals, LF line
// endings and a header row; doubles are written with round-trip precision
// so reruns are byte-identical.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "udseq/core.hpp"
#include "udseq/dimension.hpp"
#include "udseq/discrepancy.hpp"
#include "udseq/dss.hpp"
#include "udseq/limsup.hpp"
#include "udseq/ubiquity.hpp"

namespace udseq {

using json = nlohmann::json;

inline json to_json(const DiscrepancyReport& r) {
    json j{{"n", r.n},
           {"N", r.N},
           {"star", r.star},
           {"witness_low", r.witness_low},
           {"witness_high", r.witness_high},
           {"method", to_string(r.method)}};
    if (r.extreme) j["extreme"] = *r.extreme;
    return j;
}

inline json to_json(const DiscrepancyRatios& r) {
    return json{{"kiefer", r.kiefer},
                {"low_disc", r.low_disc},
                {"roth", r.roth},
                {"exact", r.exact}};
}

inline json to_json(const Schedule& s) { return json(s.indices); }

inline json to_json(const DssReport& r) {
    json recs = json::array();
    for (const auto& rec : r.records) {
        json o{{"i", rec.i},
               {"N", rec.N},
               {"v", rec.rate},
               {"pass", rec.pass},
               {"skipped", rec.skipped}};
        if (!rec.skipped) o["D"] = rec.discrepancy;
        recs.push_back(o);
    }
    return json{{"records", recs},
                {"tail_sup", r.tail_sup},
                {"verdict", to_string(r.verdict)},
                {"horizon", "finite"}};
}

inline json to_json(const CoverMethod& m) {
    if (m.kind == CoverMethod::Kind::grid)
        return json{{"kind", "grid"}, {"resolution", m.resolution}};
    return json{{"kind", "monte_carlo"}, {"samples", m.samples}, {"seed", m.seed}};
}

inline json to_json(const CoverageReport& r) {
    json j{{"k", r.k},
           {"fraction", r.fraction},
           {"method", to_json(r.method)},
           {"error_bound", r.error_bound}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json to_json(const PriorBlockExcess& r) {
    return json{{"k", r.k},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"holds", r.holds}};
}

inline json to_json(const UbiquityVerification& r) {
    json table = json::array();
    for (const auto& e : r.table)
        table.push_back(json{{"ball_id", e.ball_id},
                             {"k", e.k},
                             {"fraction", e.fraction},
                             {"error_bound", e.error_bound}});
    return json{{"c_hat", r.c_hat},
                {"method", to_json(r.method)},
                {"table", table}};
}

inline json to_json(const MeasureEstimate& r) {
    return json{{"fraction", r.fraction},
                {"samples", r.samples},
                {"seed", r.seed},
                {"ci95", r.ci95},
                {"window", {{"j_min", r.window.j_min}, {"j_max", r.window.j_max}}}};
}

inline json to_json(const SeriesResult& r) {
    return json{{"terms", r.terms},
                {"partial_sums", r.partial_sums},
                {"trend", to_string(r.trend)}};
}

inline json to_json(const DimensionReport& r) {
    json j{{"value", r.value},
           {"argmin_j", r.argmin},
           {"per_candidate", r.per_candidate},
           {"method", r.method}};
    if (r.method == "ww_lower") {
        j["witness_A"] = r.witness_A;
        j["boundary_t"] = r.boundary_t;
    }
    if (r.method == "box_counting") {
        j["scales"] = r.scales;
        j["counts"] = r.counts;
        j["slope"] = r.slope;
        j["r2"] = r.r2;
    }
    return j;
}

// ---------------------------------------------------------------------------
// CSV writers.

inline void write_csv(const std::string& path,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path);
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
}

inline void write_coverage_csv(const std::string& path,
                               const UbiquityVerification& v) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : v.table)
        rows.push_back({std::to_string(e.ball_id), std::to_string(e.k),
                        fp17(e.fraction), v.method.describe(),
                        fp17(e.error_bound)});
    write_csv(path, {"ball_id", "k", "fraction", "method", "error_bound"}, rows);
}

inline void write_measure_sweep_csv(
    const std::string& path, const std::vector<MeasureEstimate>& sweep) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : sweep)
        rows.push_back({std::to_string(e.window.j_max), fp17(e.fraction),
                        fp17(e.ci95)});
    write_csv(path, {"window_max", "fraction", "ci95"}, rows);
}

inline void write_boxcount_csv(const std::string& path,
                               const DimensionReport& r) {
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < r.scales.size(); ++i)
        rows.push_back({fp17(r.scales[i]), std::to_string(r.counts[i])});
    write_csv(path, {"delta", "count"}, rows);
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace udseq
