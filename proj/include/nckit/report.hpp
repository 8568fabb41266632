#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nckit/grid.hpp"
#include "nckit/planewave.hpp"
#include "nckit/suites.hpp"

namespace nckit {

inline constexpr const char* kReportSchema = "nckit-report/1";

struct PlaneWaveReport {
    PlaneWaveSpec spec;
    ThetaProfile theta;
    ActionReport action;
    bool polarised = false;
    std::vector<std::pair<int, Rational>> harmonics;  // cosine profiles only
    std::vector<Diagnostic> field_diagnostics;

    bool passed() const { return action.diagnostics.empty() && field_diagnostics.empty(); }
};

PlaneWaveReport planewave_report(const PlaneWaveSpec& spec, const ThetaProfile& theta);

struct GridCheckReport {
    int n = 0;
    double box_length = 0;
    double theta = 0;
    GridDefect trace;        // (f, conj f)
    GridDefect cyclicity;    // (f, conj f)
    double associativity = 0;  // (f, conj f, f)
    double phase_law = 0;      // lowest modes on the same grid

    bool passed() const;
};

GridCheckReport grid_check(const GridField& f);

// JSON documents; every one carries "schema": "nckit-report/1" and "command".
std::string report_json(const SuiteReport& r);
std::string report_json(const PlaneWaveReport& r);
std::string report_json(const GridCheckReport& r);
std::string reduce_json(const std::string& input, const std::string& output, const ThetaProfile& theta);

// Human-readable tables.
std::string report_text(const SuiteReport& r);
std::string report_text(const PlaneWaveReport& r);
std::string report_text(const GridCheckReport& r);

}  // namespace nckit
