#pragma once

#include <string>
#include <vector>

#include "newton/invariants.hpp"

namespace newton {

struct ReportOptions {
    bool include_motives = false;  // full motive pretty-prints per candidate
    bool include_tree = false;     // Newton trees (both algorithms)
    std::vector<std::string> extra_values;  // additional candidate values (expressions)
    std::string svg_path;          // polygon diagram output, empty = none
};

struct Report {
    std::string text;  // human-readable summary
    std::string json;  // machine-readable document (stable field names)
};

Report run_report(const LaurentPoly& f, const ReportOptions& options);

// Polygon diagram (global and at-infinity polygons with dual normals).
std::string polygon_svg(const LaurentPoly& f);

}  // namespace newton
