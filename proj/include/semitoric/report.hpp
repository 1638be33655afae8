#pragma once

#include "semitoric/global_inv.hpp"
#include "semitoric/params.hpp"
#include "semitoric/taylor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semitoric::report {

/// Aggregated invariant report for one parameter triple.  Deterministic for
/// fixed inputs; every residual field is present and finite in the
/// focus-focus regime.
struct InvariantReport {
    int schema_version = 1;
    ModelParams params{1.0, 2.0, 0.5};
    FixedPointClass classification = FixedPointClass::FocusFocus;
    int n_ff = 0;
    CriticalInterval interval{0.0, 0.0};
    std::optional<double> rA;
    std::optional<ParamChart> chart;
    std::optional<taylor::TaylorInvariant> taylor_coeffs;
    std::optional<double> height;
    std::vector<globalinv::WeightedPolygon> polygons;  // k in [-2,2], both signs

    // verification residuals
    std::optional<double> height_dual_path;
    std::optional<double> reverse_symmetry;
    std::optional<double> chart_roundtrip;
    std::optional<double> rA_two_forms;
};

InvariantReport build_report(const ModelParams& p);

std::string to_json(const InvariantReport& rep);

/// Serializes a polygon set as JSON (cmd_polygons --format json).
std::string polygons_to_json(const std::vector<globalinv::WeightedPolygon>& polys,
                             const ModelParams& p);

/// Parses a polygon JSON document back (round-trip support).
std::vector<globalinv::WeightedPolygon> polygons_from_json(const std::string& text);

/// Renders polygons as a standalone SVG 1.1 document with a viewBox scaled
/// by max(R1,R2).
std::string polygons_to_svg(const std::vector<globalinv::WeightedPolygon>& polys,
                            const ModelParams& p);

}  // namespace semitoric::report
