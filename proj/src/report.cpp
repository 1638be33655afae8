#include "semitoric/report.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace semitoric::report {

using nlohmann::json;

namespace {

const char* class_name(FixedPointClass c) {
    switch (c) {
        case FixedPointClass::FocusFocus: return "focus-focus";
        case FixedPointClass::EllipticElliptic: return "elliptic-elliptic";
        case FixedPointClass::Degenerate: return "degenerate";
    }
    return "?";
}

json polygon_json(const globalinv::WeightedPolygon& poly) {
    json v = json::array();
    for (const auto& q : poly.vertices) v.push_back({q.x, q.y});
    return json{{"epsilon", poly.epsilon},
                {"k", poly.k},
                {"lambda", poly.lambda},
                {"vertices", v}};
}

}  // namespace

InvariantReport build_report(const ModelParams& p) {
    InvariantReport rep;
    rep.params = p;
    rep.classification = classify_fixed_point(p);
    rep.n_ff = ff_count(p);
    rep.interval = critical_interval(p);
    if (rep.classification != FixedPointClass::FocusFocus) return rep;

    const auto dr = discriminant_root(p);
    rep.rA = dr.rA;
    {
        // residual between the two algebraic forms of rA^2
        const double R = p.ratio();
        const double alt = (1.0 + 4.0 * R * R) * (p.t - rep.interval.t_minus) *
                           (rep.interval.t_plus - p.t);
        rep.rA_two_forms = std::abs(dr.rA_squared - alt) / std::max(1e-30, std::abs(alt));
    }
    rep.chart = to_chart(p);
    {
        const ModelParams back = from_chart(*rep.chart);
        rep.chart_roundtrip = std::abs(back.R1 - p.R1) + std::abs(back.R2 - p.R2) +
                              std::abs(back.t - p.t);
    }
    rep.taylor_coeffs = taylor::closed_form(p);
    rep.reverse_symmetry = taylor::reverse_symmetry_check(p).max_abs_diff;

    const double hc = globalinv::height_closed_form(p).h;
    rep.height = hc;
    rep.height_dual_path = std::abs(hc - globalinv::height_numeric(p).h);

    for (int eps : {+1, -1})
        for (int k = -2; k <= 2; ++k)
            rep.polygons.push_back(globalinv::polygon_representative(p, eps, k));
    return rep;
}

std::string to_json(const InvariantReport& rep) {
    json j;
    j["schema_version"] = rep.schema_version;
    j["params"] = {{"r1", rep.params.R1}, {"r2", rep.params.R2}, {"t", rep.params.t}};
    j["classification"] = class_name(rep.classification);
    j["n_ff"] = rep.n_ff;
    j["critical_interval"] = {{"t_minus", rep.interval.t_minus},
                              {"t_plus", rep.interval.t_plus}};
    if (rep.rA) j["rA"] = *rep.rA;
    if (rep.chart)
        j["chart"] = {{"u", rep.chart->u}, {"v", rep.chart->v}, {"kappa", rep.chart->kappa}};
    if (rep.taylor_coeffs) {
        const auto& ti = *rep.taylor_coeffs;
        j["taylor"] = {{"c_l", ti.c_l},
                       {"c_j", ti.c_j},
                       {"c_ll", ti.c_ll},
                       {"c_lj", ti.c_lj},
                       {"c_jj", ti.c_jj}};
    }
    if (rep.height) j["height"] = *rep.height;
    if (!rep.polygons.empty()) {
        json arr = json::array();
        for (const auto& poly : rep.polygons) arr.push_back(polygon_json(poly));
        j["polygons"] = arr;
    }
    json res;
    if (rep.height_dual_path) res["height_dual_path"] = *rep.height_dual_path;
    if (rep.reverse_symmetry) res["reverse_symmetry"] = *rep.reverse_symmetry;
    if (rep.chart_roundtrip) res["chart_roundtrip"] = *rep.chart_roundtrip;
    if (rep.rA_two_forms) res["rA_two_forms"] = *rep.rA_two_forms;
    j["residuals"] = res;
    return j.dump(2);
}

std::string polygons_to_json(const std::vector<globalinv::WeightedPolygon>& polys,
                             const ModelParams& p) {
    json j;
    j["schema_version"] = 1;
    j["params"] = {{"r1", p.R1}, {"r2", p.R2}, {"t", p.t}};
    json arr = json::array();
    for (const auto& poly : polys) arr.push_back(polygon_json(poly));
    j["polygons"] = arr;
    return j.dump(2);
}

std::vector<globalinv::WeightedPolygon> polygons_from_json(const std::string& text) {
    const json j = json::parse(text);
    std::vector<globalinv::WeightedPolygon> out;
    for (const auto& pj : j.at("polygons")) {
        globalinv::WeightedPolygon poly;
        poly.epsilon = pj.at("epsilon").get<int>();
        poly.k = pj.at("k").get<int>();
        poly.lambda = pj.at("lambda").get<double>();
        for (const auto& v : pj.at("vertices"))
            poly.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
        out.push_back(std::move(poly));
    }
    return out;
}

std::string polygons_to_svg(const std::vector<globalinv::WeightedPolygon>& polys,
                            const ModelParams& p) {
    // fixed frame scaled by max(R1,R2) so families are visually comparable
    const double s = std::max(p.R1, p.R2);
    const double x0 = -2.5 * s, x1 = 2.5 * s;
    double y0 = -2.5 * s, y1 = 2.5 * s;
    for (const auto& poly : polys)
        for (const auto& v : poly.vertices) {
            y0 = std::min(y0, v.y - 0.2 * s);
            y1 = std::max(y1, v.y + 0.2 * s);
        }
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << x0 << " "
        << -y1 << " " << (x1 - x0) << " " << (y1 - y0) << "\">\n";
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b",
                            "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#ff7f0e"};
    int ci = 0;
    for (const auto& poly : polys) {
        svg << "  <polygon points=\"";
        for (const auto& v : poly.vertices) svg << v.x << "," << -v.y << " ";
        svg << "\" fill=\"none\" stroke=\"" << colors[ci % 10] << "\" stroke-width=\""
            << 0.02 * s << "\"/>\n";
        // cut line upward from the focus-focus image
        svg << "  <line x1=\"" << poly.lambda << "\" y1=\"0\" x2=\"" << poly.lambda
            << "\" y2=\"" << -y1 << "\" stroke=\"" << colors[ci % 10]
            << "\" stroke-width=\"" << 0.01 * s << "\" stroke-dasharray=\"" << 0.05 * s << "\"/>\n";
        ++ci;
    }
    // focus-focus marker at the origin
    svg << "  <circle cx=\"0\" cy=\"0\" r=\"" << 0.04 * s << "\" fill=\"black\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace semitoric::report
