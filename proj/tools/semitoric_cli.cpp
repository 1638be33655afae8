// Batch interface for the coupled-angular-momenta invariants: reports,
// verification suites, parameter sweeps and figure-data emission.

#include "semitoric/abelian.hpp"
#include "semitoric/global_inv.hpp"
#include "semitoric/parallel.hpp"
#include "semitoric/report.hpp"
#include "semitoric/taylor.hpp"
#include "semitoric/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumeric = 3;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    out << text;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

int cmd_invariants(double r1, double r2, double t, const std::string& out) {
    const semitoric::ModelParams p(r1, r2, t);
    const auto rep = semitoric::report::build_report(p);
    write_output(semitoric::report::to_json(rep), out);
    return rep.classification == semitoric::FixedPointClass::FocusFocus ? kExitOk : kExitDomain;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    const auto results = semitoric::verify::run_suite(suite, seed);
    size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(width + 2)
                  << r.name << r.detail << '\n';
    }
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << '\n';
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_sweep(const std::string& field, int nu, int nv, double umin, double umax, double vmin,
              double vmax, double kappa, const std::string& out) {
    const long total = static_cast<long>(nu) * nv;
    std::vector<std::string> rows(total);
    semitoric::par::parallel_for(total, [&](long idx) {
        const int i = static_cast<int>(idx % nu);
        const int j = static_cast<int>(idx / nu);
        const double u = nu > 1 ? umin + (umax - umin) * i / (nu - 1) : umin;
        const double v = nv > 1 ? vmin + (vmax - vmin) * j / (nv - 1) : vmin;
        std::string value = "nan", reason;
        try {
            const semitoric::ModelParams p = semitoric::from_chart({u, v, kappa});
            if (field == "height") {
                value = fmt(semitoric::globalinv::height_closed_form(p).h);
            } else {
                const auto ti = semitoric::taylor::closed_form(p);
                if (field == "c_l") value = fmt(ti.c_l);
                else if (field == "c_j") value = fmt(ti.c_j);
                else if (field == "c_ll") value = fmt(ti.c_ll);
                else if (field == "c_lj") value = fmt(ti.c_lj);
                else if (field == "c_jj") value = fmt(ti.c_jj);
            }
        } catch (const semitoric::DomainError& e) {
            reason = e.what();
        } catch (const std::exception& e) {
            reason = e.what();
        }
        std::ostringstream os;
        os << fmt(u) << ',' << fmt(v) << ',' << value << ',' << reason << '\n';
        rows[idx] = os.str();
    });
    std::ostringstream doc;
    doc << "u,v,value,reason\n";
    for (const auto& r : rows) doc << r;
    write_output(doc.str(), out);
    return kExitOk;
}

int cmd_polygons(double r1, double r2, double t, int kmin, int kmax, const std::string& format,
                 const std::string& out) {
    const semitoric::ModelParams p(r1, r2, t);
    std::vector<semitoric::globalinv::WeightedPolygon> polys;
    for (int eps : {+1, -1})
        for (int k = kmin; k <= kmax; ++k)
            polys.push_back(semitoric::globalinv::polygon_representative(p, eps, k));
    if (format == "json") {
        write_output(semitoric::report::polygons_to_json(polys, p), out);
        return kExitOk;
    }
    if (out.empty()) {
        write_output(semitoric::report::polygons_to_svg(polys, p), out);
        return kExitOk;
    }
    // one file per (epsilon, k)
    for (const auto& poly : polys) {
        std::ostringstream name;
        name << out << "_eps" << (poly.epsilon > 0 ? "+1" : "-1") << "_k" << poly.k << ".svg";
        write_output(semitoric::report::polygons_to_svg({poly}, p), name.str());
    }
    return kExitOk;
}

int cmd_momentum_cloud(double r1, double r2, double t, long points, const std::string& out) {
    const semitoric::ModelParams p(r1, r2, t);
    if (semitoric::classify_fixed_point(p) != semitoric::FixedPointClass::FocusFocus) {
        std::cerr << "momentum-cloud: focus-focus regime required\n";
        return kExitDomain;
    }
    // grid sizes: z-resolution weighted 3x over theta
    int n_theta = std::max(4, static_cast<int>(std::lround(std::pow(points / 9.0, 0.25))));
    int n_z = 3 * n_theta;
    const auto cloud = semitoric::globalinv::privileged_map_sample(p, n_theta, n_z);
    std::ostringstream doc;
    doc << "# skipped_singular: " << cloud.skipped_singular << '\n';
    doc << "# grid: n_theta=" << n_theta << " n_z=" << n_z << '\n';
    doc << "l,h,nu2\n";
    for (const auto& s : cloud.samples)
        doc << fmt(s.L) << ',' << fmt(s.H) << ',' << fmt(s.nu2) << '\n';
    write_output(doc.str(), out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semitoric invariants of the coupled angular momenta"};
    app.require_subcommand(1);

    double r1 = 1.0, r2 = 2.0, t = 0.5;
    std::string out, suite = "all", field = "height", format = "json", kt;
    std::uint64_t seed = 1;
    long points = 10000;
    std::string grid = "41x41";
    double umin = -2.0, umax = 2.0, vmin = -4.0, vmax = 4.0, kappa = 1.0;
    int kmin = -2, kmax = 2;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--r1", r1, "radius of sphere 1");
        cmd->add_option("--r2", r2, "radius of sphere 2");
        cmd->add_option("--t", t, "coupling parameter");
    };

    auto* inv = app.add_subcommand("invariants", "full invariant report (JSON)");
    add_params(inv);
    inv->add_option("--out", out, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "run oracle verification suites");
    ver->add_option("--suite", suite, "elliptic|roots|abelian|series|taylor|global|all");
    ver->add_option("--seed", seed, "RNG seed");

    auto* sw = app.add_subcommand("sweep", "parameter sweep over the (u,v) chart (CSV)");
    sw->add_option("--chart", [](const std::vector<std::string>&) { return true; },
                   "chart name (only 'uv')");
    sw->add_option("--grid", grid, "NxM grid, e.g. 41x81");
    sw->add_option("--field", field, "c_l|c_j|c_ll|c_lj|c_jj|height");
    sw->add_option("--umin", umin);
    sw->add_option("--umax", umax);
    sw->add_option("--vmin", vmin);
    sw->add_option("--vmax", vmax);
    sw->add_option("--kappa", kappa, "scale factor sqrt(R1 R2)");
    sw->add_option("--out", out, "output file (default stdout)");

    auto* pg = app.add_subcommand("polygons", "emit polygon representatives");
    add_params(pg);
    pg->add_option("--k-range", kt, "min:max twisting indices (default -2:2)");
    pg->add_option("--format", format, "svg|json");
    pg->add_option("--out", out, "output file or svg filename prefix");

    auto* mc = app.add_subcommand("momentum-cloud", "privileged momentum map point cloud (CSV)");
    add_params(mc);
    mc->add_option("--points", points, "approximate number of phase-space samples");
    mc->add_option("--out", out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return cmd_invariants(r1, r2, t, out);
        if (ver->parsed()) return cmd_verify(suite, seed);
        if (sw->parsed()) {
            int nu = 41, nv = 41;
            if (std::sscanf(grid.c_str(), "%dx%d", &nu, &nv) != 2 || nu < 1 || nv < 1) {
                std::cerr << "bad --grid, expected NxM\n";
                return kExitDomain;
            }
            return cmd_sweep(field, nu, nv, umin, umax, vmin, vmax, kappa, out);
        }
        if (pg->parsed()) {
            if (!kt.empty() &&
                (std::sscanf(kt.c_str(), "%d:%d", &kmin, &kmax) != 2 || kmin > kmax)) {
                std::cerr << "bad --k-range, expected min:max\n";
                return kExitDomain;
            }
            return cmd_polygons(r1, r2, t, kmin, kmax, format, out);
        }
        if (mc->parsed()) return cmd_momentum_cloud(r1, r2, t, points, out);
    } catch (const semitoric::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitOk;
}
