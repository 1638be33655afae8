#include "semitoric/taylor.hpp"

#include "semitoric/abelian.hpp"
#include "semitoric/series.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace semitoric::taylor {

namespace {
constexpr double kPi = std::numbers::pi;

struct ScaledClosedForm {
    double c_l, c_j, c_ll, c_lj, c_jj;
};

ScaledClosedForm scaled_closed_form(const ModelParams& p) {
    const double R = p.ratio(), t = p.t;
    const double ra = discriminant_root(p).rA;
    if (classify_fixed_point(p) != FixedPointClass::FocusFocus)
        throw OutOfFocusFocusRange("closed_form: focus-focus regime required");
    const double ra2 = ra * ra, ra3 = ra2 * ra;
    ScaledClosedForm s;
    s.c_l = mod_pi(std::atan2(R * R * (-1.0 + 2.0 * t) - R * (1.0 + t) + t, (1.0 - R) * ra));
    s.c_j = series::log_anchor(p);
    s.c_ll = (-std::pow(R, 4) * std::pow(-1.0 + 2.0 * t, 3) +
              std::pow(R, 3) * (1.0 - 17.0 * t + 46.0 * t * t - 32.0 * t * t * t) -
              3.0 * R * R * t * (1.0 - 7.0 * t + 4.0 * t * t) + R * (3.0 - 5.0 * t) * t * t -
              t * t * t) /
             (16.0 * R * ra3);
    s.c_lj = (-1.0 + R) *
             (R * R * (1.0 - 2.0 * t) * (1.0 - 2.0 * t) + 2.0 * R * t * (-1.0 + 6.0 * t) + t * t) /
             (8.0 * R * ra2);
    s.c_jj = (std::pow(R, 4) * std::pow(-1.0 + 2.0 * t, 3) -
              std::pow(R, 3) * (1.0 + 15.0 * t - 42.0 * t * t + 16.0 * t * t * t) +
              R * R * t * (3.0 + 3.0 * t - 28.0 * t * t) + R * t * t * (-3.0 + 13.0 * t) +
              t * t * t) /
             (16.0 * R * ra3);
    return s;
}

}  // namespace

double mod_pi(double x) {
    double r = std::fmod(x, kPi);
    if (r < 0.0) r += kPi;
    // collapse the representative pi (from rounding) to 0
    if (r >= kPi) r -= kPi;
    return r;
}

TaylorInvariant closed_form(const ModelParams& p) {
    const ScaledClosedForm s = scaled_closed_form(p);
    // Unscale: S = R1 * S_scaled(l/R1, j/R1) + j ln R1.
    return {s.c_l, s.c_j + std::log(p.R1), s.c_ll / p.R1, s.c_lj / p.R1, s.c_jj / p.R1};
}

Partials partials_numeric(double l, double j, const ModelParams& p) {
    const double h = series::birkhoff(l, j, p);
    const abelian::PeriodData d = abelian::period_data({l, h}, p);
    const double w = std::hypot(l, j);
    const double arg = series::arg_determination(l, j);
    // The W_alpha orientation follows the series convention (+dJ/dl), so it
    // enters with a minus sign here; sigma patches the third-kind reduction
    // branch to the cut of arg(w).
    const double sigma = (l > 0.0 || (l == 0.0 && h > 0.0)) ? 1.0 : -1.0;
    Partials out;
    out.dS_dj = 2.0 * kPi * d.T / d.T_alpha + std::log(w);
    out.dS_dl = 2.0 * kPi * (-d.W_alpha * d.T / d.T_alpha - d.W) + arg - kPi * sigma;
    return out;
}

TaylorInvariant recover_coefficients(const ModelParams& p, double sample_radius, int n_samples) {
    if (classify_fixed_point(p) != FixedPointClass::FocusFocus)
        throw OutOfFocusFocusRange("recover_coefficients: focus-focus regime required");
    const int n_rings = 4;
    const int per_ring = std::max(4, n_samples / n_rings);
    const double fracs[n_rings] = {0.4, 0.6, 0.8, 1.0};  // all above the radius/4 exclusion

    const int rows = 2 * n_rings * per_ring;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, 5);
    Eigen::VectorXd b(rows);
    int r = 0;
    for (int ri = 0; ri < n_rings; ++ri) {
        const double rad = fracs[ri] * sample_radius;
        for (int k = 0; k < per_ring; ++k) {
            // offset keeps samples off the cut and off the branch line
            const double phi = 2.0 * kPi * (k + 0.37 + 0.5 * (ri % 2)) / per_ring;
            const double l = rad * std::cos(phi), j = rad * std::sin(phi);
            const Partials d = partials_numeric(l, j, p);
            // dS/dl = c_l' + 2 c_ll l + c_lj j ; dS/dj = c_j + c_lj l + 2 c_jj j
            A(r, 0) = 1.0;
            A(r, 2) = 2.0 * l;
            A(r, 3) = j;
            b(r) = d.dS_dl;
            ++r;
            A(r, 1) = 1.0;
            A(r, 3) = l;
            A(r, 4) = 2.0 * j;
            b(r) = d.dS_dj;
            ++r;
        }
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double cond = svd.singularValues()(0) / svd.singularValues()(4);
    if (!(cond < 1e8)) throw IllConditionedFit("recover_coefficients: design matrix condition > 1e8");
    const Eigen::VectorXd x = svd.solve(b);

    TaylorInvariant out;
    out.c_l = mod_pi(x(0));
    out.c_j = x(1) + std::log(p.R1);
    out.c_ll = x(2) / p.R1;
    out.c_lj = x(3) / p.R1;
    out.c_jj = x(4) / p.R1;
    return out;
}

ReverseSymmetryReport reverse_symmetry_check(const ModelParams& p) {
    const TaylorInvariant a = closed_form(p);
    const TaylorInvariant b = closed_form(reverse_map(p));
    ReverseSymmetryReport rep;
    rep.direct = b;
    rep.expected = {mod_pi(kPi - a.c_l), a.c_j, a.c_ll, -a.c_lj, a.c_jj};
    double dl = std::abs(rep.expected.c_l - b.c_l);
    dl = std::min(dl, std::abs(dl - kPi));  // mod-pi distance
    rep.max_abs_diff = dl;
    rep.max_abs_diff = std::max(rep.max_abs_diff, std::abs(rep.expected.c_j - b.c_j));
    rep.max_abs_diff = std::max(rep.max_abs_diff, std::abs(rep.expected.c_ll - b.c_ll));
    rep.max_abs_diff = std::max(rep.max_abs_diff, std::abs(rep.expected.c_lj - b.c_lj));
    rep.max_abs_diff = std::max(rep.max_abs_diff, std::abs(rep.expected.c_jj - b.c_jj));
    return rep;
}

TaylorInvariant kepler_form(double n, double t) {
    if (!(t > 0.2 && t < 1.0))
        throw OutOfFocusFocusRange("kepler_form: requires t in (1/5, 1)");
    const double c = (1.0 - t) / (2.0 * t);
    const double den = 16.0 * n * std::sqrt(c) * std::pow(2.0 - c, 1.5);
    TaylorInvariant out;
    out.c_l = kPi / 2.0;
    out.c_j = std::log(den);
    out.c_ll = -(-9.0 + 10.0 * c - 2.0 * c * c) / den;
    out.c_lj = 0.0;
    out.c_jj = -(-3.0 + 6.0 * c + 2.0 * c * c) / den;
    return out;
}

AsymptoticsReport asymptotics_uv(const ParamChart& c) {
    const ModelParams p = from_chart(c);
    AsymptoticsReport rep;
    rep.value = closed_form(p);

    const double u = c.u, v = c.v, kap = c.kappa;
    const double av = std::abs(v);
    const double sgn = v >= 0.0 ? 1.0 : -1.0;
    rep.cll_model = -sgn * 9.0 / (256.0 * kap) * std::exp(6.0 * av);
    rep.cjj_model = -sgn * 289.0 / (256.0 * kap) * std::exp(6.0 * av);
    rep.clj_model = -3.0 / (16.0 * kap) * std::sinh(u) * std::exp(2.0 * av);
    if (v >= 0.0) {
        rep.cj_model = -3.0 * v + std::log(64.0 * kap / std::pow(std::cosh(u / 2.0), 2));
    } else if (u != 0.0) {
        rep.cj_model = 3.0 * v + std::log(64.0 * kap / std::pow(std::sinh(u / 2.0), 2));
    } else {
        rep.cj_model = v + std::log(64.0 * kap);
    }
    rep.cl_asymptote = mod_pi(-kPi / 2.0 + 2.0 * std::atan(std::exp(-v) * std::tanh(u / 2.0)));

    // The (u,v) display formulas, reported for comparison only: the l^2 and
    // j^2 displays do not agree with the closed form (they vanish at the
    // origin of the chart where the closed form does not).
    rep.display.c_l =
        mod_pi(std::atan2(2.0 * std::exp(u) * std::cosh(v) + std::sinh(v) +
                              std::exp(2.0 * u) * std::sinh(v),
                          1.0 - std::exp(2.0 * u)));
    rep.display.c_j =
        std::log(16.0 * kap / (std::pow(std::cosh(v), 3) * (std::cosh(u) + std::tanh(v))));
    rep.display.c_ll = -(1.0 / (64.0 * kap)) *
                       (-7.0 * std::cosh(v) + 3.0 * std::cosh(3.0 * v) + std::cosh(u)) *
                       (11.0 * std::sinh(v) + 3.0 * std::sinh(3.0 * v));
    rep.display.c_lj = -(1.0 / (8.0 * kap)) * (1.0 + 3.0 * std::cosh(2.0 * v)) * std::sinh(u);
    rep.display.c_jj = -(1.0 / (64.0 * kap)) *
                       (3.0 * std::cosh(v) + 17.0 * std::cosh(3.0 * v) + std::cosh(u)) *
                       (9.0 * std::sinh(v) + 17.0 * std::sinh(3.0 * v));

    rep.cll_ratio = rep.value.c_ll / rep.cll_model;
    rep.cjj_ratio = rep.value.c_jj / rep.cjj_model;
    rep.clj_ratio = rep.clj_model != 0.0 ? rep.value.c_lj / rep.clj_model : 0.0;
    return rep;
}

}  // namespace semitoric::taylor
