#pragma once

#include "semitoric/params.hpp"

namespace semitoric::taylor {

/// Coefficients of the Taylor series invariant in UNSCALED variables
/// (values of L and of Eliasson's Q2).  c_l is stored as the mod-pi
/// representative in [0, pi); there is no constant term.
struct TaylorInvariant {
    double c_l;
    double c_j;
    double c_ll;
    double c_lj;
    double c_jj;
};

/// Closed form of the five printed coefficients.
TaylorInvariant closed_form(const ModelParams& p);

struct Partials {
    double dS_dl;
    double dS_dj;
};

/// Numerical partials of the scaled invariant at (l,j):
///   dS/dj = 2 pi T/T_alpha + ln|w|,
///   dS/dl = 2 pi (W_alpha^flip T/T_alpha - W) + arg(w) - pi chi,
/// with h = B(l,j), arg in (-3pi/2, pi/2], and chi = +-1 patching the
/// principal branch of the third-kind reduction across h = A(l), l > 0.
Partials partials_numeric(double l, double j, const ModelParams& p);

/// Least-squares recovery of the five coefficients from partials sampled on
/// rings of radius in [0.4, 1.0] * sample_radius; returns unscaled
/// coefficients.  Throws IllConditionedFit above condition 1e8.
TaylorInvariant recover_coefficients(const ModelParams& p, double sample_radius,
                                     int n_samples);

struct ReverseSymmetryReport {
    TaylorInvariant direct;    // closed_form(reverse_map(p))
    TaylorInvariant expected;  // closed_form(p) transported by l -> -l
    double max_abs_diff;
};

/// Checks S_{(R1,R2,t)}(l,j) = S_{(R2,R1,t')}(-l,j) on the closed forms.
ReverseSymmetryReport reverse_symmetry_check(const ModelParams& p);

/// Kepler specialization R1 = R2 = n with c = (1-t)/(2t); valid for
/// t in (1/5, 1).
TaylorInvariant kepler_form(double n, double t);

/// Asymptotic-scaling report in the (u,v,kappa) chart.
struct AsymptoticsReport {
    TaylorInvariant value;      // closed-form coefficients at from_chart(c)
    TaylorInvariant display;    // the (u,v) display formulas, for comparison
    double cll_model;           // -sign(v) (9/256 kappa) e^{6|v|}
    double cjj_model;           // -sign(v) (289/256 kappa) e^{6|v|}
    double clj_model;           // -(3/16 kappa) sinh(u) e^{2|v|}
    double cj_model;            // linear-in-v asymptote
    double cl_asymptote;        // -pi/2 + 2 atan(e^{-v} tanh(u/2)) mod pi
    double cll_ratio;           // value.c_ll / cll_model
    double cjj_ratio;
    double clj_ratio;
};

AsymptoticsReport asymptotics_uv(const ParamChart& c);

/// Reduces an angle to the representative in [0, pi).
double mod_pi(double x);

}  // namespace semitoric::taylor
