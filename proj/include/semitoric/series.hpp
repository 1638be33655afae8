#pragma once

#include "semitoric/params.hpp"

#include <array>

namespace semitoric::series {

/// Dense bivariate polynomial truncated at total degree 3; coefficient of
/// x^i y^j sits at c[i][j].
struct BivariateSeries {
    static constexpr int kMaxDeg = 3;
    std::array<std::array<double, kMaxDeg + 1>, kMaxDeg + 1> c{};

    double& at(int i, int j) { return c[i][j]; }
    double at(int i, int j) const { return c[i][j]; }
    double eval(double x, double y) const;
};

BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b);

/// Compositional inverse in the second variable: given s with s(x,0)=O(x)
/// handled as coefficients and nonzero linear y-coefficient, returns g with
/// s(x, g(x,y)) = y through total degree 3.
BivariateSeries invert_series(const BivariateSeries& s);

/// Imaginary-action expansion j = J(l,h) through total degree 3 in (l,h).
BivariateSeries j_series_coefficients(const ModelParams& p);

/// Birkhoff normal form h = B(l,j) through total degree 3 in (l,j).
BivariateSeries birkhoff_coefficients(const ModelParams& p);

double birkhoff(double l, double j, const ModelParams& p);
double imaginary_action_series(double l, double h, const ModelParams& p, int order = 3);

/// Printed expansions in (l,j) (with |w| = sqrt(l^2+j^2) structure).
double rC_series(double l, double j, const ModelParams& p);
double modulus_series(double l, double j, const ModelParams& p);   // k^2(l,j)
double period_series(double l, double j, const ModelParams& p);
double rotation_series(double l, double j, const ModelParams& p);  // W(l,j)

/// Expansions in (l,h) obtained by differentiating the J series; leading
/// terms 4 pi R / rA and -(R+t-2Rt)/rA.
double imaginary_period_series(double l, double h, const ModelParams& p);
double imaginary_rotation_series(double l, double h, const ModelParams& p);

/// Partial-derivative expansions of the scaled invariant.
double dS_dl_series(double l, double j, const ModelParams& p);
double dS_dj_series(double l, double j, const ModelParams& p);

/// Structural constant ln(4 rA^3 / (R^{3/2} (1-t) t^2)) shared by the log
/// terms of the period/rotation expansions and the j-linear coefficient.
double log_anchor(const ModelParams& p);

/// arg(w) determination taking values in (-3pi/2, pi/2].
double arg_determination(double l, double j);

}  // namespace semitoric::series
