#pragma once

#include "semitoric/params.hpp"
#include "semitoric/reduced.hpp"

namespace semitoric::abelian {

using reduced::ReducedLevel;

/// The four complete integrals driving the Taylor-series reconstruction.
/// Orientation of the vanishing-cycle pair is fixed so that
///   T_alpha(0,0) -> 4 pi R / rA   and   W_alpha(0,0) -> -(R+t-2Rt)/rA.
/// With that convention T_alpha = 2 pi dJ/dh and W_alpha = +dJ/dl.
struct PeriodData {
    double T;
    double W;
    double T_alpha;
    double W_alpha;
};

struct ActionValue {
    double value;
    bool branch;  // true when the +l monodromy term was added (l>0, hR<lt)
};

/// Numerator of the action integrand: I = (1/2pi) oint R_I(p) dp / sqrt(P).
double action_integrand_numerator(double p2, const ReducedLevel& lev, const ModelParams& p);

/// Scaled action near (0,0): the Abelian integral over [zeta2, zeta3] plus
/// the +l branch term when l>0 and hR < lt.  Throws SingularFibre at the
/// exact focus-focus value.
ActionValue action(const ReducedLevel& lev, const ModelParams& p);

/// Scaled action computed from the enclosed-area formula
///   I = -(C_L + (1/pi) int arccos((h-A)/sqrt(B)) dp2),
/// valid on the whole image of the momentum map (all orbit types) and
/// continuous there.  Agrees with action() near (0,0).
double action_area(const ReducedLevel& lev, const ModelParams& p, double tol = 1e-11);

/// Reduced period via the Legendre form T = 4 K(k) / sqrt(|c3|(z3-z1)).
double period(const ReducedLevel& lev, const ModelParams& p);

/// Rotation number assembled from two complete third-kind integrals in the
/// circular cases (principal branch of the reduction).
double rotation_number(const ReducedLevel& lev, const ModelParams& p);

/// Direct quadrature routes (oracles for the Legendre forms): tanh-sinh on
/// the raw integrand or Gauss-Kronrod after the sqrt substitution.
double period_quadrature(const ReducedLevel& lev, const ModelParams& p, bool tanh_sinh_rule);
double rotation_quadrature(const ReducedLevel& lev, const ModelParams& p, bool tanh_sinh_rule);
double action_quadrature(const ReducedLevel& lev, const ModelParams& p, bool tanh_sinh_rule);

/// Imaginary action J = (1/pi) Im oint_alpha R_I dp / sqrt(P), evaluated on
/// a complex contour around the cut [zeta1, zeta2] (the integrand has a pole
/// at p = l inside that interval whenever l != 0).
double imaginary_action(const ReducedLevel& lev, const ModelParams& p);

/// T_alpha by the Legendre form 8 K(k') / sqrt(|c3|(z3-z1)).
double imaginary_period(const ReducedLevel& lev, const ModelParams& p);

/// T_alpha and W_alpha by differentiating the contour integral in h and l
/// under the integral sign (spectrally accurate, no finite differences).
double imaginary_period_contour(const ReducedLevel& lev, const ModelParams& p);
double imaginary_rotation(const ReducedLevel& lev, const ModelParams& p);

PeriodData period_data(const ReducedLevel& lev, const ModelParams& p);

}  // namespace semitoric::abelian
