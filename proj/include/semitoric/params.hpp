#pragma once

#include "semitoric/errors.hpp"

namespace semitoric {

/// Parameters of the coupled angular momenta family: sphere radii R1, R2 and
/// the coupling t.  All downstream formulas depend on R1 only through the
/// ratio R = R2/R1 once lengths are scaled by R1.
struct ModelParams {
    double R1 = 1.0;
    double R2 = 2.0;
    double t = 0.5;

    ModelParams() = default;
    ModelParams(double r1, double r2, double t_);

    double ratio() const { return R2 / R1; }
};

struct CriticalInterval {
    double t_minus;
    double t_plus;
};

struct DiscriminantRoot {
    double rA_squared;
    double rA;  // valid only when rA_squared >= 0
};

enum class FixedPointClass { FocusFocus, EllipticElliptic, Degenerate };

struct ParamChart {
    double u;
    double v;
    double kappa;
};

// t^± = R2 / (2 R2 + R1 ∓ 2 sqrt(R1 R2)); always 0 < t^- < 1/2 < t^+ <= 1.
CriticalInterval critical_interval(const ModelParams& p);

// rA^2 = -R^2 (1-2t)^2 + 2Rt - t^2; requires t in [t^-, t^+].
DiscriminantRoot discriminant_root(const ModelParams& p);

// rA^2 evaluated without the focus-focus range check (may be negative).
double discriminant_squared(const ModelParams& p);

// FocusFocus on the open interval, Degenerate within 1e-12 of an endpoint.
FixedPointClass classify_fixed_point(const ModelParams& p);

// 1 if focus-focus, 0 otherwise (Degenerate counts as 0).
int ff_count(const ModelParams& p);

// u = -log(R)/2, v = artanh((R - t - 2Rt)/(2 sqrt(R) t)), kappa = sqrt(R1 R2).
// Requires the focus-focus regime (the artanh argument is in (-1,1) exactly
// there).  Under this chart t -> t^- corresponds to v -> +inf and t -> t^+
// to v -> -inf.
ParamChart to_chart(const ModelParams& p);
ModelParams from_chart(const ParamChart& c);

// The discrete symmetry (R1,R2,t) -> (R2,R1,t') with
// t' = R1 t / (R2 + R1 t - R2 t); an involution, conjugate to u -> -u.
ModelParams reverse_map(const ModelParams& p);

}  // namespace semitoric
