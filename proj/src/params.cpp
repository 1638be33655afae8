#include "semitoric/params.hpp"

#include <cmath>
#include <string>

namespace semitoric {

namespace {
constexpr double kDegenerateTol = 1e-12;
// t may drift marginally outside [0,1] through chart round trips.
constexpr double kRangeSlack = 1e-12;
}  // namespace

ModelParams::ModelParams(double r1, double r2, double t_) : R1(r1), R2(r2), t(t_) {
    if (!(R1 > 0.0) || !(R2 > 0.0))
        throw DomainError("ModelParams: radii must be positive");
    if (!(t >= -kRangeSlack && t <= 1.0 + kRangeSlack))
        throw DomainError("ModelParams: t must lie in [0,1]");
}

CriticalInterval critical_interval(const ModelParams& p) {
    const double s = 2.0 * std::sqrt(p.R1 * p.R2);
    return {p.R2 / (2.0 * p.R2 + p.R1 + s), p.R2 / (2.0 * p.R2 + p.R1 - s)};
}

double discriminant_squared(const ModelParams& p) {
    const double R = p.ratio(), t = p.t;
    return -R * R * (1.0 - 2.0 * t) * (1.0 - 2.0 * t) + 2.0 * R * t - t * t;
}

DiscriminantRoot discriminant_root(const ModelParams& p) {
    const auto ci = critical_interval(p);
    if (p.t < ci.t_minus - kDegenerateTol || p.t > ci.t_plus + kDegenerateTol)
        throw OutOfFocusFocusRange("discriminant_root: t outside [t-, t+]");
    const double ra2 = discriminant_squared(p);
    return {ra2, std::sqrt(std::max(ra2, 0.0))};
}

FixedPointClass classify_fixed_point(const ModelParams& p) {
    const auto ci = critical_interval(p);
    if (std::abs(p.t - ci.t_minus) < kDegenerateTol || std::abs(p.t - ci.t_plus) < kDegenerateTol)
        return FixedPointClass::Degenerate;
    if (p.t > ci.t_minus && p.t < ci.t_plus) return FixedPointClass::FocusFocus;
    return FixedPointClass::EllipticElliptic;
}

int ff_count(const ModelParams& p) {
    return classify_fixed_point(p) == FixedPointClass::FocusFocus ? 1 : 0;
}

ParamChart to_chart(const ModelParams& p) {
    if (classify_fixed_point(p) != FixedPointClass::FocusFocus)
        throw OutOfFocusFocusRange("to_chart: defined only in the focus-focus regime");
    const double R = p.ratio(), t = p.t;
    const double x = (R - t - 2.0 * R * t) / (2.0 * std::sqrt(R) * t);
    if (!(std::abs(x) < 1.0))
        throw OutOfFocusFocusRange("to_chart: artanh argument outside (-1,1)");
    return {-0.5 * std::log(R), std::atanh(x), std::sqrt(p.R1 * p.R2)};
}

ModelParams from_chart(const ParamChart& c) {
    if (!(c.kappa > 0.0)) throw DomainError("from_chart: kappa must be positive");
    const double R = std::exp(-2.0 * c.u);
    const double t = R / (1.0 + 2.0 * R + 2.0 * std::sqrt(R) * std::tanh(c.v));
    return {c.kappa * std::exp(c.u), c.kappa * std::exp(-c.u), t};
}

ModelParams reverse_map(const ModelParams& p) {
    const double tp = p.R1 * p.t / (p.R2 + p.R1 * p.t - p.R2 * p.t);
    return {p.R2, p.R1, tp};
}

}  // namespace semitoric
