#include "semitoric/abelian.hpp"

#include "semitoric/elliptic.hpp"
#include "semitoric/quadrature.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace semitoric::abelian {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCycleTol = 1e-14;

struct Frame {
    double R, t, l, h;
    double Al, A2R, Al2;     // edge values A(l), A(2R), A(l+2)
    reduced::ReducedModel m;
    reduced::CubicRoots z;
    double c3abs;            // |leading coefficient of P| = 2 t (1-t) / R
};

Frame make_frame(const ReducedLevel& lev, const ModelParams& p) {
    Frame f;
    f.R = p.ratio();
    f.t = p.t;
    f.l = lev.l;
    f.h = lev.h;
    const auto ev = reduced::edge_values(lev.l, p);
    f.Al = ev[1];
    f.A2R = ev[2];
    f.Al2 = ev[3];
    f.m = reduced::reduced_model(lev, p);
    f.z = reduced::solve_roots(lev, p);
    f.c3abs = 2.0 * f.t * (1.0 - f.t) / f.R;
    if (!f.z.real) throw OutsidePhysicalRegion("abelian: level outside the physical region");
    return f;
}

template <typename T>
T eval_RI(const Frame& f, T p2) {
    const double R = f.R, t = f.t, l = f.l, h = f.h;
    return T(1.0 - 3.0 * t + R + t / R - l * (1.0 - t) + 2.0 * h) + (1.0 - t) * p2 +
           0.5 * ((h - f.Al) * l / (p2 - l) + (h - f.A2R) * 2.0 * R / (p2 - 2.0 * R) +
                  (h - f.Al2) * (l + 2.0) / (p2 - l - 2.0));
}

// Integrates g(p)/sqrt(P) over [z2,z3] by splitting at the midpoint and
// substituting the square root of the distance to the singular endpoint.
double beta_integral_subst(const Frame& f, const std::function<double(double)>& g) {
    const double z1 = f.z.zeta1, z2 = f.z.zeta2, z3 = f.z.zeta3;
    const double mid = 0.5 * (z2 + z3);
    auto left = [&](double u) {
        const double p = z2 + (mid - z2) * u * u;
        return 2.0 * std::sqrt(mid - z2) * g(p) /
               std::sqrt(f.c3abs * (p - z1) * (z3 - p));
    };
    auto right = [&](double x) {
        const double p = z3 - (z3 - mid) * x * x;
        return 2.0 * std::sqrt(z3 - mid) * g(p) /
               std::sqrt(f.c3abs * (p - z1) * (p - z2));
    };
    return quad::gauss_kronrod(left, 0.0, 1.0, 1e-12) +
           quad::gauss_kronrod(right, 0.0, 1.0, 1e-12);
}

double beta_integral_ts(const Frame& f, const std::function<double(double)>& g) {
    // sqrt(P) in factored form with the exact endpoint distance xc, so the
    // vanishing factor never goes negative through rounding.
    const double z1 = f.z.zeta1, z2 = f.z.zeta2, z3 = f.z.zeta3;
    auto integrand = [&](double p, double xc) {
        // xc is signed: negative means distance to the left endpoint z2
        const double d2 = xc < 0.0 ? -xc : p - z2;
        const double d3 = xc < 0.0 ? z3 - p : xc;
        return g(p) / std::sqrt(f.c3abs * (p - z1) * d2 * d3);
    };
    return quad::tanh_sinh2(integrand, z2, z3, 1e-12);
}

// ---- alpha cycle: complex contour around [zeta1, zeta2] -----------------

using cplx = std::complex<double>;

struct AlphaIntegrals {
    double J;        // (1/pi) Im oint R_I / sqrt(P)
    double dJdh;
    double dJdl;
};

cplx sqrtP_branch(const Frame& f, cplx z) {
    // sqrt(P) = sqrt(|c3|) sqrt(z-z1) sqrt(z-z2) sqrt(z3-z): principal
    // branches put the only nearby cut on [z1, z2].
    return std::sqrt(f.c3abs) * std::sqrt(z - cplx(f.z.zeta1)) * std::sqrt(z - cplx(f.z.zeta2)) *
           std::sqrt(cplx(f.z.zeta3) - z);
}

AlphaIntegrals alpha_integrals(const Frame& f, double tol = 1e-11) {
    const double z1 = f.z.zeta1, z2 = f.z.zeta2, z3 = f.z.zeta3;
    if (z2 - z1 < kCycleTol) throw DegenerateCycle("alpha cycle has collapsed");
    const double c0 = 0.5 * (z1 + z2);
    const double half = 0.5 * (z2 - z1);
    double a = 1.6 * half + 0.15 * (z3 - z2);
    a = std::min(a, 0.45 * (z3 - c0));
    const double other = std::min(f.l + 2.0, 2.0 * f.R);
    a = std::min(a, 0.45 * (other - c0));
    const double b = 0.5 * a;

    const double R = f.R, t = f.t, l = f.l, h = f.h;
    auto dRIdh = [&](cplx z) {
        return cplx(2.0) + 0.5 * (l / (z - l) + 2.0 * R / (z - 2.0 * R) + (l + 2.0) / (z - l - 2.0));
    };
    auto dRIdl = [&](cplx z) {
        // d/dl of R_I at fixed (p,h); edge values A(l)=tl/R, A(2R)=l-2R+2t,
        // A(l+2)=-2+4t-(t/R)(2+l) carry their own l-dependence.
        const cplx t1 = (-(t / R) * l + (h - f.Al)) / (z - l) + (h - f.Al) * l / ((z - l) * (z - l));
        const cplx t2 = -2.0 * R / (z - 2.0 * R);
        const cplx t3 = ((t / R) * (l + 2.0) + (h - f.Al2)) / (z - l - 2.0) +
                        (h - f.Al2) * (l + 2.0) / ((z - l - 2.0) * (z - l - 2.0));
        return cplx(-(1.0 - t)) + 0.5 * (t1 + t2 + t3);
    };
    auto evalA = [&](cplx z) { return (f.m.A[0] + z * (f.m.A[1] + z * f.m.A[2])); };
    auto dPdh = [&](cplx z) { return -2.0 * (h - evalA(z)); };
    auto dPdl = [&](cplx z) {
        const cplx dB = t * t / (R * R) * z * (z - 2.0 * R) * (-(z - l - 2.0) - (z - l));
        const cplx dA = (R * (1.0 - 2.0 * t) + t * z) / R;
        return dB + 2.0 * (h - evalA(z)) * dA;
    };

    double prevJ = 0.0, prevH = 0.0, prevL = 0.0;
    for (int N = 64; N <= 8192; N *= 2) {
        cplx sJ = 0.0, sH = 0.0, sL = 0.0;
        for (int k = 0; k < N; ++k) {
            const double th = 2.0 * kPi * k / N;
            const cplx z(c0 + a * std::cos(th), b * std::sin(th));
            const cplx dz(-a * std::sin(th) * 2.0 * kPi / N, b * std::cos(th) * 2.0 * kPi / N);
            const cplx g = sqrtP_branch(f, z);
            const cplx ri = eval_RI(f, z);
            sJ += ri / g * dz;
            sH += (dRIdh(z) / g - ri * dPdh(z) / (2.0 * g * g * g)) * dz;
            sL += (dRIdl(z) / g - ri * dPdl(z) / (2.0 * g * g * g)) * dz;
        }
        const double J = sJ.imag() / kPi, dh = sH.imag() / kPi, dl = sL.imag() / kPi;
        if (N > 64) {
            const double scale = std::max({1.0, std::abs(J), std::abs(dh), std::abs(dl)});
            if (std::abs(J - prevJ) + std::abs(dh - prevH) + std::abs(dl - prevL) < tol * scale)
                return {J, dh, dl};
        }
        prevJ = J;
        prevH = dh;
        prevL = dl;
    }
    throw QuadratureFailure("alpha contour did not converge");
}

}  // namespace

double action_integrand_numerator(double p2, const ReducedLevel& lev, const ModelParams& p) {
    return eval_RI(make_frame(lev, p), p2);
}

ActionValue action(const ReducedLevel& lev, const ModelParams& p) {
    if (lev.l == 0.0 && lev.h == 0.0)
        throw SingularFibre("action: (l,h) = (0,0) is the focus-focus value");
    const Frame f = make_frame(lev, p);
    auto g = [&](double p2) { return eval_RI(f, p2); };
    // tanh-sinh route: its endpoint clustering also resolves the near-pole
    // of R_I at p = l when the level sits close to h = A(l)
    double v = beta_integral_ts(f, g) / kPi;
    const bool branch = lev.l > 0.0 && lev.h * f.R < lev.l * f.t;
    if (branch) v += lev.l;
    return {v, branch};
}

double action_area(const ReducedLevel& lev, const ModelParams& p, double tol) {
    const double R = p.ratio();
    const double lo = std::max(0.0, lev.l), hi = std::min(lev.l + 2.0, 2.0 * R);
    if (!(lo < hi)) return 0.0;
    const reduced::ReducedModel m = reduced::reduced_model(lev, p);

    // Split at the real roots of P inside (lo,hi): the clamp changes there.
    double cuts[5];
    int nc = 0;
    cuts[nc++] = lo;
    const auto z = reduced::solve_roots(lev, p);
    if (z.real) {
        for (double r : {z.zeta1, z.zeta2, z.zeta3})
            if (r > lo + 1e-14 && r < hi - 1e-14) cuts[nc++] = r;
    }
    cuts[nc++] = hi;

    double area = 0.0;
    for (int i = 0; i + 1 < nc; ++i) {
        auto g = [&](double p2) {
            const double B = std::max(0.0, m.eval_B(p2));
            double arg;
            if (B == 0.0) {
                arg = (lev.h - m.eval_A(p2)) >= 0.0 ? 1.0 : -1.0;
            } else {
                arg = (lev.h - m.eval_A(p2)) / std::sqrt(B);
            }
            return 2.0 * std::acos(std::clamp(arg, -1.0, 1.0));
        };
        area += quad::tanh_sinh(g, cuts[i], cuts[i + 1], tol);
    }
    return -area / (2.0 * kPi);
}

double period(const ReducedLevel& lev, const ModelParams& p) {
    const Frame f = make_frame(lev, p);
    if (f.z.zeta3 - f.z.zeta2 < kCycleTol) throw DegenerateCycle("beta cycle has collapsed");
    const double k2 = (f.z.zeta3 - f.z.zeta2) / (f.z.zeta3 - f.z.zeta1);
    const auto m = elliptic::EllipticModulus::from_k_sq(k2);
    return 4.0 * elliptic::complete_K(m) / std::sqrt(f.c3abs * (f.z.zeta3 - f.z.zeta1));
}

double rotation_number(const ReducedLevel& lev, const ModelParams& p) {
    const Frame f = make_frame(lev, p);
    if (f.z.zeta3 - f.z.zeta2 < kCycleTol) throw DegenerateCycle("beta cycle has collapsed");
    const double span = f.z.zeta3 - f.z.zeta1;
    const double k2 = (f.z.zeta3 - f.z.zeta2) / span;
    const auto m = elliptic::EllipticModulus::from_k_sq(k2);
    const double denom = std::sqrt(f.c3abs * span);
    const double nl = (f.z.zeta3 - f.z.zeta2) / (f.z.zeta3 - f.l);
    const double nl2 = (f.z.zeta3 - f.z.zeta2) / (f.z.zeta3 - f.l - 2.0);
    const double Nl = 2.0 * elliptic::complete_Pi(elliptic::characteristic(nl, m), m) /
                      ((f.z.zeta3 - f.l) * denom);
    const double Nl2 = 2.0 * elliptic::complete_Pi(elliptic::characteristic(nl2, m), m) /
                       ((f.z.zeta3 - f.l - 2.0) * denom);
    double w = -((f.h - f.Al) * Nl + (f.h - f.Al2) * Nl2) / (2.0 * kPi);
    // W = -dI/dl of the continuous action: the monodromy branch of the
    // action contributes -1 where the +l term is active
    if (lev.l > 0.0 && lev.h * f.R < lev.l * f.t) w -= 1.0;
    return w;
}

double period_quadrature(const ReducedLevel& lev, const ModelParams& p, bool tanh_sinh_rule) {
    const Frame f = make_frame(lev, p);
    auto one = [](double) { return 1.0; };
    return 2.0 * (tanh_sinh_rule ? beta_integral_ts(f, one) : beta_integral_subst(f, one));
}

double rotation_quadrature(const ReducedLevel& lev, const ModelParams& p, bool tanh_sinh_rule) {
    const Frame f = make_frame(lev, p);
    auto rw = [&](double p2) {
        return -0.5 * ((f.h - f.Al) / (p2 - f.l) + (f.h - f.Al2) / (p2 - f.l - 2.0));
    };
    double w = (tanh_sinh_rule ? beta_integral_ts(f, rw) : beta_integral_subst(f, rw)) / kPi;
    if (lev.l > 0.0 && lev.h * f.R < lev.l * f.t) w -= 1.0;
    return w;
}

double action_quadrature(const ReducedLevel& lev, const ModelParams& p, bool tanh_sinh_rule) {
    const Frame f = make_frame(lev, p);
    auto g = [&](double p2) { return eval_RI(f, p2); };
    double v = (tanh_sinh_rule ? beta_integral_ts(f, g) : beta_integral_subst(f, g)) / kPi;
    if (lev.l > 0.0 && lev.h * f.R < lev.l * f.t) v += lev.l;
    return v;
}

double imaginary_action(const ReducedLevel& lev, const ModelParams& p) {
    if (lev.l == 0.0 && lev.h == 0.0) return 0.0;  // vanishing cycle
    return alpha_integrals(make_frame(lev, p)).J;
}

double imaginary_period(const ReducedLevel& lev, const ModelParams& p) {
    const Frame f = make_frame(lev, p);
    if (f.z.zeta2 - f.z.zeta1 < kCycleTol) throw DegenerateCycle("alpha cycle has collapsed");
    const double span = f.z.zeta3 - f.z.zeta1;
    const double kp2 = (f.z.zeta2 - f.z.zeta1) / span;
    const auto m = elliptic::EllipticModulus::from_k_sq(kp2);
    return 8.0 * elliptic::complete_K(m) / std::sqrt(f.c3abs * span);
}

double imaginary_period_contour(const ReducedLevel& lev, const ModelParams& p) {
    return 2.0 * kPi * alpha_integrals(make_frame(lev, p)).dJdh;
}

double imaginary_rotation(const ReducedLevel& lev, const ModelParams& p) {
    return alpha_integrals(make_frame(lev, p)).dJdl;
}

PeriodData period_data(const ReducedLevel& lev, const ModelParams& p) {
    const Frame f = make_frame(lev, p);
    const auto ai = alpha_integrals(f);
    PeriodData d;
    d.T = period(lev, p);
    d.W = rotation_number(lev, p);
    d.T_alpha = 2.0 * kPi * ai.dJdh;
    d.W_alpha = ai.dJdl;
    return d;
}

}  // namespace semitoric::abelian
