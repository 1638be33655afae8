#include "semitoric/reduced.hpp"

#include "semitoric/coefficients.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace semitoric::reduced {

ReducedModel reduced_model(const ReducedLevel& lev, const ModelParams& p) {
    const double R = p.ratio(), t = p.t, l = lev.l, h = lev.h;
    ReducedModel m;
    m.A = {l * (1.0 - 2.0 * t), (t - R * (1.0 - 2.0 * t) + l * t) / R, -t / R};

    // B = t^2/R^2 * p (p-l) (p-2R) (p-l-2), expanded.
    const double r1 = l, r2 = 2.0 * R, r3 = l + 2.0;
    const double s1 = r1 + r2 + r3;
    const double s2 = r1 * r2 + r1 * r3 + r2 * r3;
    const double s3 = r1 * r2 * r3;
    const double c = t * t / (R * R);
    m.B = {0.0, -c * s3, c * s2, -c * s1, c};

    // P = B - (h - A)^2; collect (h-A) = q0 + q1 p + q2 p^2.
    const double q0 = h - m.A[0], q1 = -m.A[1], q2 = -m.A[2];
    m.P = {m.B[0] - q0 * q0, m.B[1] - 2.0 * q0 * q1, m.B[2] - (q1 * q1 + 2.0 * q0 * q2),
           m.B[3] - 2.0 * q1 * q2};
    m.leading_residue = m.B[4] - q2 * q2;
    return m;
}

double reduced_hamiltonian(double l, double q2, double p2, const ModelParams& p) {
    const double R = p.ratio(), t = p.t;
    if (p2 < std::max(0.0, l) - 1e-12 || p2 > std::min(l + 2.0, 2.0 * R) + 1e-12)
        throw OutsidePhysicalRegion("reduced_hamiltonian: p2 outside the strip");
    // factored form of B: exactly zero on the four edges
    const double B = t * t / (R * R) * p2 * (p2 - l) * (p2 - 2.0 * R) * (p2 - l - 2.0);
    if (B < -1e-12) throw OutsidePhysicalRegion("reduced_hamiltonian: B(p2) < 0");
    const ReducedModel m = reduced_model({l, 0.0}, p);
    return m.eval_A(p2) + std::sqrt(std::max(B, 0.0)) * std::cos(q2);
}

std::array<double, 4> edge_values(double l, const ModelParams& p) {
    const double R = p.ratio(), t = p.t;
    return {(1.0 - 2.0 * t) * l, t * l / R, l - 2.0 * R + 2.0 * t,
            -2.0 + 4.0 * t - (t / R) * (2.0 + l)};
}

CubicRoots solve_roots(const ReducedLevel& lev, const ModelParams& p) {
    const ReducedModel m = reduced_model(lev, p);
    // Companion matrix of the monic cubic, robust near double roots.
    const double c2 = m.P[2] / m.P[3], c1 = m.P[1] / m.P[3], c0 = m.P[0] / m.P[3];
    Eigen::Matrix3d comp;
    comp << 0.0, 0.0, -c0,
            1.0, 0.0, -c1,
            0.0, 1.0, -c2;
    Eigen::EigenSolver<Eigen::Matrix3d> es(comp, /*computeEigenvectors=*/false);
    const auto ev = es.eigenvalues();

    const double scale = std::max({std::abs(ev[0]), std::abs(ev[1]), std::abs(ev[2]), 1e-30});
    // Near the focus-focus value two roots pinch; companion eigenvalues of a
    // near-double root carry O(sqrt(eps)) imaginary parts, so small
    // imaginary parts are collapsed rather than flagged as complex.
    int n_real = 0;
    double rs[3];
    for (int i = 0; i < 3; ++i)
        if (std::abs(ev[i].imag()) <= 1e-7 * scale) rs[n_real++] = ev[i].real();

    CubicRoots out;
    if (n_real < 3) {
        // one real root only; report it in zeta3 and flag
        out.real = false;
        double r = 0.0;
        for (int i = 0; i < 3; ++i)
            if (std::abs(ev[i].imag()) <= 1e-7 * scale) r = ev[i].real();
        out.zeta3 = r;
        return out;
    }
    std::sort(rs, rs + 3);
    // One Newton polish per root; skipped when the derivative is tiny
    // (double-root pinch), where the eigenvalue is already best.
    for (double& r : rs) {
        const double f = m.eval_P(r);
        const double df = m.P[1] + r * (2.0 * m.P[2] + 3.0 * r * m.P[3]);
        if (std::abs(df) > 1e-8 * std::max(1.0, std::abs(r))) {
            const double step = f / df;
            if (std::abs(step) < 1e-3 * std::max(1.0, std::abs(r))) r -= step;
        }
    }
    std::sort(rs, rs + 3);
    out.zeta1 = rs[0];
    out.zeta2 = rs[1];
    out.zeta3 = rs[2];
    return out;
}

OrbitType orbit_type(const ReducedLevel& lev, const ModelParams& p) {
    const ReducedModel m = reduced_model(lev, p);
    const double R = p.ratio();
    const double upper = m.eval_A(std::max(0.0, lev.l));
    const double lower = m.eval_A(std::min(lev.l + 2.0, 2.0 * R));
    if (std::abs(lev.h - upper) < 1e-12 || std::abs(lev.h - lower) < 1e-12)
        throw OnSeparatrix("orbit_type: level within 1e-12 of a separatrix value");
    if (lev.h > upper) return OrbitType::TypeI;
    if (lev.h < lower) return OrbitType::TypeIII;
    return OrbitType::TypeII;
}

CubicRoots roots_series(const ReducedLevel& lev, const ModelParams& p, int order) {
    if (classify_fixed_point(p) != FixedPointClass::FocusFocus)
        throw OutOfFocusFocusRange("roots_series: focus-focus regime required");
    const double R = p.ratio(), t = p.t, l = lev.l, h = lev.h;
    const double ra = discriminant_root(p).rA;
    const coeffs::TableContext ctx{R, t, ra};
    const double ra2 = ra * ra;

    // r_C = sqrt(l^2 (1-t) t - l h (R+t-2Rt) + h^2 R).  The middle sign is
    // fixed by the requirement that substituting h = B(l,j) collapses r_C to
    // rA sqrt(l^2+j^2) / (2 sqrt(R)).
    const double rC =
        std::sqrt(std::max(0.0, l * l * (1.0 - t) * t - l * h * (R + t - 2.0 * R * t) + h * h * R));

    auto C = [&](const char* n) { return coeffs::eval(n, ctx); };

    CubicRoots out;
    // zeta1, zeta2: first order
    double z1 = (C("d100") * l + C("d010") * h + C("d001") * rC) / ra2;
    double z2 = (C("e100") * l + C("e010") * h + C("e001") * rC) / ra2;
    if (order >= 2 && rC > 0.0) {
        const double pre = R / (2.0 * std::pow(ra, 6) * rC);
        z1 += pre * (C("d300") * l * l * l + C("d210") * l * l * h + C("d201") * l * l * rC +
                     C("d120") * l * h * h + C("d111") * l * h * rC + C("d030") * h * h * h +
                     C("d021") * h * h * rC);
        z2 += pre * (C("e300") * l * l * l + C("e210") * l * l * h + C("e201") * l * l * rC +
                     C("e120") * l * h * h + C("e111") * l * h * rC + C("e030") * h * h * h +
                     C("e021") * h * h * rC);
    }

    double z3 = ra2 / (2.0 * R * t * (1.0 - t));
    if (order >= 1)
        z3 += (R - t) / ((1.0 - t) * ra2) * (C("f10") * l + C("f01") * h);
    if (order >= 2)
        z3 += 2.0 * R * t / std::pow(ra, 6) *
              (C("f20") * l * l + C("f11") * l * h + C("f02") * h * h);
    if (order >= 3)
        z3 += 4.0 * R * R * t * t / std::pow(ra, 10) *
              (C("f30") * l * l * l + C("f21") * l * l * h + C("f12") * l * h * h +
               C("f03") * h * h * h);

    out.zeta1 = z1;
    out.zeta2 = z2;
    out.zeta3 = z3;
    return out;
}

}  // namespace semitoric::reduced
