#pragma once

#include "semitoric/params.hpp"

#include <array>

namespace semitoric::reduced {

/// Level values of the scaled reduced system: l = L/R1 in [-2, 2R], h the
/// energy.  All lengths in this module are scaled by R1.
struct ReducedLevel {
    double l;
    double h;
};

/// Polynomial data of the reduced system at angular momentum l:
///   A quadratic, B quartic, P = B - (h-A)^2 cubic (the quartic terms of B
///   and A^2 cancel identically).
struct ReducedModel {
    std::array<double, 3> A;  // A(p) = A[0] + A[1] p + A[2] p^2
    std::array<double, 5> B;
    std::array<double, 4> P;  // cubic coefficients, P[3] = -2 t (1-t) / R
    double leading_residue;   // the cancelled degree-4 coefficient of B-(h-A)^2

    double eval_A(double p) const { return A[0] + p * (A[1] + p * A[2]); }
    double eval_B(double p) const {
        return B[0] + p * (B[1] + p * (B[2] + p * (B[3] + p * B[4])));
    }
    double eval_P(double p) const { return P[0] + p * (P[1] + p * (P[2] + p * P[3])); }
};

ReducedModel reduced_model(const ReducedLevel& lev, const ModelParams& p);

/// H_l(q2,p2) = A(p2) + sqrt(B(p2)) cos(q2); requires B(p2) >= -1e-12.
double reduced_hamiltonian(double l, double q2, double p2, const ModelParams& p);

/// The four separatrix energies (A(0), A(l), A(2R), A(l+2)).
std::array<double, 4> edge_values(double l, const ModelParams& p);

struct CubicRoots {
    double zeta1 = 0.0, zeta2 = 0.0, zeta3 = 0.0;
    bool real = true;  // false: complex pair, point outside the physical region
};

/// Roots of P sorted ascending, computed from companion-matrix eigenvalues
/// and polished by one Newton step.
CubicRoots solve_roots(const ReducedLevel& lev, const ModelParams& p);

enum class OrbitType { TypeI, TypeII, TypeIII };

/// TypeI: h > A(max{0,l}); TypeIII: h < A(min{l+2,2R}); TypeII between.
/// Throws OnSeparatrix within 1e-12 of either threshold.
OrbitType orbit_type(const ReducedLevel& lev, const ModelParams& p);

/// Root expansions around (l,h) = (0,0) through the printed orders,
/// truncated at `order` (1 or 2 for zeta1/zeta2; up to 3 for zeta3).
CubicRoots roots_series(const ReducedLevel& lev, const ModelParams& p, int order);

}  // namespace semitoric::reduced
