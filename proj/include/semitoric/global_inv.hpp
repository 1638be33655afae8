#pragma once

#include "semitoric/params.hpp"

#include <utility>
#include <vector>

namespace semitoric::globalinv {

struct HeightInvariant {
    double h;  // in (0, 2 min{R1,R2}) strictly inside the focus-focus regime
};

/// Closed form of the height invariant.  arctan determinations take values
/// in [0, pi] (atan2 against a positive first argument).
HeightInvariant height_closed_form(const ModelParams& p);

/// Quadrature of the reduced-area integral at l = 0; matches the closed
/// form to 1e-8.
HeightInvariant height_numeric(const ModelParams& p);

struct Vec2 {
    double x;
    double y;
};

/// Weighted polygon with twisting index: a convex vertex ring (counter-
/// clockwise, unscaled (L, toric height) coordinates), the cut abscissa
/// lambda (= 0 for this family), the sign epsilon and the index k.
struct WeightedPolygon {
    std::vector<Vec2> vertices;
    double lambda = 0.0;
    int epsilon = +1;
    int k = 0;
};

/// Representative for a given (epsilon, k); the (+1, 0) base has vertices
/// (-2R1,-h), (2R2-2R1,-h), (2R2, 2R1-h), (0, 2R1-h) in the standard case,
/// and the general one is obtained through the group action.
WeightedPolygon polygon_representative(const ModelParams& p, int epsilon, int k);

/// Group action (eps', T^{k'}) * (Delta, b_lambda, eps, k)
///   = (t_u(T^{k'} Delta), b_lambda, eps' eps, k' + k),  u = eps (1-eps')/2.
WeightedPolygon act(int epsilon_prime, int k_prime, const WeightedPolygon& poly);

/// Piecewise-linear boundary data (for tests): slopes of the merged edges,
/// counter-clockwise starting from the lowest-leftmost vertex.
std::vector<double> edge_slopes(const WeightedPolygon& poly);

struct MomentumSample {
    double theta1, z1, theta2, z2;
    double L;    // unscaled momentum value
    double H;    // energy
    double nu2;  // I_m = I o F - I(0,0)
};

struct CloudResult {
    std::vector<MomentumSample> samples;
    long skipped_singular = 0;
};

/// Privileged momentum map value nu_2 = I(L,h) - I(0,0) in unscaled units;
/// the action is the continuous area form plus the monodromy term l for
/// l < 0 (which places the non-smoothness on the upward cut).
double privileged_nu2(double L, double h, const ModelParams& p);

/// Samples the phase space on uniform (theta, z) grids (z inclusive of
/// +-(1 - 1e-9)) and evaluates the privileged momentum map.
CloudResult privileged_map_sample(const ModelParams& p, int n_theta, int n_z);

/// Convex hull (counter-clockwise) of a point set.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

/// Matches the hull of the privileged cloud against representatives for
/// k in [-3, 3]; returns the matching k (always 0 for this family) and
/// re-checks at two more interior couplings.  Throws NoMatchingPolygon.
int twisting_index_verify(const ModelParams& p, int n_theta = 10, int n_z = 32);

/// One-shot hull match at the given parameters only.
int twisting_index_single(const ModelParams& p, int n_theta, int n_z,
                          double* score_out = nullptr);

using params_ff_count_t = int (*)(const ModelParams&);

}  // namespace semitoric::globalinv
