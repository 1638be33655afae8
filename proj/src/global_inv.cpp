#include "semitoric/global_inv.hpp"

#include "semitoric/abelian.hpp"
#include "semitoric/parallel.hpp"
#include "semitoric/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace semitoric::globalinv {

namespace {
constexpr double kPi = std::numbers::pi;
using par::parallel_for;

double dh_length(double x, const ModelParams& p) {
    // Duistermaat-Heckman function: vertical extent of the polygon fibre.
    return std::min(x + 2.0 * p.R1, 2.0 * p.R2) - std::max(0.0, x);
}

}  // namespace

HeightInvariant height_closed_form(const ModelParams& p) {
    if (classify_fixed_point(p) != FixedPointClass::FocusFocus)
        throw OutOfFocusFocusRange("height: focus-focus regime required");
    const double R = p.ratio(), t = p.t;
    const double ra = discriminant_root(p).rA;
    const double v = ra - 2.0 * R * t * std::atan2(ra, R - t) -
                     2.0 * t * std::atan2(ra, R + t - 2.0 * R * t);
    return {2.0 * std::min(p.R1, p.R2) + p.R1 / (kPi * t) * v};
}

HeightInvariant height_numeric(const ModelParams& p) {
    if (classify_fixed_point(p) != FixedPointClass::FocusFocus)
        throw OutOfFocusFocusRange("height: focus-focus regime required");
    const double R = p.ratio(), t = p.t;
    const double ra2 = discriminant_root(p).rA_squared;
    const double z3 = ra2 / (2.0 * R * t * (1.0 - t));
    auto f = [&](double p2) {
        const double num = R + (p2 - 1.0) * t - 2.0 * R * t;
        const double den = t * std::sqrt((2.0 - p2) * (2.0 * R - p2));
        return std::acos(std::clamp(num / den, -1.0, 1.0));
    };
    // The oscillation region is [0, z3]; beyond z3 the integrand saturates
    // (at pi when the level sits fully below the fibre there), so the
    // integral runs over the whole reduced strip, split at z3.
    const double hi = std::min(2.0, 2.0 * R);
    double integral = quad::tanh_sinh(f, 0.0, z3, 1e-11);
    if (z3 < hi) integral += quad::tanh_sinh(f, z3, hi, 1e-11);
    return {2.0 * std::min(p.R1, p.R2) - p.R1 / kPi * integral};
}

WeightedPolygon polygon_representative(const ModelParams& p, int epsilon, int k) {
    const double h = height_closed_form(p).h;
    const double R1 = p.R1, R2 = p.R2;
    const double mn = 2.0 * std::min(R1, R2);

    auto top = [&](double x) { return std::min(0.0, x) + mn - h; };
    auto bottom = [&](double x) { return top(x) - dh_length(x, p); };

    double xs[4] = {-2.0 * R1, 0.0, 2.0 * R2 - 2.0 * R1, 2.0 * R2};
    std::sort(xs, xs + 4);

    WeightedPolygon poly;
    poly.lambda = 0.0;
    poly.epsilon = +1;
    poly.k = 0;
    for (double x : xs) poly.vertices.push_back({x, bottom(x)});
    for (int i = 3; i >= 0; --i) {
        const double x = xs[i];
        if (std::abs(top(x) - bottom(x)) > 1e-13)
            poly.vertices.push_back({x, top(x)});
    }
    // drop duplicated break x-values (Kepler case: 2R2-2R1 == 0)
    std::vector<Vec2> dedup;
    for (const auto& v : poly.vertices) {
        if (dedup.empty() || std::abs(dedup.back().x - v.x) > 1e-13 ||
            std::abs(dedup.back().y - v.y) > 1e-13)
            dedup.push_back(v);
    }
    poly.vertices = std::move(dedup);
    if (epsilon == +1 && k == 0) return poly;
    return act(epsilon, k, poly);
}

WeightedPolygon act(int epsilon_prime, int k_prime, const WeightedPolygon& poly) {
    WeightedPolygon out = poly;
    const int u = poly.epsilon * (1 - epsilon_prime) / 2;  // eps (1-eps')/2
    for (auto& v : out.vertices) {
        v.y += k_prime * v.x;                       // global T^{k'}
        if (v.x > poly.lambda) v.y += u * v.x;      // half-plane shear t_u
    }
    out.epsilon = epsilon_prime * poly.epsilon;
    out.k = k_prime + poly.k;
    return out;
}

std::vector<double> edge_slopes(const WeightedPolygon& poly) {
    std::vector<double> slopes;
    const auto& vs = poly.vertices;
    const size_t n = vs.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = vs[i], b = vs[(i + 1) % n];
        if (std::abs(b.x - a.x) < 1e-13) continue;  // vertical end caps
        const double s = (b.y - a.y) / (b.x - a.x);
        if (slopes.empty() || std::abs(slopes.back() - s) > 1e-9) slopes.push_back(s);
    }
    return slopes;
}

double privileged_nu2(double L, double h, const ModelParams& p) {
    const double l = L / p.R1;
    double v = p.R1 * abelian::action_area({l, h}, p);
    if (l < 0.0) v += L;
    const double I0 = height_closed_form(p).h - 2.0 * std::min(p.R1, p.R2);
    return v - I0;
}

namespace {

// Fallback for boundary fibres where the adaptive rule cannot certify its
// tolerance (pinched roots put clamp kinks mid-interval): composite
// midpoint on the bounded integrand, accurate to well below the hull
// matching tolerance.
double area_action_fixed(const reduced::ReducedLevel& lev, const ModelParams& p, int n) {
    const double R = p.ratio();
    const double lo = std::max(0.0, lev.l), hi = std::min(lev.l + 2.0, 2.0 * R);
    if (!(lo < hi)) return 0.0;
    const auto m = reduced::reduced_model(lev, p);
    const double dx = (hi - lo) / n;
    double area = 0.0;
    for (int i = 0; i < n; ++i) {
        const double p2 = lo + (i + 0.5) * dx;
        const double B = std::max(0.0, m.eval_B(p2));
        const double num = lev.h - m.eval_A(p2);
        const double arg = B > 0.0 ? num / std::sqrt(B) : (num >= 0.0 ? 1.0 : -1.0);
        area += 2.0 * std::acos(std::clamp(arg, -1.0, 1.0)) * dx;
    }
    return -area / (2.0 * kPi);
}

}  // namespace

CloudResult privileged_map_sample(const ModelParams& p, int n_theta, int n_z) {
    const double t = p.t;
    const double zcap = 1.0 - 1e-9;
    std::vector<double> thetas(n_theta), zs(n_z);
    for (int i = 0; i < n_theta; ++i) thetas[i] = 2.0 * kPi * i / n_theta;
    for (int i = 0; i < n_z; ++i)
        zs[i] = -zcap + 2.0 * zcap * i / (n_z - 1);

    const long total = static_cast<long>(n_theta) * n_theta * n_z * n_z;
    std::vector<MomentumSample> samples(total);
    std::vector<char> keep(total, 0);

    const double I0 = height_closed_form(p).h - 2.0 * std::min(p.R1, p.R2);

    parallel_for(total, [&](long idx) {
        long rem = idx;
        const int i1 = rem % n_theta;
        rem /= n_theta;
        const int i2 = rem % n_theta;
        rem /= n_theta;
        const int j1 = rem % n_z;
        rem /= n_z;
        const int j2 = static_cast<int>(rem);
        const double th1 = thetas[i1], th2 = thetas[i2], z1 = zs[j1], z2 = zs[j2];
        const double s1 = std::sqrt(std::max(0.0, 1.0 - z1 * z1));
        const double s2 = std::sqrt(std::max(0.0, 1.0 - z2 * z2));
        const double L = p.R1 * (z1 - 1.0) + p.R2 * (z2 + 1.0);
        const double H = (1.0 - t) * z1 + t * (s1 * s2 * std::cos(th1 - th2) + z1 * z2) +
                         2.0 * t - 1.0;
        if (std::abs(L) < 1e-12 && std::abs(H) < 1e-12) return;  // singular fibre
        const double l = L / p.R1;
        double area;
        try {
            area = abelian::action_area({l, H}, p);
        } catch (const QuadratureFailure&) {
            // boundary fibres (levels within ~1e-9 of the image edge) can
            // defeat the adaptive rule; fall back to a fixed bounded rule
            area = area_action_fixed({l, H}, p, 4096);
        }
        double val = p.R1 * area;
        if (l < 0.0) val += L;
        samples[idx] = {th1, z1, th2, z2, L, H, val - I0};
        keep[idx] = 1;
    });

    CloudResult out;
    out.samples.reserve(total);
    for (long i = 0; i < total; ++i) {
        if (keep[i]) out.samples.push_back(samples[i]);
        else ++out.skipped_singular;
    }
    return out;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const size_t n = pts.size();
    if (n < 3) return pts;
    auto cross = [](const Vec2& o, const Vec2& a, const Vec2& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<Vec2> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

namespace {

double point_segment_distance(const Vec2& q, const Vec2& a, const Vec2& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double s = len2 > 0.0 ? ((q.x - a.x) * dx + (q.y - a.y) * dy) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    const double px = a.x + s * dx - q.x, py = a.y + s * dy - q.y;
    return std::hypot(px, py);
}

double point_polyline_distance(const Vec2& q, const std::vector<Vec2>& ring) {
    double best = 1e300;
    const size_t n = ring.size();
    for (size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(q, ring[i], ring[(i + 1) % n]));
    return best;
}

double boundary_hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    double m = 0.0;
    for (const auto& q : a) m = std::max(m, point_polyline_distance(q, b));
    for (const auto& q : b) m = std::max(m, point_polyline_distance(q, a));
    return m;
}

}  // namespace

int twisting_index_single(const ModelParams& p, int n_theta, int n_z, double* score_out) {
    const CloudResult cloud = privileged_map_sample(p, n_theta, n_z);
    std::vector<Vec2> pts;
    pts.reserve(cloud.samples.size());
    for (const auto& s : cloud.samples) pts.push_back({s.L, s.nu2});
    const std::vector<Vec2> hull = convex_hull(std::move(pts));

    const double dz = 2.0 / (n_z - 1);
    const double dth = 2.0 * kPi / n_theta;
    const double tol = 2.0 * std::max(dth * p.R2, dz * p.R2);

    int best_k = 0;
    double best = 1e300;
    for (int k = -3; k <= 3; ++k) {
        const WeightedPolygon rep = polygon_representative(p, +1, k);
        const double score = boundary_hausdorff(hull, rep.vertices);
        if (score < best) {
            best = score;
            best_k = k;
        }
    }
    if (score_out) *score_out = best;
    if (best > tol)
        throw NoMatchingPolygon("twisting index: hull matches no polygon within tolerance");
    return best_k;
}

int twisting_index_verify(const ModelParams& p, int n_theta, int n_z) {
    const int k0 = twisting_index_single(p, n_theta, n_z, nullptr);
    // independence from the coupling: re-run at two more interior values
    const auto ci = critical_interval(p);
    const double probes[2] = {0.65 * ci.t_minus + 0.35 * ci.t_plus,
                              0.35 * ci.t_minus + 0.65 * ci.t_plus};
    for (double tp : probes) {
        ModelParams q(p.R1, p.R2, tp);
        if (twisting_index_single(q, n_theta, n_z, nullptr) != k0)
            throw NoMatchingPolygon("twisting index: value changed with the coupling");
    }
    return k0;
}

}  // namespace semitoric::globalinv
