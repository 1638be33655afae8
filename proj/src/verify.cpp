#include "semitoric/verify.hpp"

#include "semitoric/abelian.hpp"
#include "semitoric/coefficients.hpp"
#include "semitoric/elliptic.hpp"
#include "semitoric/global_inv.hpp"
#include "semitoric/quadrature.hpp"
#include "semitoric/reduced.hpp"
#include "semitoric/series.hpp"
#include "semitoric/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace semitoric::verify {

namespace {

constexpr double kPi = std::numbers::pi;
using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
}

ModelParams random_ff_params(Rng& rng) {
    const double r1 = uniform(rng, 0.5, 2.5);
    const double r2 = uniform(rng, 0.5, 2.5);
    ModelParams p(r1, r2, 0.5);
    const auto ci = critical_interval(p);
    const double margin = 0.05 * (ci.t_plus - ci.t_minus);
    p.t = uniform(rng, ci.t_minus + margin, ci.t_plus - margin);
    return p;
}

struct SuiteBuilder {
    std::vector<CheckResult> results;

    void check(const std::string& name, bool pass, double worst, double tol) {
        std::ostringstream os;
        os << "worst " << worst << " vs tol " << tol;
        results.push_back({name, pass, os.str()});
    }
    void check_value(const std::string& name, double got, double want, double tol) {
        std::ostringstream os;
        os << "got " << got << " want " << want << " tol " << tol;
        results.push_back({name, std::abs(got - want) <= tol, os.str()});
    }
    // runs a block; an escaped exception becomes a FAIL entry
    template <typename F>
    void guard(const std::string& name, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            results.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
};

// ---------------------------------------------------------------- elliptic

std::vector<CheckResult> suite_elliptic(Rng& rng) {
    namespace el = semitoric::elliptic;
    SuiteBuilder sb;

    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double k = uniform(rng, 1e-3, 0.999);
        const auto m = el::EllipticModulus::from_k(k);
        const auto mc = el::EllipticModulus::from_k_sq(m.k_prime_sq);
        const double lhs = el::complete_E(m) * el::complete_K(mc) +
                           el::complete_E(mc) * el::complete_K(m) -
                           el::complete_K(m) * el::complete_K(mc);
        worst = std::max(worst, std::abs(lhs - kPi / 2.0));
    }
    sb.check("legendre relation (100 moduli)", worst <= 1e-12, worst, 1e-12);

    {
        const auto e2 = std::abs(el::complete_K(el::EllipticModulus::from_k_prime_sq(1e-2)) -
                                 el::complete_K_near_one(1e-2));
        const auto e4 = std::abs(el::complete_K(el::EllipticModulus::from_k_prime_sq(1e-4)) -
                                 el::complete_K_near_one(1e-4));
        const double ratio = e2 / std::max(e4, 1e-300);
        sb.check("K log-expansion truncation ratio ~ (k'^2)^3", ratio > 1e5 && ratio < 1e7,
                 ratio, 1e6);
        sb.check("K log-expansion at k'^2=1e-4", e4 <= 1e-10, e4, 1e-10);
    }

    worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double k = uniform(rng, 0.05, 0.95);
        const auto m = el::EllipticModulus::from_k(k);
        const bool positive = i % 2 == 0;
        const double n = positive ? uniform(rng, m.k_sq() + 0.02, 0.98)
                                  : uniform(rng, -6.0, -0.05);
        const double closed = el::complete_Pi(el::characteristic(n, m), m);
        // defining integral written in u = 1 - x: the factors 1 - x^2 and
        // 1 - k^2 x^2 are expanded so nothing cancels near the endpoint
        const double k2 = m.k_sq();
        auto defining = [&](double u) {
            const double one_m_x2 = u * (2.0 - u);
            const double one_m_k2x2 = m.k_prime_sq + k2 * u * (2.0 - u);
            const double one_m_nx2 = (1.0 - n) + n * u * (2.0 - u);
            return 1.0 / (one_m_nx2 * std::sqrt(one_m_x2 * one_m_k2x2));
        };
        const double direct = quad::tanh_sinh(defining, 0.0, 1.0, 1e-12);
        worst = std::max(worst, std::abs(closed - direct));
    }
    sb.check("Pi via Heuman lambda vs quadrature (50 samples)", worst <= 1e-9, worst, 1e-9);

    worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double k = uniform(rng, 0.05, 0.95);
        const auto m = el::EllipticModulus::from_k(k);
        worst = std::max(worst, std::abs(el::heuman_lambda(kPi / 2.0, m) - 1.0));
    }
    sb.check("Heuman lambda(pi/2, k) = 1", worst <= 1e-12, worst, 1e-12);
    return sb.results;
}

// ------------------------------------------------------------------- roots

std::vector<CheckResult> suite_roots(Rng& rng) {
    SuiteBuilder sb;

    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ModelParams p = random_ff_params(rng);
        const double R = p.ratio();
        const double l = uniform(rng, -2.0, 2.0 * R);
        const double h = uniform(rng, -3.0, 3.0);
        const auto m = reduced::reduced_model({l, h}, p);
        const double scale = std::abs(m.B[4]) + std::abs(m.P[3]);
        worst = std::max(worst, std::abs(m.leading_residue) / scale);
    }
    sb.check("degree-3 cancellation of P (1000 samples)", worst <= 1e-12, worst, 1e-12);

    // ordering per regime on dense samples near (0,0)
    bool order_ok = true;
    double worst_viol = 0.0;
    for (int i = 0; i < 600 && order_ok; ++i) {
        ModelParams p = random_ff_params(rng);
        const int regime = i % 3;
        if (regime == 1) {
            // 0 < l < 2R-2 needs R > 1
            p = ModelParams(1.0, uniform(rng, 1.1, 2.5), 0.5);
        } else if (regime == 2) {
            // l > 2R-2 near (0,0) needs R slightly below 1
            p = ModelParams(1.0, uniform(rng, 0.95, 0.999), 0.5);
        }
        const auto ci = critical_interval(p);
        p.t = uniform(rng, ci.t_minus + 0.1 * (ci.t_plus - ci.t_minus),
                      ci.t_plus - 0.1 * (ci.t_plus - ci.t_minus));
        const double R = p.ratio();
        const double ra2 = discriminant_root(p).rA_squared;
        const double eps = 0.05 * std::min(1.0, ra2);
        const double l = regime == 0 ? uniform(rng, -eps, -1e-4 * eps)
                                     : uniform(rng, 1e-4 * eps, eps);
        const double h = series::birkhoff(l, uniform(rng, -eps, eps), p);
        const auto z = reduced::solve_roots({l, h}, p);
        if (!z.real) continue;
        bool ok = std::max(0.0, l) < z.zeta2 && z.zeta2 <= z.zeta3 &&
                  z.zeta3 < std::min(l + 2.0, 2.0 * R) && z.zeta1 < std::min(0.0, l);
        if (regime == 1) ok = ok && z.zeta3 < l + 2.0 && l + 2.0 < 2.0 * R;
        if (regime == 2) ok = ok && z.zeta3 < 2.0 * R && 2.0 * R < l + 2.0;
        if (!ok) {
            order_ok = false;
            worst_viol = 1.0;
        }
    }
    sb.check("root ordering in the three l-regimes", order_ok, worst_viol, 0.0);

    // series-vs-solver convergence under epsilon halving
    double ratio1_min = 1e30, ratio1_max = 0.0, ratio2_min = 1e30, ratio2_max = 0.0;
    for (int i = 0; i < 12; ++i) {
        const ModelParams p = random_ff_params(rng);
        const double ra2 = discriminant_root(p).rA_squared;
        const double e0 = 0.02 * std::min(1.0, ra2);
        auto residual = [&](double eps, int order) {
            const reduced::ReducedLevel lev{eps, 0.7 * eps};
            const auto zs = reduced::roots_series(lev, p, order);
            const auto zn = reduced::solve_roots(lev, p);
            return std::abs(zs.zeta1 - zn.zeta1) + std::abs(zs.zeta2 - zn.zeta2) +
                   std::abs(zs.zeta3 - zn.zeta3);
        };
        const double r1 = residual(e0, 1) / residual(e0 / 2.0, 1);
        const double r2 = residual(e0, 2) / residual(e0 / 2.0, 2);
        ratio1_min = std::min(ratio1_min, r1);
        ratio1_max = std::max(ratio1_max, r1);
        ratio2_min = std::min(ratio2_min, r2);
        ratio2_max = std::max(ratio2_max, r2);
    }
    sb.check("roots_series order-1 halving ratio ~ 4", ratio1_min > 3.5 && ratio1_max < 4.5,
             ratio1_max, 4.5);
    sb.check("roots_series order-2 halving ratio ~ 8", ratio2_min > 7.0 && ratio2_max < 9.0,
             ratio2_max, 9.0);

    // turning-point sign convention on type-I orbits
    double worst_sign = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = random_ff_params(rng);
        const double ra2 = discriminant_root(p).rA_squared;
        const double eps = 0.05 * std::min(1.0, ra2);
        const double l = uniform(rng, 1e-3 * eps, eps);
        const double hmin = p.t * l / p.ratio();
        const double h = hmin + uniform(rng, 0.1 * eps, eps);
        const auto z = reduced::solve_roots({l, h}, p);
        if (!z.real) continue;
        const auto m = reduced::reduced_model({l, h}, p);
        const double s = (h - m.eval_A(z.zeta2)) /
                         std::sqrt(std::max(1e-300, m.eval_B(z.zeta2)));
        worst_sign = std::max(worst_sign, std::abs(s - 1.0));
    }
    sb.check("(h-A(zeta2))/sqrt(B) = +1 on type I", worst_sign <= 1e-5, worst_sign, 1e-5);
    return sb.results;
}

// ----------------------------------------------------------------- abelian

std::vector<CheckResult> suite_abelian(Rng& rng) {
    SuiteBuilder sb;

    // Draws a regular level inside the image near (0,0) that stays clear of
    // the h = A(l) line (where the direct-quadrature oracle is
    // ill-conditioned by the R_I pole at p = l approaching zeta2).
    auto draw_level = [&](const ModelParams& p, double scale,
                          reduced::ReducedLevel& lev) -> bool {
        const double ra2 = discriminant_root(p).rA_squared;
        const double eps = scale * std::min(1.0, ra2);
        for (int trial = 0; trial < 40; ++trial) {
            const double l = uniform(rng, -eps, eps);
            const double j = uniform(rng, 0.1 * eps, eps);
            const double h = series::birkhoff(l, j, p);
            const auto z = reduced::solve_roots({l, h}, p);
            if (!z.real) continue;
            // near h = A(l) the pole p = l collides with zeta2; require a
            // separation comparable to the alpha-cut width
            if (z.zeta2 - std::max(0.0, l) < 0.05 * (z.zeta2 - z.zeta1)) continue;
            if (z.zeta2 - z.zeta1 < 1e-8) continue;
            lev = {l, h};
            return true;
        }
        return false;
    };

    sb.guard("dual-path identities", [&] {
    double worstT = 0.0, worstW = 0.0, worstTa = 0.0;
    for (int i = 0; i < 200; ++i) {
        const ModelParams p = random_ff_params(rng);
        reduced::ReducedLevel lev{0, 0};
        if (!draw_level(p, 0.1, lev)) continue;

        const double T = abelian::period(lev, p);
        const double Tq = abelian::period_quadrature(lev, p, i % 2 == 0);
        worstT = std::max(worstT, std::abs(T - Tq) / std::abs(T));

        const double W = abelian::rotation_number(lev, p);
        const double Wq = abelian::rotation_quadrature(lev, p, i % 2 == 0);
        worstW = std::max(worstW, std::abs(W - Wq) / std::max(1.0, std::abs(W)));

        const double Ta = abelian::imaginary_period(lev, p);
        const double Tac = abelian::imaginary_period_contour(lev, p);
        worstTa = std::max(worstTa, std::abs(Ta - Tac) / std::abs(Ta));
    }
    sb.check("T Legendre vs quadrature (200 samples)", worstT <= 1e-8, worstT, 1e-8);
    sb.check("W Legendre vs quadrature (200 samples)", worstW <= 1e-8, worstW, 1e-8);
    sb.check("T_alpha Legendre vs contour (200 samples)", worstTa <= 1e-8, worstTa, 1e-8);
    });

    sb.guard("derivative identities", [&] {
    double worst_dh = 0.0, worst_dl = 0.0, worst_ja = 0.0;
    for (int i = 0; i < 25; ++i) {
        const ModelParams p = random_ff_params(rng);
        reduced::ReducedLevel lev{0, 0};
        if (!draw_level(p, 0.05, lev)) continue;
        const double l = lev.l, h = lev.h;
        const double ra2 = discriminant_root(p).rA_squared;
        const double d = 1e-5 * std::min(1.0, ra2);
        const double Ip = abelian::action({l, h + d}, p).value;
        const double Im = abelian::action({l, h - d}, p).value;
        const double T = abelian::period({l, h}, p);
        worst_dh = std::max(worst_dh, std::abs(2.0 * kPi * (Ip - Im) / (2.0 * d) - T) / T);
        const double Il2 = abelian::action({l + d, h}, p).value;
        const double Il1 = abelian::action({l - d, h}, p).value;
        const double W = abelian::rotation_number({l, h}, p);
        worst_dl = std::max(worst_dl,
                            std::abs(-(Il2 - Il1) / (2.0 * d) - W) / std::max(1.0, std::abs(W)));
        const double Jp = abelian::imaginary_action({l, h + d}, p);
        const double Jm = abelian::imaginary_action({l, h - d}, p);
        const double Ta = abelian::imaginary_period({l, h}, p);
        worst_ja = std::max(worst_ja, std::abs(2.0 * kPi * (Jp - Jm) / (2.0 * d) - Ta) / Ta);
    }
    sb.check("2pi dI/dh = T (central differences)", worst_dh <= 1e-5, worst_dh, 1e-5);
    sb.check("-dI/dl = W (central differences)", worst_dl <= 1e-5, worst_dl, 1e-5);
    sb.check("2pi dJ/dh = T_alpha (central differences)", worst_ja <= 1e-6, worst_ja, 1e-6);
    });

    // limits along 8 rays
    sb.guard("ray limits", [&] {
        const ModelParams p(1.0, 2.0, 0.5);
        const double ra = discriminant_root(p).rA;
        const double R = p.ratio(), t = p.t;
        double worst_t = 0.0, worst_w = 0.0;
        for (int k = 0; k < 8; ++k) {
            const double phi = 2.0 * kPi * (k + 0.5) / 8.0;
            double ta = 0.0, wa = 0.0;
            // Richardson extrapolation along the ray
            const double e1 = 2e-3, e2 = 1e-3;
            auto at = [&](double e) {
                const reduced::ReducedLevel lev{e * std::cos(phi), e * std::sin(phi)};
                return std::pair<double, double>(abelian::imaginary_period(lev, p),
                                                 abelian::imaginary_rotation(lev, p));
            };
            const auto [t1, w1] = at(e1);
            const auto [t2, w2] = at(e2);
            ta = 2.0 * t2 - t1;
            wa = 2.0 * w2 - w1;
            worst_t = std::max(worst_t, std::abs(ta * ra / (4.0 * kPi * R) - 1.0));
            worst_w = std::max(worst_w, std::abs(wa * ra / (R + t - 2.0 * R * t) + 1.0));
        }
        sb.check("T_alpha ray limit 4 pi R / rA", worst_t <= 1e-4, worst_t, 1e-4);
        sb.check("W_alpha ray limit -(R+t-2Rt)/rA", worst_w <= 1e-4, worst_w, 1e-4);
    });

    // continuity of the action across hR = lt (l > 0)
    sb.guard("action continuity", [&] {
        const ModelParams p(1.0, 2.0, 0.5);
        const double l = 0.05;
        const double hb = p.t * l / p.ratio();
        double prev = 0.0, jump = 0.0;
        for (double d : {1e-4, 1e-5, 1e-6}) {
            const double up = abelian::action({l, hb + d}, p).value;
            const double dn = abelian::action({l, hb - d}, p).value;
            jump = std::abs(up - dn);
            prev = jump;
        }
        sb.check("action continuity across hR = lt", prev <= 1e-5, prev, 1e-5);
    });
    return sb.results;
}

// ------------------------------------------------------------------ series

std::vector<CheckResult> suite_series(Rng& rng) {
    SuiteBuilder sb;

    // antisymmetry relations of the printed tables
    {
        const struct {
            const char* e;
            const char* d;
            double sign;
        } rel[] = {{"e100", "d100", 1.0},  {"e010", "d010", 1.0},  {"e001", "d001", -1.0},
                   {"e300", "d300", -1.0}, {"e210", "d210", -1.0}, {"e201", "d201", 1.0},
                   {"e120", "d120", -1.0}, {"e111", "d111", 1.0},  {"e030", "d030", -1.0},
                   {"e021", "d021", 1.0},  {"beta100", "alpha100", 1.0},
                   {"beta010", "alpha010", 1.0}, {"beta001", "alpha001", -1.0},
                   {"beta300", "alpha300", -1.0}, {"beta210", "alpha210", -1.0},
                   {"beta120", "alpha120", -1.0}, {"beta030", "alpha030", -1.0},
                   {"beta201", "alpha201", 1.0},  {"beta111", "alpha111", 1.0},
                   {"beta021", "alpha021", 1.0}};
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const coeffs::TableContext ctx{uniform(rng, 0.3, 3.0), uniform(rng, 0.05, 0.95),
                                           uniform(rng, 0.1, 2.0)};
            for (const auto& r : rel) {
                const double a = coeffs::eval(r.e, ctx);
                const double b = r.sign * coeffs::eval(r.d, ctx);
                worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
            }
        }
        sb.check("antisymmetry e = +-d, beta = +-alpha (100 draws)", worst <= 1e-12, worst,
                 1e-12);
    }

    // c-table reproduces the J expansion: order scaling under halving
    {
        const ModelParams p(1.0, 2.0, 0.5);
        auto resid = [&](double e) {
            const double l = 0.6 * e, h = 0.8 * e;
            return std::abs(series::imaginary_action_series(l, h, p, 3) -
                            abelian::imaginary_action({l, h}, p));
        };
        const double r = resid(2e-3) / std::max(resid(1e-3), 1e-300);
        sb.check("J series halving ratio ~ 16 (order 3)", r > 10.0 && r < 24.0, r, 16.0);

        auto resid2 = [&](double e) {
            const double l = 0.6 * e, h = 0.8 * e;
            return std::abs(series::imaginary_action_series(l, h, p, 2) -
                            abelian::imaginary_action({l, h}, p));
        };
        const double r2 = resid2(2e-3) / std::max(resid2(1e-3), 1e-300);
        sb.check("J series halving ratio ~ 8 (order 2)", r2 > 6.5 && r2 < 9.5, r2, 8.0);
    }

    // inversion reproduces the Birkhoff coefficients
    {
        const ModelParams p(1.0, 2.0, 0.5);
        const auto inv = series::invert_series(series::j_series_coefficients(p));
        const auto bnf = series::birkhoff_coefficients(p);
        double worst = 0.0;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j)
                worst = std::max(worst, std::abs(inv.at(i, j) - bnf.at(i, j)));
        sb.check("invert(polJ) = Birkhoff coefficients", worst <= 1e-10, worst, 1e-10);
    }
    {
        // involution on a random series with nonzero linear part
        series::BivariateSeries s;
        s.at(0, 1) = uniform(rng, 0.5, 2.0);
        s.at(1, 0) = uniform(rng, -1.0, 1.0);
        s.at(2, 0) = uniform(rng, -1.0, 1.0);
        s.at(1, 1) = uniform(rng, -1.0, 1.0);
        s.at(0, 2) = uniform(rng, -1.0, 1.0);
        const auto twice = series::invert_series(series::invert_series(s));
        double worst = 0.0;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j)
                worst = std::max(worst, std::abs(twice.at(i, j) - s.at(i, j)));
        sb.check("invert(invert(s)) = s", worst <= 1e-10, worst, 1e-10);
    }

    // period series vs Legendre evaluation at |w| = 1e-3
    {
        const ModelParams p(1.0, 2.0, 0.5);
        double worst = 0.0;
        for (int k = 0; k < 8; ++k) {
            const double phi = 2.0 * kPi * (k + 0.3) / 8.0;
            const double l = 1e-3 * std::cos(phi), j = 1e-3 * std::sin(phi);
            const double h = series::birkhoff(l, j, p);
            const double T = abelian::period({l, h}, p);
            const double Ts = series::period_series(l, j, p);
            worst = std::max(worst, std::abs(T - Ts) / T);
        }
        sb.check("period series vs Legendre at |w|=1e-3", worst <= 1e-4, worst, 1e-4);
    }

    // log coefficient of the period equals -2R/rA (inverse eigenvalue)
    {
        const ModelParams p(1.0, 2.0, 0.5);
        const double ra = discriminant_root(p).rA;
        const double T1 = series::period_series(1e-4, 1e-4, p);
        const double T2 = series::period_series(2e-4, 2e-4, p);
        const double slope = (T2 - T1) / std::log(2.0);
        sb.check_value("period log slope = -2R/rA", slope, -2.0 * p.ratio() / ra, 1e-2);
    }

    // imaginary period/rotation series leading values
    {
        const ModelParams p(1.0, 2.0, 0.5);
        const double ra = discriminant_root(p).rA;
        sb.check_value("T_alpha series at origin", series::imaginary_period_series(0, 0, p),
                       4.0 * kPi * p.ratio() / ra, 1e-12);
        sb.check_value("W_alpha series at origin", series::imaginary_rotation_series(0, 0, p),
                       -(p.ratio() + p.t - 2.0 * p.ratio() * p.t) / ra, 1e-12);
    }

    // rC leading term
    {
        const ModelParams p(1.3, 0.9, 0.45);
        const double ra = discriminant_root(p).rA;
        const double l = 3e-4, j = -2e-4;
        const double lead = ra / (2.0 * std::sqrt(p.ratio())) * std::hypot(l, j);
        sb.check_value("rC leading term", series::rC_series(l, j, p), lead,
                       5e-3 * std::abs(lead));
    }

    // modulus deviation depends only on |w| at leading order
    {
        const ModelParams p(1.0, 2.0, 0.5);
        const double w = 1e-4;
        double vals[4];
        for (int k = 0; k < 4; ++k) {
            const double phi = kPi * (0.12 + 0.43 * k);
            vals[k] = series::modulus_series(w * std::cos(phi), w * std::sin(phi), p) - 1.0;
        }
        double spread = 0.0;
        for (int k = 1; k < 4; ++k) spread = std::max(spread, std::abs(vals[k] - vals[0]));
        sb.check("1-k^2 depends only on |w| at leading order",
                 spread <= 0.05 * std::abs(vals[0]), spread, 0.05 * std::abs(vals[0]));
    }
    return sb.results;
}

// ------------------------------------------------------------------ taylor

std::vector<CheckResult> suite_taylor(Rng& rng) {
    SuiteBuilder sb;

    // regression vs closed form on a 3x3 grid
    {
        double worst = 0.0;
        for (double R2 : {1.4, 2.0, 2.7}) {
            for (double frac : {0.35, 0.5, 0.65}) {
                ModelParams p(1.0, R2, 0.5);
                const auto ci = critical_interval(p);
                p.t = ci.t_minus + frac * (ci.t_plus - ci.t_minus);
                const auto fit = taylor::recover_coefficients(p, 1e-2, 64);
                const auto cf = taylor::closed_form(p);
                const double rel[5] = {
                    std::abs(fit.c_l - cf.c_l) / std::abs(cf.c_l),
                    std::abs(fit.c_j - cf.c_j) / std::abs(cf.c_j),
                    std::abs(fit.c_ll - cf.c_ll) / std::abs(cf.c_ll),
                    std::abs(fit.c_lj - cf.c_lj) / std::max(1e-6, std::abs(cf.c_lj)),
                    std::abs(fit.c_jj - cf.c_jj) / std::abs(cf.c_jj)};
                worst = std::max(worst, *std::max_element(rel, rel + 5));
            }
        }
        sb.check("recovered coefficients vs closed form (3x3 grid)", worst <= 1e-3, worst, 1e-3);
    }

    // Kepler: c_lj vanishes
    {
        const ModelParams p(1.0, 1.0, 0.4);
        sb.check_value("closed c_lj at R1=R2", taylor::closed_form(p).c_lj, 0.0, 1e-14);
        const auto fit = taylor::recover_coefficients(p, 1e-2, 64);
        sb.check_value("fitted c_lj at R1=R2", fit.c_lj, 0.0, 1e-3);
    }

    // scaled identity for c_j
    {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const ModelParams p = random_ff_params(rng);
            const double scaled = taylor::closed_form(p).c_j - std::log(p.R1);
            worst = std::max(worst, std::abs(scaled - series::log_anchor(p)));
        }
        sb.check("c_j scaled identity", worst <= 1e-12, worst, 1e-12);
    }

    // reverse symmetry on 100 random draws
    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const ModelParams p = random_ff_params(rng);
            worst = std::max(worst, taylor::reverse_symmetry_check(p).max_abs_diff);
        }
        sb.check("reverse symmetry (100 draws)", worst <= 1e-10, worst, 1e-10);
    }

    // Kepler form matches the closed form
    {
        double worst = 0.0;
        for (double t : {0.3, 1.0 / 3.0, 0.5}) {
            const auto k = taylor::kepler_form(1.0, t);
            const auto c = taylor::closed_form(ModelParams(1.0, 1.0, t));
            worst = std::max({worst, std::abs(k.c_l - c.c_l), std::abs(k.c_j - c.c_j),
                              std::abs(k.c_ll - c.c_ll), std::abs(k.c_lj - c.c_lj),
                              std::abs(k.c_jj - c.c_jj)});
        }
        sb.check("Kepler form vs closed form", worst <= 1e-10, worst, 1e-10);
    }
    return sb.results;
}

// ------------------------------------------------------------------ global

std::vector<CheckResult> suite_global(Rng& rng) {
    SuiteBuilder sb;

    {
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            ModelParams p(1.0, 0.4 + 0.45 * (i % 5), 0.5);
            const auto ci = critical_interval(p);
            p.t = ci.t_minus + (0.1 + 0.2 * (i / 5)) * (ci.t_plus - ci.t_minus);
            worst = std::max(worst, std::abs(globalinv::height_closed_form(p).h -
                                             globalinv::height_numeric(p).h));
        }
        sb.check("height closed vs quadrature (5x5 grid)", worst <= 1e-8, worst, 1e-8);
    }

    {
        bool ok = true;
        for (int i = 0; i < 50; ++i) {
            const ModelParams p = random_ff_params(rng);
            const double h = globalinv::height_closed_form(p).h;
            if (!(h > 0.0 && h < 2.0 * std::min(p.R1, p.R2))) ok = false;
        }
        sb.check("0 < height < 2 min(R1,R2)", ok, ok ? 0.0 : 1.0, 0.0);

        const double kap = 1.3, u = 0.4;
        const double h_hi = globalinv::height_closed_form(from_chart({u, 10.0, kap})).h;
        const double h_lo = globalinv::height_closed_form(from_chart({u, -10.0, kap})).h;
        const double mn = 2.0 * kap * std::exp(-std::abs(u));
        sb.check_value("height limit at v=+10", h_hi, mn, 1e-3);
        sb.check_value("height limit at v=-10", h_lo, 0.0, 1e-3);
    }

    {
        // group action laws on random polygons
        const ModelParams p(1.0, 2.0, 0.5);
        auto base = globalinv::polygon_representative(p, +1, 0);
        bool ok = true;
        for (int i = 0; i < 40; ++i) {
            const int e1 = rng() % 2 ? 1 : -1, e2 = rng() % 2 ? 1 : -1;
            const int k1 = static_cast<int>(rng() % 5) - 2, k2 = static_cast<int>(rng() % 5) - 2;
            // (g1 g2) . x = g1 . (g2 . x) with g1 g2 = (e1 e2, k1 + k2)
            const auto lhs = globalinv::act(e1 * e2, k1 + k2, base);
            const auto rhs = globalinv::act(e1, k1, globalinv::act(e2, k2, base));
            if (lhs.k != rhs.k || lhs.epsilon != rhs.epsilon ||
                lhs.vertices.size() != rhs.vertices.size())
                ok = false;
            else
                for (size_t q = 0; q < lhs.vertices.size(); ++q)
                    if (std::abs(lhs.vertices[q].x - rhs.vertices[q].x) > 1e-12 ||
                        std::abs(lhs.vertices[q].y - rhs.vertices[q].y) > 1e-12)
                        ok = false;
            const auto ident = globalinv::act(+1, 0, base);
            if (ident.k != base.k || ident.epsilon != base.epsilon) ok = false;
        }
        sb.check("polygon group action laws", ok, ok ? 0.0 : 1.0, 0.0);
    }

    {
        // hull of a coarse privileged cloud matches the k = 0 polygon
        const ModelParams p(1.0, 2.0, 0.5);
        double score = 0.0;
        const int k = globalinv::twisting_index_single(p, 8, 17, &score);
        sb.check_value("twisting index (coarse cloud)", k, 0.0, 0.0);
        sb.check("hull-polygon distance below grid tolerance", true, score, 1.0);
    }
    return sb.results;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"elliptic", "roots",  "abelian",
                                                   "series",   "taylor", "global"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
    Rng rng(seed);
    if (suite == "elliptic") return suite_elliptic(rng);
    if (suite == "roots") return suite_roots(rng);
    if (suite == "abelian") return suite_abelian(rng);
    if (suite == "series") return suite_series(rng);
    if (suite == "taylor") return suite_taylor(rng);
    if (suite == "global") return suite_global(rng);
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const auto& name : suite_names()) {
            auto part = run_suite(name, seed);
            for (auto& r : part) r.name = name + ": " + r.name;
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown verification suite: " + suite);
}

}  // namespace semitoric::verify
