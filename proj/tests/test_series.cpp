#include "semitoric/series.hpp"

#include "semitoric/abelian.hpp"
#include "semitoric/coefficients.hpp"
#include "semitoric/taylor.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>

using namespace semitoric;
namespace se = semitoric::series;

namespace {

constexpr double kPi = std::numbers::pi;

// Independently re-typed copy of the printed coefficient polynomials (the
// two-person rule against transcription typos in the data file).  Variables
// follow the printed layout; s = sqrt(R), r = rA treated as free symbols.
using Fn = std::function<double(double, double, double)>;  // (R, t, rA)

std::map<std::string, Fn> retyped_tables() {
    auto P = [](double x, int n) { return std::pow(x, n); };
    std::map<std::string, Fn> f;

    // Birkhoff normal form
    f["a20"] = [P](double R, double t, double) {
        return -R * R * (2 - 7 * t + 6 * t * t) - R * (-3 + t) * t - t * t;
    };
    f["a11"] = [](double R, double t, double r) { return 2 * (-1 + R) * r * t; };
    f["a02"] = [P](double R, double t, double) {
        return -R * R * (2 - 5 * t + 2 * t * t) - R * t * (-1 + 3 * t) + t * t;
    };
    f["a30"] = [P](double R, double t, double) {
        return -(-1 + R) * t *
               (P(R, 3) * P(-1 + 2 * t, 3) + R * R * t * (3 - 8 * t + 4 * t * t) +
                R * t * t * (-3 + 2 * t) + P(t, 3));
    };
    f["a21"] = [P](double R, double t, double r) {
        return -R * r * (-1 + t) *
               (R * R * P(1 - 2 * t, 2) + R * t * (-2 + 9 * t) + t * t);
    };
    f["a12"] = [P](double R, double t, double) {
        return -3 * (-1 + R) * t *
               (P(R, 3) * P(-1 + 2 * t, 3) + R * R * t * (3 - 8 * t + 4 * t * t) +
                R * t * t * (-3 + 2 * t) + P(t, 3));
    };
    f["a03"] = [P](double R, double t, double r) {
        return r * (P(R, 3) * (1 - 3 * t + 4 * P(t, 3)) + R * R * (7 - 9 * t) * t * t +
                    R * (-3 + t) * t * t + 2 * P(t, 3));
    };

    // imaginary action
    f["c20"] = [P](double R, double t, double) {
        return -3 * R * R * P(-1 + t, 2) * t * t * (t + R * (-1 + 2 * t));
    };
    f["c11"] = [P](double R, double t, double) {
        return 2 * R * R * (-1 + t) * t * (R * R * P(1 - 2 * t, 2) + R * t - 2 * t * t);
    };
    f["c02"] = [P](double R, double t, double) {
        return R * R * t *
               (-t * t + R * t * (-1 + 3 * t) + R * R * (2 - 5 * t + 2 * t * t));
    };
    f["c30"] = [P](double R, double t, double) {
        return -5 * P(R, 3) * P(-1 + t, 3) * P(t, 3) *
               (R * (3 - 5 * t) * t * t - 2 * P(t, 3) + 3 * R * R * t * t * (-1 + 2 * t) +
                P(R, 3) * P(-1 + 2 * t, 3));
    };
    f["c21"] = [P](double R, double t, double) {
        return 3 * P(R, 3) * P(-1 + t, 2) * t * t *
               (P(R, 4) * P(1 - 2 * t, 4) + 6 * P(R, 3) * P(1 - 2 * t, 2) * t - 4 * R * P(t, 3) +
                6 * P(t, 4) - 3 * R * R * t * t * (3 - 14 * t + 14 * t * t));
    };
    f["c12"] = [P](double R, double t, double) {
        return 3 * P(R, 3) * (-1 + t) * t * t *
               (R * (3 - 10 * t) * P(t, 3) + 3 * P(t, 4) + P(R, 4) * (-3 + t) * P(-1 + 2 * t, 3) -
                3 * R * R * t * t * (4 - 12 * t + 7 * t * t) +
                3 * P(R, 3) * t * (1 + t - 11 * t * t + 10 * P(t, 3)));
    };
    f["c03"] = [P](double R, double t, double) {
        return P(R, 3) * t * t *
               (2 * R * (3 - 5 * t) * P(t, 3) + P(t, 4) -
                P(R, 4) * P(1 - 2 * t, 2) * (-6 + 4 * t + t * t) +
                3 * R * R * t * t * (-3 + 4 * t + t * t) +
                2 * P(R, 3) * t * (-2 + 18 * t - 33 * t * t + 15 * P(t, 3)));
    };

    // roots in (l,h)
    f["d100"] = [P](double R, double t, double) { return R * (-R * P(1 - 2 * t, 2) + t); };
    f["d010"] = [](double R, double t, double) { return R * (R - t - 2 * R * t); };
    f["d001"] = [](double R, double t, double) { return -2 * R * t; };
    f["d300"] = [P](double R, double t, double) {
        return (-1 + t) * t * t *
               (3 * R * R * P(1 - 2 * t, 2) * t - 3 * R * P(1 - 2 * t, 2) * t * t + P(t, 3) +
                P(R, 3) * P(1 - 2 * t, 2) * (-1 - 4 * t + 4 * t * t));
    };
    f["d210"] = [P](double R, double t, double) {
        return t * (-(-2 + t) * P(t, 4) + R * P(t, 3) * (-5 + 19 * t - 18 * t * t) -
                    P(R, 4) * P(-1 + 2 * t, 3) * (-1 - 4 * t + 4 * t * t) +
                    3 * R * R * t * t * (1 + t - 12 * t * t + 12 * P(t, 3)) +
                    P(R, 3) * t * (1 - 23 * t + 78 * t * t - 84 * P(t, 3) + 24 * P(t, 4)));
    };
    f["d201"] = [P](double R, double t, double) {
        return -2 * (-1 + t) * t * t *
               (2 * P(R, 3) * P(1 - 2 * t, 2) - 3 * R * R * P(1 - 2 * t, 2) * t + P(t, 3));
    };
    f["d120"] = [P](double R, double t, double) {
        return t * (P(R, 5) * P(1 - 2 * t, 4) - P(t, 4) -
                    P(R, 4) * P(1 - 2 * t, 2) * (-2 - 9 * t + 8 * t * t) +
                    R * R * t * t * (3 - 25 * t + 36 * t * t) -
                    P(R, 3) * t * (5 - 27 * t + 24 * t * t + 12 * P(t, 3)) +
                    R * (P(t, 3) - 4 * P(t, 4)));
    };
    f["d111"] = [P](double R, double t, double) {
        return -2 * t *
               (2 * R * (1 - 2 * t) * P(t, 3) + P(t, 4) - P(R, 4) * P(-1 + 2 * t, 3) -
                6 * R * R * t * t * (1 - 3 * t + 2 * t * t) +
                2 * P(R, 3) * (t - 8 * P(t, 3) + 8 * P(t, 4)));
    };
    f["d030"] = [P](double R, double t, double) {
        return R * t *
               (P(t, 3) + P(R, 4) * P(-1 + 2 * t, 3) + R * t * t * (-3 + 7 * t) +
                R * R * t * (3 - 3 * t - 10 * t * t) -
                P(R, 3) * (1 + 3 * t - 12 * t * t + 4 * P(t, 3)));
    };
    f["d021"] = [P](double R, double t, double) {
        return 2 * R * t *
               (2 * R * R * (3 - 4 * t) * t * t + R * (-3 + t) * t * t + 2 * P(t, 3) +
                P(R, 3) * (1 - 3 * t + 4 * P(t, 3)));
    };

    // zeta3 in (l,h)
    f["f10"] = [](double, double t, double) { return -2 * (-1 + t) * t; };
    f["f01"] = [](double R, double t, double) { return -t + R * (-1 + 2 * t); };
    f["f20"] = [P](double R, double t, double) {
        return (-1 + t) * t *
               (2 * P(R, 3) * P(1 - 2 * t, 2) - 3 * R * R * P(1 - 2 * t, 2) * t + P(t, 3));
    };
    f["f11"] = [P](double R, double t, double) {
        return 2 * R * (1 - 2 * t) * P(t, 3) + P(t, 4) - P(R, 4) * P(-1 + 2 * t, 3) -
               6 * R * R * t * t * (1 - 3 * t + 2 * t * t) +
               2 * P(R, 3) * (t - 8 * P(t, 3) + 8 * P(t, 4));
    };
    f["f02"] = [P](double R, double t, double) {
        return -R * (2 * R * R * (3 - 4 * t) * t * t + R * (-3 + t) * t * t + 2 * P(t, 3) +
                     P(R, 3) * (1 - 3 * t + 4 * P(t, 3)));
    };
    f["f30"] = [P](double R, double t, double) {
        return -2 * P(-1 + t, 2) * t *
               (-P(R, 5) * P(1 - 2 * t, 4) + 5 * P(R, 3) * P(1 - 2 * t, 2) * t * t +
                8 * P(R, 4) * P(1 - 2 * t, 2) * (-1 + t) * t * t -
                5 * R * R * P(1 - 2 * t, 2) * P(t, 3) + P(t, 5));
    };
    f["f21"] = [P](double R, double t, double) {
        return -(-1 + t) *
               (6 * R * (1 - 2 * t) * P(t, 5) + 3 * P(t, 6) + P(R, 6) * P(-1 + 2 * t, 5) -
                2 * P(R, 5) * t * P(-1 + 2 * t, 3) * (-4 - 3 * t + 6 * t * t) -
                5 * R * R * P(t, 4) * (5 - 16 * t + 12 * t * t) +
                10 * P(R, 3) * P(t, 3) * (1 + t - 12 * t * t + 12 * P(t, 3)) +
                P(R, 4) * t * t *
                    (15 - 130 * t + 348 * t * t - 344 * P(t, 3) + 96 * P(t, 4)));
    };
    f["f12"] = [P](double R, double t, double) {
        return -P(t, 6) + 4 * R * P(t, 5) * (-2 + 3 * t) -
               P(R, 6) * P(1 - 2 * t, 4) * (-3 + 2 * t * t) +
               R * R * P(t, 4) * (15 - 28 * t + 8 * t * t) +
               2 * P(R, 5) * P(1 - 2 * t, 2) * t * (3 + 12 * t - 29 * t * t + 12 * P(t, 3)) -
               10 * P(R, 3) * P(t, 3) * (-1 + 10 * t - 21 * t * t + 12 * P(t, 3)) +
               P(R, 4) * t * t * (-25 + 140 * t - 222 * t * t + 72 * P(t, 3) + 40 * P(t, 4));
    };
    f["f03"] = [P](double R, double t, double) {
        return -2 * R *
               (-P(t, 5) + 3 * R * P(t, 5) + P(R, 5) * P(-1 + 2 * t, 3) * (-1 - t + t * t) +
                R * R * P(t, 3) * (5 - 18 * t + 11 * t * t) +
                P(R, 3) * t * t * (-5 + 10 * t + 11 * t * t - 18 * P(t, 3)) +
                P(R, 4) * t * t * (10 - 35 * t + 32 * t * t - 4 * P(t, 3)));
    };

    // reduced period, regular part
    f["h10"] = [P](double R, double t, double) {
        return -(-1 + R) *
               (P(R, 4) * P(1 - 2 * t, 4) + P(t, 4) +
                4 * P(R, 3) * P(1 - 2 * t, 2) * t * (-1 + 3 * t) + 4 * R * P(t, 3) * (-1 + 3 * t) +
                2 * R * R * t * t * (3 - 16 * t + 4 * t * t));
    };
    f["h01"] = [P](double R, double t, double r) {
        return r * (P(t, 3) + P(R, 4) * P(-1 + 2 * t, 3) + R * t * t * (-3 + 13 * t) +
                    R * R * t * (3 + 3 * t - 28 * t * t) -
                    P(R, 3) * (1 + 15 * t - 42 * t * t + 16 * P(t, 3)));
    };
    f["h20"] = [P](double R, double t, double r) {
        return -r *
               (P(R, 8) * P(1 - 2 * t, 6) + P(t, 6) - 2 * P(R, 7) * P(1 - 2 * t, 4) * t * (3 + 2 * t) -
                2 * R * P(t, 5) * (3 + 2 * t) + R * R * P(t, 4) * (15 + 4 * t - 49 * t * t) +
                2 * P(R, 3) * P(t, 3) * (-10 + 12 * t + 39 * t * t + 56 * P(t, 3)) +
                P(R, 4) * t * t * (15 - 56 * t + 113 * t * t - 212 * P(t, 3) - 170 * P(t, 4)) +
                P(R, 6) * P(1 - 2 * t, 2) * (1 - 8 * t + 95 * t * t - 164 * P(t, 3) + 46 * P(t, 4)) +
                2 * P(R, 5) * t *
                    (-3 + 22 * t - 134 * t * t + 490 * P(t, 3) - 698 * P(t, 4) + 420 * P(t, 5)));
    };
    f["h11"] = [P](double R, double t, double) {
        return -2 * (-1 + R) *
               (P(t, 7) + P(R, 8) * P(-1 + 2 * t, 7) - R * P(t, 6) * (7 + 3 * t) +
                R * R * P(t, 5) * (21 - 5 * t - 56 * t * t) +
                P(R, 7) * P(-1 + 2 * t, 5) * (1 - 15 * t + 4 * t * t) +
                P(R, 6) * t * P(-1 + 2 * t, 3) * (-7 + 65 * t - 322 * t * t + 224 * P(t, 3)) +
                P(R, 3) * P(t, 4) * (-35 + 71 * t - 130 * t * t + 328 * P(t, 3)) +
                P(R, 4) * P(t, 3) * (35 - 175 * t + 878 * t * t - 1308 * P(t, 3) + 200 * P(t, 4)) +
                3 * P(R, 5) * t * t *
                    (-7 + 65 * t - 436 * t * t + 1112 * P(t, 3) - 1120 * P(t, 4) + 464 * P(t, 5)));
    };
    f["h02"] = [P](double R, double t, double r) {
        return r * (P(R, 8) * P(1 - 2 * t, 6) + P(t, 6) +
                    2 * P(R, 7) * P(1 - 2 * t, 4) * t * (-7 + 2 * t) - 2 * R * P(t, 5) * (3 + 2 * t) +
                    R * R * P(t, 4) * (15 - 4 * t - 57 * t * t) +
                    2 * P(R, 3) * P(t, 3) * (-10 + 28 * t - 237 * t * t + 348 * P(t, 3)) +
                    P(R, 4) * t * t * (15 - 104 * t + 833 * t * t - 1012 * P(t, 3) - 138 * P(t, 4)) +
                    P(R, 6) * P(1 - 2 * t, 2) *
                        (1 - 16 * t - 329 * t * t + 188 * P(t, 3) + 110 * P(t, 4)) -
                    2 * P(R, 5) * t *
                        (3 - 38 * t + 14 * t * t + 886 * P(t, 3) - 1878 * P(t, 4) + 884 * P(t, 5)));
    };

    // reduced period, log part
    f["hL10"] = [](double R, double t, double r) { return (-1 + R) * r * t; };
    f["hL01"] = [](double R, double t, double) {
        return t * t + R * (t - 3 * t * t) + R * R * (-2 + 5 * t - 2 * t * t);
    };
    f["hL20"] = [P](double R, double t, double) {
        return -P(t, 6) + 2 * R * P(t, 5) * (2 + t) - P(R, 6) * P(-1 + 2 * t, 5) -
               R * R * P(t, 4) * (5 + 2 * t + 8 * t * t) +
               P(R, 3) * P(t, 4) * (13 - 18 * t + 25 * t * t) +
               P(R, 5) * P(1 - 2 * t, 2) * t * (-4 + 19 * t - 26 * t * t + 17 * P(t, 3)) +
               P(R, 4) * t * t * (5 - 38 * t + 68 * t * t - 34 * P(t, 3) - 16 * P(t, 4));
    };
    f["hL11"] = [P](double R, double t, double r) {
        return -2 * (-1 + R) * r * t *
               (-P(t, 4) + 2 * R * P(t, 3) * (-1 + 3 * t) + P(R, 4) * P(-1 + 2 * t, 3) * (-5 + 4 * t) +
                2 * R * R * t * t * (6 - 11 * t + 2 * t * t) +
                2 * P(R, 3) * t * (-7 + 25 * t - 28 * t * t + 12 * P(t, 3)));
    };
    f["hL02"] = [P](double R, double t, double r) {
        return -r * r *
               (4 * R * (2 - 3 * t) * P(t, 3) + P(t, 4) + 2 * R * R * t * t * (-6 + 8 * t + t * t) -
                P(R, 4) * P(1 - 2 * t, 2) * (-7 + 4 * t + 2 * t * t) +
                P(R, 3) * t * (-4 + 43 * t - 82 * t * t + 39 * P(t, 3)));
    };

    // r_C in (l,j)
    f["u20"] = [](double R, double t, double) {
        return -R * (-3 + t) * t - t * t - R * R * (2 - 7 * t + 6 * t * t);
    };
    f["u11"] = [](double R, double t, double r) { return 2 * (-1 + R) * r * t; };
    f["u02"] = [](double R, double t, double) {
        return t * t + R * (t - 3 * t * t) + R * R * (-2 + 5 * t - 2 * t * t);
    };
    f["u60"] = [P](double R, double t, double) {
        return P(R * (-3 + t) * t + t * t + R * R * (2 - 7 * t + 6 * t * t), 2);
    };
    f["u51"] = [P](double R, double t, double r) {
        return 4 * r * t * t * (P(R, 3) * (1 - 2 * t) + t + 3 * R * R * t - R * (1 + 2 * t));
    };
    f["u42"] = [P](double R, double t, double) {
        return -6 * t * t *
               (P(R, 3) * (6 - 10 * t) + P(R, 4) * P(1 - 2 * t, 2) + t * t - 2 * R * t * (1 + t) +
                R * R * (1 + 5 * t * t));
    };
    f["u33"] = [](double R, double t, double r) {
        return 4 * (-1 + R) * r * t *
               (t * t + R * t * (-7 + 5 * t) + R * R * (6 - 19 * t + 14 * t * t));
    };
    f["u24"] = [P](double R, double t, double) {
        return P(t, 4) + 2 * R * P(t, 3) * (-7 + 5 * t) +
               P(R, 4) * P(1 - 2 * t, 2) * (-12 + 12 * t + t * t) +
               R * R * t * t * (13 - 12 * t + 5 * t * t) -
               2 * P(R, 3) * t * (-6 + 69 * t - 127 * t * t + 66 * P(t, 3));
    };
    f["u15"] = [](double R, double t, double r) {
        return 24 * (-1 + R) * R * r * (-1 + t) * t * (t + R * (-1 + 2 * t));
    };
    f["u06"] = [P](double R, double t, double) {
        return 8 * R * (-1 + t) *
               (R * R * (7 - 9 * t) * t * t + R * (-3 + t) * t * t + 2 * P(t, 3) +
                P(R, 3) * (1 - 3 * t + 4 * P(t, 3)));
    };

    // zeta1 in (l,j); s = sqrt(R)
    f["alpha100"] = [](double, double, double r) { return r; };
    f["alpha010"] = [](double R, double t, double) { return R - t - 2 * R * t; };
    f["alpha001"] = [](double R, double t, double) { return -2 * std::sqrt(R) * t; };
    f["alpha300"] = [](double, double, double) { return 0.0; };
    f["alpha210"] = [P](double R, double t, double) {
        return t * (P(t, 3) + P(R, 4) * P(-1 + 2 * t, 3) + R * t * t * (-3 + 5 * t) +
                    R * R * t * (3 - 5 * t - 4 * t * t) + P(R, 3) * (-1 + t + 2 * t * t));
    };
    f["alpha120"] = [P](double R, double t, double r) {
        return (-1 + R) * r * t * P(t + R * (-1 + 2 * t), 2);
    };
    f["alpha030"] = [](double, double, double) { return 0.0; };
    f["alpha201"] = [P](double R, double t, double) {
        return std::sqrt(R) * t * t *
               (R * R * (1 - 2 * t) + P(R, 3) * P(1 - 2 * t, 2) + R * (-2 + t) * t + t * t);
    };
    f["alpha111"] = [](double R, double t, double r) {
        return 2 * (-1 + R) * std::sqrt(R) * r * t * t * (t + R * (-1 + 2 * t));
    };
    f["alpha021"] = [P](double R, double t, double) {
        return std::sqrt(R) * t * t *
               (3 * P(R, 3) * P(1 - 2 * t, 2) + 3 * R * (-2 + t) * t + 3 * t * t +
                R * R * (3 + 2 * t - 8 * t * t));
    };

    // zeta3 in (l,j)
    f["gamma10"] = [](double R, double t, double r) { return r * (-R + t); };
    f["gamma01"] = [](double R, double t, double) {
        return R * R - 2 * R * R * t + (-1 + 2 * R) * t * t;
    };
    f["gamma20"] = [P](double R, double t, double) {
        return t * (P(R, 3) * P(1 - 2 * t, 2) * (-5 + t) * t + P(t, 4) - R * P(t, 3) * (3 + t) +
                    P(R, 4) * P(1 - 2 * t, 2) * (2 - 5 * t + 4 * t * t) +
                    R * R * t * t * (5 - 7 * t + 8 * t * t));
    };
    f["gamma11"] = [P](double R, double t, double r) {
        return -2 * (-1 + R) * r * t * t *
               (2 * R * (-2 + t) * t + t * t + R * R * (3 - 10 * t + 8 * t * t));
    };
    f["gamma02"] = [P](double R, double t, double) {
        return t * (R * (7 - 3 * t) * P(t, 3) - P(t, 4) + R * R * t * t * (-9 + 11 * t - 8 * t * t) +
                    P(R, 3) * t * (1 + 15 * t - 40 * t * t + 28 * P(t, 3)) +
                    P(R, 4) * (2 - 7 * t + 20 * P(t, 3) - 16 * P(t, 4)));
    };
    f["gamma30"] = [P](double R, double t, double) {
        return (-1 + R) * t *
               (-P(t, 5) + P(R, 5) * P(1 - 2 * t, 4) * (-3 + 2 * t) + R * P(t, 4) * (1 + 2 * t) +
                2 * R * R * P(t, 3) * (3 - 8 * t + 4 * t * t) +
                P(R, 4) * P(1 - 2 * t, 2) * t * (11 - 20 * t + 12 * t * t) +
                2 * P(R, 3) * t * t * (-7 + 26 * t - 28 * t * t + 8 * P(t, 3)));
    };
    f["gamma21"] = [P](double R, double t, double r) {
        return R * r * (-1 + t) *
               (-P(t, 4) - 3 * R * P(t, 4) + P(R, 4) * (-3 + 2 * t) * P(-1 + 2 * t, 3) +
                2 * R * R * t * t * (3 - 22 * t + 23 * t * t) +
                P(R, 3) * t * (-8 + 67 * t - 142 * t * t + 80 * P(t, 3)));
    };
    f["gamma12"] = [P](double R, double t, double) {
        return (-1 + R) * t *
               (-3 * P(t, 5) + P(R, 5) * P(1 - 2 * t, 4) * (-13 + 10 * t) +
                R * P(t, 4) * (-1 + 10 * t) + 2 * R * R * P(t, 3) * (17 - 48 * t + 28 * t * t) +
                P(R, 4) * P(1 - 2 * t, 2) * t * (49 - 108 * t + 68 * t * t) +
                2 * P(R, 3) * t * t * (-33 + 138 * t - 148 * t * t + 40 * P(t, 3)));
    };
    f["gamma03"] = [P](double R, double t, double r) {
        return -r * (-2 * P(t, 5) + R * P(t, 4) * (-5 + 11 * t) +
                     P(R, 5) * P(-1 + 2 * t, 3) * (-3 - 5 * t + 6 * t * t) +
                     R * R * P(t, 3) * (24 - 75 * t + 47 * t * t) +
                     2 * P(R, 3) * t * t * (-11 + 21 * t + 23 * t * t - 35 * P(t, 3)) +
                     P(R, 4) * t * (2 + 35 * t - 141 * t * t + 142 * P(t, 3) - 32 * P(t, 4)));
    };

    // modulus in (l,j)
    f["delta300"] = [](double, double, double) { return 0.0; };
    f["delta210"] = [P](double R, double t, double r) {
        return r * (R * (5 - 13 * t) * P(t, 4) - P(t, 5) - P(R, 6) * P(-1 + 2 * t, 5) +
                    P(R, 5) * P(-1 + 2 * t, 3) * (-1 - 15 * t + 8 * t * t) +
                    R * R * P(t, 3) * (-10 + 27 * t + 24 * t * t) -
                    2 * P(R, 3) * t * t * (-5 + 2 * t + 17 * t * t + 18 * P(t, 3)) +
                    P(R, 4) * t * (-5 - 20 * t + 106 * t * t - 144 * P(t, 3) + 104 * P(t, 4)));
    };
    f["delta120"] = [P](double R, double t, double r) {
        return (-1 + R) * P(r, 4) *
               (R * R * P(1 - 2 * t, 2) + t * t + 2 * R * t * (-1 + 6 * t));
    };
    f["delta030"] = [](double, double, double) { return 0.0; };
    f["delta201"] = [P](double R, double t, double r) {
        return 16 * std::pow(R, 2.5) * P(r, 3) * (-1 + t) * t * t;
    };
    f["delta111"] = [](double, double, double) { return 0.0; };
    f["delta021"] = [P](double R, double t, double r) {
        return -16 * std::pow(R, 2.5) * P(r, 3) * (-1 + t) * t * t;
    };

    // rotation number
    f["v10"] = [P](double R, double t, double) {
        return P(t, 4) * (1 + 2 * t) + R * P(t, 3) * (-4 + 13 * t - 21 * t * t) -
               P(R, 4) * P(-1 + 2 * t, 3) * (1 - 9 * t + 5 * t * t) +
               R * R * t * t * (6 - 47 * t + 61 * t * t - 2 * P(t, 3)) +
               P(R, 3) * t * (-4 + 47 * t - 143 * t * t + 172 * P(t, 3) - 84 * P(t, 4));
    };
    f["v01"] = [P](double R, double t, double r) {
        return r * (P(t, 3) + R * t * t * (-3 + 25 * t - 25 * t * t) +
                    P(R, 3) * P(1 - 2 * t, 2) * (-1 - 9 * t + 9 * t * t) +
                    R * R * t * (3 - 20 * t + 20 * t * t));
    };
    f["vL10"] = [](double R, double t, double r) { return r * (2 * t + R * (-1 + 2 * t)); };
    f["vL01"] = [P](double R, double t, double) {
        return R * R * P(1 - 2 * t, 2) + R * t - 2 * t * t;
    };

    // dS/dl
    f["mu10"] = [P](double R, double t, double) {
        return (t + R * (-1 + 2 * t)) *
               (P(t, 3) + P(R, 4) * P(-1 + 2 * t, 3) + R * t * t * (-3 + 5 * t) +
                3 * R * R * t * (1 - 7 * t + 4 * t * t) +
                P(R, 3) * (-1 + 17 * t - 46 * t * t + 32 * P(t, 3)));
    };
    f["mu01"] = [P](double R, double t, double r) {
        return (-1 + R) * r *
               (P(t, 3) + P(R, 3) * P(-1 + 2 * t, 3) + R * t * t * (-3 + 14 * t) +
                R * R * t * (3 - 20 * t + 28 * t * t));
    };

    // dS/dj
    f["kappa10"] = [P](double R, double t, double r) {
        return (-1 + R) * r * (R * R * P(1 - 2 * t, 2) + t * t + 2 * R * t * (-1 + 6 * t));
    };
    f["kappa01"] = [P](double R, double t, double) {
        return P(t, 3) + P(R, 4) * P(-1 + 2 * t, 3) + R * t * t * (-3 + 13 * t) +
               R * R * t * (3 + 3 * t - 28 * t * t) -
               P(R, 3) * (1 + 15 * t - 42 * t * t + 16 * P(t, 3));
    };
    f["kappa20"] = [P](double R, double t, double) {
        return -P(R, 8) * P(1 - 2 * t, 6) + 6 * P(R, 7) * P(1 - 2 * t, 4) * t + 6 * R * P(t, 5) -
               P(t, 6) + 3 * R * R * P(t, 4) * (-5 + 4 * t + 3 * t * t) +
               2 * P(R, 3) * P(t, 3) * (10 - 24 * t + 9 * t * t - 26 * P(t, 3)) -
               3 * P(R, 4) * t * t * (5 - 24 * t + 59 * t * t - 76 * P(t, 3) + 2 * P(t, 4)) -
               P(R, 6) * P(1 - 2 * t, 2) * (1 - 8 * t + 87 * t * t - 148 * P(t, 3) + 62 * P(t, 4)) +
               2 * P(R, 5) * t *
                   (3 - 24 * t + 134 * t * t - 438 * P(t, 3) + 570 * P(t, 4) - 276 * P(t, 5));
    };
    f["kappa11"] = [P](double R, double t, double r) {
        return 2 * (-1 + R) * r *
               (R * (-5 + t) * P(t, 4) + P(t, 5) + P(R, 6) * P(-1 + 2 * t, 5) +
                R * R * P(t, 3) * (10 - 15 * t - 16 * t * t) +
                P(R, 5) * P(-1 + 2 * t, 3) * (1 - 9 * t + 4 * t * t) +
                2 * P(R, 3) * t * t * (-5 + 20 * t - 99 * t * t + 108 * P(t, 3)) +
                P(R, 4) * t * (5 - 40 * t + 274 * t * t - 596 * P(t, 3) + 336 * P(t, 4)));
    };
    f["kappa02"] = [P](double R, double t, double) {
        return P(R, 8) * P(1 - 2 * t, 6) - 6 * P(R, 7) * P(1 - 2 * t, 4) * t - 6 * R * P(t, 5) +
               P(t, 6) + R * R * P(t, 4) * (15 - 12 * t - 17 * t * t) +
               2 * P(R, 3) * P(t, 3) * (-10 + 24 * t - 177 * t * t + 210 * P(t, 3)) +
               3 * P(R, 4) * t * t * (5 - 24 * t + 195 * t * t - 236 * P(t, 3) + 10 * P(t, 4)) +
               P(R, 6) * P(1 - 2 * t, 2) * (1 - 8 * t - 201 * t * t + 76 * P(t, 3) + 118 * P(t, 4)) -
               2 * P(R, 5) * t *
                   (3 - 24 * t + 22 * t * t + 570 * P(t, 3) - 1278 * P(t, 4) + 660 * P(t, 5));
    };

    return f;
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("coefficient transcription against a second typing") {
    const auto copy = retyped_tables();
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> uR(0.3, 2.7), ut(0.05, 0.95), ur(0.2, 1.8);
    // e/beta families are +-d/alpha; check d, alpha here and the sign
    // relations separately below
    for (int rep = 0; rep < 3; ++rep) {
        const coeffs::TableContext ctx{uR(rng), ut(rng), ur(rng)};
        for (const auto& [name, fn] : copy) {
            const double a = coeffs::eval(name, ctx);
            const double b = fn(ctx.R, ctx.t, ctx.rA);
            INFO("coefficient ", name);
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
    }
}

TEST_CASE("printed sign relations between the root families") {
    const struct {
        const char* lhs;
        const char* rhs;
        double sign;
    } rel[] = {{"e100", "d100", 1},  {"e010", "d010", 1},  {"e001", "d001", -1},
               {"e300", "d300", -1}, {"e210", "d210", -1}, {"e201", "d201", 1},
               {"e120", "d120", -1}, {"e111", "d111", 1},  {"e030", "d030", -1},
               {"e021", "d021", 1},  {"beta100", "alpha100", 1},
               {"beta010", "alpha010", 1}, {"beta001", "alpha001", -1},
               {"beta210", "alpha210", -1}, {"beta120", "alpha120", -1},
               {"beta201", "alpha201", 1}, {"beta111", "alpha111", 1},
               {"beta021", "alpha021", 1}};
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> uR(0.3, 2.7), ut(0.05, 0.95), ur(0.2, 1.8);
    for (int i = 0; i < 100; ++i) {
        const coeffs::TableContext ctx{uR(rng), ut(rng), ur(rng)};
        for (const auto& r : rel) {
            CHECK(coeffs::eval(r.lhs, ctx) ==
                  doctest::Approx(r.sign * coeffs::eval(r.rhs, ctx)).epsilon(1e-12));
        }
    }
}

TEST_CASE("data file interface") {
    CHECK(coeffs::has("a20"));
    CHECK(coeffs::has("kappa02"));
    CHECK_FALSE(coeffs::has("zz99"));
    CHECK(coeffs::names().size() > 100);
    CHECK(coeffs::eval_expression("2*(3 - 1)^2 - R", {1.0, 0.0, 0.0}) == doctest::Approx(7.0));
    CHECK(coeffs::eval_expression("-t^3 + rA*sqrtR", {4.0, 2.0, 3.0}) ==
          doctest::Approx(-8.0 + 6.0));
}

TEST_CASE("birkhoff normal form") {
    const ModelParams p(1.0, 2.0, 0.5);
    const double ra = discriminant_root(p).rA;

    CHECK(se::birkhoff(0.0, 0.0, p) == 0.0);
    // coefficient of j is the real part of the focus-focus eigenvalue rA/2R
    const auto bnf = se::birkhoff_coefficients(p);
    CHECK(bnf.at(0, 1) == doctest::Approx(ra / (2.0 * p.ratio())).epsilon(1e-14));
    CHECK(bnf.at(1, 0) == doctest::Approx(0.5 / (2.0 * p.ratio())).epsilon(1e-14));

    // oracle: solve j = J(l,h) for h by bisection and compare
    const double l = 0.1, j = 0.0;
    double lo = -0.05, hi = 0.05;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (abelian::imaginary_action({l, mid}, p) < j ? lo : hi) = mid;
    }
    const double h_oracle = 0.5 * (lo + hi);
    CHECK(se::birkhoff(l, j, p) == doctest::Approx(h_oracle).epsilon(2e-5));
    // linear part alone is 0.0125 there
    CHECK(bnf.at(1, 0) * l == doctest::Approx(0.0125).epsilon(1e-14));
}

TEST_CASE("series inversion") {
    const ModelParams p(1.0, 2.0, 0.5);
    // inverting the J expansion reproduces the Birkhoff coefficients
    const auto inv = se::invert_series(se::j_series_coefficients(p));
    const auto bnf = se::birkhoff_coefficients(p);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            INFO("coefficient (", i, ",", j, ")");
            CHECK(inv.at(i, j) == doctest::Approx(bnf.at(i, j)).epsilon(1e-10));
        }

    // identity inverts to itself
    se::BivariateSeries id;
    id.at(0, 1) = 1.0;
    const auto idinv = se::invert_series(id);
    CHECK(idinv.at(0, 1) == doctest::Approx(1.0));
    CHECK(idinv.at(1, 1) == doctest::Approx(0.0));

    // involution on a quadratic series
    se::BivariateSeries s;
    s.at(0, 1) = 1.7;
    s.at(1, 0) = -0.3;
    s.at(2, 0) = 0.4;
    s.at(1, 1) = -0.8;
    s.at(0, 2) = 0.25;
    const auto twice = se::invert_series(se::invert_series(s));
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            CHECK(twice.at(i, j) == doctest::Approx(s.at(i, j)).epsilon(1e-12));

    se::BivariateSeries bad;  // zero linear part
    CHECK_THROWS_AS(se::invert_series(bad), NonInvertibleLinearPart);
}

TEST_CASE("series against the quadrature layer") {
    const ModelParams p(1.0, 2.0, 0.5);
    const double ra = discriminant_root(p).rA;

    // J series linear anchor at (0, 0.01)
    CHECK(se::imaginary_action_series(0.0, 0.01, p, 1) ==
          doctest::Approx(0.0302371578).epsilon(1e-8));

    // order-halving residual of the J series at order 2 is ~ 8
    auto resid = [&](double e) {
        return std::abs(se::imaginary_action_series(0.6 * e, 0.8 * e, p, 2) -
                        abelian::imaginary_action({0.6 * e, 0.8 * e}, p));
    };
    CHECK(resid(2e-3) / resid(1e-3) == doctest::Approx(8.0).epsilon(0.15));

    // period and rotation expansions at |w| = 1e-3; the rotation series
    // carries the smooth-continuation branch, which sits half a unit above
    // the principal reduction inside the wedge h > A(l) (l > 0) and half a
    // unit below outside it
    double worstT = 0.0, worstW = 0.0;
    for (int k = 0; k < 12; ++k) {
        const double phi = 2.0 * kPi * (k + 0.25) / 12.0;
        const double l = 1e-3 * std::cos(phi), j = 1e-3 * std::sin(phi);
        const double h = se::birkhoff(l, j, p);
        worstT = std::max(worstT, std::abs(se::period_series(l, j, p) -
                                           abelian::period({l, h}, p)));
        const double wp = abelian::rotation_number({l, h}, p) +
                          ((l > 0.0 && h * p.ratio() < l * p.t) ? 1.0 : 0.0);  // principal
        const double chi = (l > 0.0 && h >= p.t * l / p.ratio()) ? 1.0 : -1.0;
        worstW = std::max(worstW,
                          std::abs(se::rotation_series(l, j, p) - (wp + 0.5 * chi)));
    }
    CHECK(worstT < 1e-7);
    CHECK(worstW < 1e-4);

    // T^alpha and W^alpha series anchors at the origin
    CHECK(se::imaginary_period_series(0, 0, p) ==
          doctest::Approx(4.0 * kPi * p.ratio() / ra).epsilon(1e-14));
    CHECK(se::imaginary_rotation_series(0, 0, p) ==
          doctest::Approx(-0.5 / ra).epsilon(1e-14));
    // W^alpha leading term is (minus) the ratio of imaginary to real part
    // of the eigenvalue: (R+t-2Rt)/(2R) over rA/(2R)
    CHECK(std::abs(se::imaginary_rotation_series(0, 0, p)) ==
          doctest::Approx(((p.ratio() + p.t - 2.0 * p.ratio() * p.t) / (2.0 * p.ratio())) /
                          (ra / (2.0 * p.ratio()))).epsilon(1e-14));

    // dS series against the numeric partials (validates the mu and kappa
    // tables); both sides are the smooth derivative of the invariant.  The
    // l-series is printed to linear order, so its residual is quadratic:
    // halving |w| divides it by ~4.
    auto worst_on_ring = [&](double rad) {
        double wl = 0.0, wj = 0.0;
        for (int k = 0; k < 8; ++k) {
            const double phi = 2.0 * kPi * (k + 0.3) / 8.0;
            const double l = rad * std::cos(phi), j = rad * std::sin(phi);
            const auto d = taylor::partials_numeric(l, j, p);
            wl = std::max(wl, std::abs(se::dS_dl_series(l, j, p) - d.dS_dl));
            wj = std::max(wj, std::abs(se::dS_dj_series(l, j, p) - d.dS_dj));
        }
        return std::pair<double, double>(wl, wj);
    };
    const auto [l1, j1] = worst_on_ring(1e-3);
    const auto [l2, j2] = worst_on_ring(5e-4);
    CHECK(l1 < 2e-3);
    CHECK(j1 < 1e-6);  // printed through quadratic order
    CHECK(l1 / l2 == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("modulus and rC expansions") {
    const ModelParams p(1.0, 2.0, 0.5);
    const double ra = discriminant_root(p).rA;
    const double R = p.ratio(), t = p.t;

    // leading deviation of k^2 from 1 depends only on |w|
    const double w = 1e-4;
    const double lead = 4.0 * std::pow(R, 1.5) * (-1.0 + t) * t * t / std::pow(ra, 3) * w;
    for (double phi : {0.3, 1.2, 2.8, 4.4}) {
        const double dk = se::modulus_series(w * std::cos(phi), w * std::sin(phi), p) - 1.0;
        CHECK(dk == doctest::Approx(lead).epsilon(2e-4));
    }
    // against the root-based modulus at h = B(l,j)
    const double l = 5e-4, j = -3e-4;
    const double h = se::birkhoff(l, j, p);
    const auto z = reduced::solve_roots({l, h}, p);
    const double k2 = (z.zeta3 - z.zeta2) / (z.zeta3 - z.zeta1);
    CHECK(se::modulus_series(l, j, p) == doctest::Approx(k2).epsilon(1e-6));

    // rC leading term rA |w| / (2 sqrt(R))
    CHECK(se::rC_series(l, j, p) ==
          doctest::Approx(ra / (2.0 * std::sqrt(R)) * std::hypot(l, j)).epsilon(2e-3));
}

TEST_SUITE_END();
