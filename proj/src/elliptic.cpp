#include "semitoric/elliptic.hpp"

#include <cmath>
#include <numbers>

namespace semitoric::elliptic {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kAgmTol = 1e-15;          // relative step; AGM converges quadratically
constexpr double kNearOneSwitch = 1e-6;    // k'^2 below which the log expansion takes over
}  // namespace

EllipticModulus EllipticModulus::from_k(double k) {
    if (!(k >= 0.0) || k >= 1.0) throw ModulusOutOfRange("modulus k must lie in [0,1)");
    return {k, (1.0 - k) * (1.0 + k)};
}

EllipticModulus EllipticModulus::from_k_sq(double k_sq) {
    if (!(k_sq >= 0.0) || k_sq >= 1.0) throw ModulusOutOfRange("k^2 must lie in [0,1)");
    return {std::sqrt(k_sq), 1.0 - k_sq};
}

EllipticModulus EllipticModulus::from_k_prime_sq(double kp_sq) {
    if (!(kp_sq > 0.0) || kp_sq > 1.0) throw ModulusOutOfRange("k'^2 must lie in (0,1]");
    return {std::sqrt(std::max(0.0, 1.0 - kp_sq)), kp_sq};
}

Characteristic characteristic(double n, const EllipticModulus& m) {
    if (n < 0.0) return {n, CircularRegime::Negative};
    if (n > m.k_sq() && n < 1.0) return {n, CircularRegime::Positive};
    throw RegimeViolation("characteristic n outside the circular cases");
}

double complete_K(const EllipticModulus& m) {
    if (m.k_prime_sq < kNearOneSwitch) return complete_K_near_one(m.k_prime_sq);
    double a = 1.0, b = std::sqrt(m.k_prime_sq);
    while (std::abs(a - b) > kAgmTol * a) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (a + b);
}

double complete_E(const EllipticModulus& m) {
    if (m.k_prime_sq == 0.0) return 1.0;
    // AGM with the c_n = (a_n - b_n)/2 sum: E = K (1 - sum 2^{n-1} c_n^2).
    double a = 1.0, b = std::sqrt(m.k_prime_sq);
    double sum = 0.5 * m.k * m.k;  // 2^{-1} c_0^2 with c_0 = k
    double pow2 = 0.5;
    while (std::abs(a - b) > kAgmTol * a) {
        const double c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    const double K = kPi / (a + b);
    return K * (1.0 - sum);
}

double carlson_rf(double x, double y, double z) {
    // Carlson's duplication algorithm, double precision tolerances.
    double a0 = (x + y + z) / 3.0;
    double xn = x, yn = y, zn = z, an = a0, q;
    {
        const double m = std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
        q = std::pow(3.0 * 1e-16, -1.0 / 6.0) * m;
    }
    double f = 1.0;
    while (q > std::abs(an) * f) {
        const double sx = std::sqrt(xn), sy = std::sqrt(yn), sz = std::sqrt(zn);
        const double lam = sx * sy + sy * sz + sz * sx;
        xn = 0.25 * (xn + lam);
        yn = 0.25 * (yn + lam);
        zn = 0.25 * (zn + lam);
        an = 0.25 * (an + lam);
        f *= 4.0;
    }
    const double X = (a0 - x) / (an * f), Y = (a0 - y) / (an * f), Z = -X - Y;
    const double E2 = X * Y - Z * Z, E3 = X * Y * Z;
    return (1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0) / std::sqrt(an);
}

double carlson_rd(double x, double y, double z) {
    double a0 = (x + y + 3.0 * z) / 5.0;
    double xn = x, yn = y, zn = z, an = a0;
    double q;
    {
        const double m = std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
        q = std::pow(0.25 * 1e-16, -1.0 / 6.0) * m;
    }
    double f = 1.0, s = 0.0;
    while (q > std::abs(an) * f) {
        const double sx = std::sqrt(xn), sy = std::sqrt(yn), sz = std::sqrt(zn);
        const double lam = sx * sy + sy * sz + sz * sx;
        s += 1.0 / (f * sz * (zn + lam));
        xn = 0.25 * (xn + lam);
        yn = 0.25 * (yn + lam);
        zn = 0.25 * (zn + lam);
        an = 0.25 * (an + lam);
        f *= 4.0;
    }
    const double X = (a0 - x) / (an * f), Y = (a0 - y) / (an * f), Z = -(X + Y) / 3.0;
    const double E2 = X * Y - 6.0 * Z * Z;
    const double E3 = (3.0 * X * Y - 8.0 * Z * Z) * Z;
    const double E4 = 3.0 * (X * Y - Z * Z) * Z * Z;
    const double E5 = X * Y * Z * Z * Z;
    const double series = 1.0 - 3.0 * E2 / 14.0 + E3 / 6.0 + 9.0 * E2 * E2 / 88.0 -
                          3.0 * E4 / 22.0 - 9.0 * E2 * E3 / 52.0 + 3.0 * E5 / 26.0;
    return 3.0 * s + series / (f * an * std::sqrt(an));
}

double incomplete_F(double phi, const EllipticModulus& m) {
    const double s = std::sin(phi), c = std::cos(phi);
    return s * carlson_rf(c * c, 1.0 - m.k_sq() * s * s, 1.0);
}

double incomplete_E(double phi, const EllipticModulus& m) {
    const double s = std::sin(phi), c = std::cos(phi);
    const double y = 1.0 - m.k_sq() * s * s;
    return s * carlson_rf(c * c, y, 1.0) -
           m.k_sq() * s * s * s * carlson_rd(c * c, y, 1.0) / 3.0;
}

double heuman_lambda(double theta, const EllipticModulus& m) {
    if (m.k_prime_sq < kNearOneSwitch) return heuman_lambda_near_one(theta, m.k_prime_sq);
    const EllipticModulus comp = EllipticModulus::from_k_sq(m.k_prime_sq);
    const double K = complete_K(m), E = complete_E(m);
    const double Fc = incomplete_F(theta, comp), Ec = incomplete_E(theta, comp);
    return 2.0 / kPi * (E * Fc + K * Ec - K * Fc);
}

double complete_Pi(const Characteristic& ch, const EllipticModulus& m) {
    const double n = ch.n, k2 = m.k_sq();
    const double K = complete_K(m);
    if (ch.regime == CircularRegime::Positive) {
        // k^2 < n < 1:  Pi = K + pi/2 sqrt(n/((1-n)(n-k^2))) (1 - L0(theta,k)),
        // theta = arcsin sqrt((1-n)/(1-k^2)).
        const double theta = std::asin(std::sqrt((1.0 - n) / m.k_prime_sq));
        const double d = std::sqrt(n / ((1.0 - n) * (n - k2)));
        return K + 0.5 * kPi * d * (1.0 - heuman_lambda(theta, m));
    }
    // n < 0:  Pi = K/(1-n) + pi/2 sqrt(-n/((1-n)(k^2-n))) (1 - L0(theta,k)),
    // theta = arcsin(1/sqrt(1-n)).
    const double theta = std::asin(1.0 / std::sqrt(1.0 - n));
    const double d = std::sqrt(-n / ((1.0 - n) * (k2 - n)));
    return K / (1.0 - n) + 0.5 * kPi * d * (1.0 - heuman_lambda(theta, m));
}

double complete_K_near_one(double kp_sq) {
    const double m1 = -kp_sq;  // k^2 - 1
    const double lg = std::log(kp_sq / 16.0);
    const double reg = m1 / 4.0 - 21.0 / 128.0 * m1 * m1 + 185.0 / 1536.0 * m1 * m1 * m1;
    const double lgc = -0.5 + m1 / 8.0 - 9.0 / 128.0 * m1 * m1 - 25.0 / 512.0 * m1 * m1 * m1;
    return reg + lg * lgc;
}

double heuman_lambda_near_one(double theta, double kp_sq) {
    const double m1 = -kp_sq;
    const double s = std::sin(theta), c = std::cos(theta);
    const double lg = std::log(kp_sq / 16.0);
    const double reg = m1 / (2.0 * kPi) - (13.0 / (32.0 * kPi) + 3.0 * s * s / (16.0 * kPi)) * m1 * m1;
    const double lgc = m1 / (2.0 * kPi) - (3.0 / (16.0 * kPi) + s * s / (8.0 * kPi)) * m1 * m1;
    return 2.0 / kPi * theta + s * c * (reg + lg * lgc);
}

}  // namespace semitoric::elliptic
