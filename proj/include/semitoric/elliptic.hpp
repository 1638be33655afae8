#pragma once

#include "semitoric/errors.hpp"

namespace semitoric::elliptic {

/// Elliptic modulus k with the complement k'^2 = 1 - k^2 carried explicitly,
/// so that values extremely close to k = 1 do not lose the complement to
/// cancellation.
struct EllipticModulus {
    double k;
    double k_prime_sq;

    static EllipticModulus from_k(double k);
    static EllipticModulus from_k_sq(double k_sq);
    // Preferred near k = 1: the complement is the exact input.
    static EllipticModulus from_k_prime_sq(double kp_sq);

    double k_sq() const { return 1.0 - k_prime_sq; }
};

enum class CircularRegime { Positive, Negative };  // k^2 < n < 1 resp. n < 0

struct Characteristic {
    double n;
    CircularRegime regime;
};

// Classifies n against the modulus; throws RegimeViolation outside the
// circular cases (n in [0, k^2] or n >= 1).
Characteristic characteristic(double n, const EllipticModulus& m);

// Complete integrals.  K uses the AGM; below k'^2 = 1e-6 it switches to the
// logarithmic expansion to keep full accuracy in the complement.
double complete_K(const EllipticModulus& m);
double complete_E(const EllipticModulus& m);

// Complete third kind via the Heuman lambda reduction (circular cases only).
double complete_Pi(const Characteristic& n, const EllipticModulus& m);

// Incomplete first/second kind via Carlson symmetric forms.
double incomplete_F(double phi, const EllipticModulus& m);
double incomplete_E(double phi, const EllipticModulus& m);

// Heuman's lambda  L0(theta,k) = 2/pi (E F' + K E' - K F'), with the
// complementary-argument incomplete integrals F' = F(theta,k'), etc.
double heuman_lambda(double theta, const EllipticModulus& m);

// Near-degenerate expansions in powers of (k^2 - 1) with log(k'^2/16)
// prefactors; truncation error O((k'^2)^3 log k'^2).
double complete_K_near_one(double k_prime_sq);
double heuman_lambda_near_one(double theta, double k_prime_sq);

// Carlson R_F and R_D, exposed for reuse and direct testing.
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);

}  // namespace semitoric::elliptic
