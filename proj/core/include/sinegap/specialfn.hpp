#pragma once

#include "sinegap/types.hpp"

namespace sinegap::specialfn {

// Complete elliptic integrals of the first and second kind, modulus convention:
//   K(k) = int_0^1 dt / sqrt((1-t^2)(1-k^2 t^2))
//   E(k) = int_0^1 sqrt((1-k^2 t^2)/(1-t^2)) dt
// Both are evaluated by the arithmetic-geometric mean, which reaches full
// double precision in a handful of iterations.
struct EllipticPair {
  double k = 0.0;
  double K_val = 0.0;
  double E_val = 0.0;
};

double elliptic_K(double k);  // 0 <= k < 1
double elliptic_E(double k);  // 0 <= k <= 1
EllipticPair elliptic_KE(double k);

// Third Jacobi theta function theta(z|tau) = sum_k exp(i pi k^2 tau + 2 pi i k z)
// on the line tau = i*tau_im, tau_im > 0, evaluated for real z:
//   theta3(z, t) = 1 + 2 sum_{k>=1} exp(-pi t k^2) cos(2 pi k z).
// For tau_im < 1 the imaginary modular transformation is applied first, so the
// evaluated series always contracts at ratio <= exp(-pi).
struct ThetaArgs {
  double z = 0.0;
  double tau_im = 0.0;  // the value -i*tau, must be positive
};

double theta3(const ThetaArgs& args);
double theta3(double z, double tau_im);
double ln_theta3(double z, double tau_im);  // log of theta3, safe against underflow

// ln[G(1 + iv/pi) G(1 - iv/pi)] for the Barnes G-function; real-valued by
// conjugate symmetry. Accurate to ~1e-12 absolute for v <= 50.
double ln_barnes_g_pair(double v);

// ln A(v) = 2 ln[G(1+iv/pi)G(1-iv/pi)] - (v^2/pi^2)(3 - 2 ln(v/pi)), v > 0.
double ln_A(double v);

// ln c0 = (1/12) ln 2 + 3 zeta'(-1); zeta'(-1) is computed, not hard-coded.
double widom_dyson_ln_c0();

struct Constants {
  double ln_c0 = 0.0;
  double zeta_prime_minus1 = 0.0;
  double euler_gamma = 0.0;
};

Constants constants();

namespace detail {
// Both theta branches, exposed so the overlap band tau_im in [0.8, 1.2] can be
// cross-checked directly.
double theta3_direct(double z, double tau_im);
double theta3_modular(double z, double tau_im);
double zeta_prime_minus1();
}  // namespace detail

}  // namespace sinegap::specialfn
