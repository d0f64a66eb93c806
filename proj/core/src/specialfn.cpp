#include "sinegap/specialfn.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace sinegap::specialfn {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double elliptic_K(double k) {
  if (!(k >= 0.0) || k >= 1.0)
    throw std::domain_error("elliptic_K: modulus must satisfy 0 <= k < 1");
  double a = 1.0;
  double g = std::sqrt((1.0 - k) * (1.0 + k));
  for (int i = 0; i < 60; ++i) {
    if (std::abs(a - g) <= std::numeric_limits<double>::epsilon() * a) break;
    const double am = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = am;
  }
  return kPi / (2.0 * a);
}

double elliptic_E(double k) {
  if (!(k >= 0.0) || k > 1.0)
    throw std::domain_error("elliptic_E: modulus must satisfy 0 <= k <= 1");
  if (k == 1.0) return 1.0;
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  double c = k;
  double pow2 = 0.5;        // 2^{n-1} at n = 0
  double csum = 0.5 * c * c;
  for (int i = 0; i < 60; ++i) {
    const double am = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = am;
    pow2 *= 2.0;
    csum += pow2 * c * c;
    if (std::abs(c) <= std::numeric_limits<double>::epsilon() * a) break;
  }
  const double K = kPi / (2.0 * a);
  return K * (1.0 - csum);
}

EllipticPair elliptic_KE(double k) {
  EllipticPair p;
  p.k = k;
  p.K_val = elliptic_K(k);
  p.E_val = elliptic_E(k);
  return p;
}

namespace detail {

double theta3_direct(double z, double t) {
  z -= std::round(z);  // theta(z+1|tau) = theta(z|tau)
  double sum = 0.0;
  for (int k = 1; k <= 64; ++k) {
    const double mag = std::exp(-kPi * t * k * k);
    sum += mag * std::cos(2.0 * kPi * k * z);
    if (mag < 1e-18) break;
  }
  return 1.0 + 2.0 * sum;
}

double theta3_modular(double z, double t) {
  // theta3(z|it) = t^{-1/2} exp(-pi z^2/t) [1 + sum_{k>=1} (e1 + e2)],
  // e1 = exp(-(pi/t) k (k - 2z)), e2 = exp(-(pi/t) k (k + 2z)); with z reduced
  // to [-1/2, 1/2] every exponent is <= 0.
  z -= std::round(z);
  const double pot = kPi / t;
  double bracket = 1.0;
  for (int k = 1; k <= 64; ++k) {
    const double e1 = std::exp(-pot * k * (k - 2.0 * z));
    const double e2 = std::exp(-pot * k * (k + 2.0 * z));
    bracket += e1 + e2;
    if (e1 + e2 < 1e-18 * bracket) break;
  }
  return std::exp(-kPi * z * z / t) * bracket / std::sqrt(t);
}

}  // namespace detail

double theta3(double z, double tau_im) {
  if (!(tau_im > 0.0)) throw std::domain_error("theta3: tau_im must be positive");
  return tau_im < 1.0 ? detail::theta3_modular(z, tau_im)
                      : detail::theta3_direct(z, tau_im);
}

double theta3(const ThetaArgs& args) { return theta3(args.z, args.tau_im); }

double ln_theta3(double z, double tau_im) {
  if (!(tau_im > 0.0)) throw std::domain_error("ln_theta3: tau_im must be positive");
  if (tau_im >= 1.0) return std::log(detail::theta3_direct(z, tau_im));
  z -= std::round(z);
  const double pot = kPi / tau_im;
  double bracket = 1.0;
  for (int k = 1; k <= 64; ++k) {
    const double e1 = std::exp(-pot * k * (k - 2.0 * z));
    const double e2 = std::exp(-pot * k * (k + 2.0 * z));
    bracket += e1 + e2;
    if (e1 + e2 < 1e-18 * bracket) break;
  }
  return -0.5 * std::log(tau_im) - kPi * z * z / tau_im + std::log(bracket);
}

double ln_barnes_g_pair(double v) {
  if (std::isnan(v) || v < 0.0)
    throw std::domain_error("ln_barnes_g_pair: v must be >= 0");
  if (v == 0.0) return 0.0;
  // From the defining product with z = +-iv/pi the pair combination collapses
  // to real arithmetic: with y = (v/pi)^2,
  //   ln[G(1+iv/pi)G(1-iv/pi)] = y(1 + gamma_E) + sum_{k>=1} [k ln(1+y/k^2) - y/k].
  const long double y = static_cast<long double>(v / kPi) * (v / kPi);
  const int N = 10000;
  long double sum = 0.0L;
  for (int k = 1; k <= N; ++k) {
    const long double kk = static_cast<long double>(k);
    sum += kk * log1pl(y / (kk * kk)) - y / kk;
  }
  // Tail: sum_{k>N} [k ln(1+y/k^2) - y/k] = sum_{j>=2} (-1)^{j+1} (y^j/j) S_{2j-1}
  // with S_m = sum_{k>N} k^{-m} by Euler-Maclaurin at a = N+1.
  const long double a = static_cast<long double>(N) + 1.0L;
  auto zeta_tail = [a](int m) {
    const long double am = powl(a, static_cast<long double>(-m));
    return a * am / (m - 1) + 0.5L * am + (m / 12.0L) * am / a -
           (static_cast<long double>(m) * (m + 1) * (m + 2) / 720.0L) * am / (a * a * a);
  };
  long double tail = 0.0L;
  long double yj = y * y;  // y^j starting at j = 2
  for (int j = 2; j <= 6; ++j) {
    const long double term = yj / j * zeta_tail(2 * j - 1);
    tail += (j % 2 == 0) ? -term : term;
    yj *= y;
  }
  return static_cast<double>(y * (1.0L + std::numbers::egamma_v<long double>) + sum + tail);
}

double ln_A(double v) {
  if (!(v > 0.0)) throw std::domain_error("ln_A: v must be positive");
  const double y = (v / kPi) * (v / kPi);
  return 2.0 * ln_barnes_g_pair(v) - y * (3.0 - 2.0 * std::log(v / kPi));
}

namespace detail {

namespace {

// zeta'(2) = -sum_{n>=2} ln(n)/n^2, Euler-Maclaurin from n = N.
long double zeta_prime_2() {
  const int N = 200;
  long double s = 0.0L;
  for (int n = 2; n < N; ++n) {
    const long double x = n;
    s += logl(x) / (x * x);
  }
  const long double x = N;
  const long double lnx = logl(x);
  const long double inv = 1.0L / x;
  const long double i2 = inv * inv, i3 = i2 * inv, i5 = i3 * i2, i7 = i5 * i2;
  // integral + f/2 - f'/12 + f'''/720 - f^(5)/30240 for f = ln(x)/x^2
  s += (lnx + 1.0L) * inv;
  s += 0.5L * lnx * i2;
  s -= (1.0L - 2.0L * lnx) * i3 / 12.0L;
  s += (26.0L - 24.0L * lnx) * i5 / 720.0L;
  s -= (1044.0L - 720.0L * lnx) * i7 / 30240.0L;
  return -s;
}

}  // namespace

double zeta_prime_minus1() {
  // Functional-equation route:
  //   zeta'(-1) = -(1/12)(ln(2 pi) - 1 + gamma_E) + zeta'(2)/(2 pi^2).
  const long double pi = std::numbers::pi_v<long double>;
  const long double g = std::numbers::egamma_v<long double>;
  const long double val =
      -(logl(2.0L * pi) - 1.0L + g) / 12.0L + zeta_prime_2() / (2.0L * pi * pi);
  return static_cast<double>(val);
}

}  // namespace detail

double widom_dyson_ln_c0() {
  return std::log(2.0) / 12.0 + 3.0 * detail::zeta_prime_minus1();
}

Constants constants() {
  Constants c;
  c.zeta_prime_minus1 = detail::zeta_prime_minus1();
  c.ln_c0 = std::log(2.0) / 12.0 + 3.0 * c.zeta_prime_minus1;
  c.euler_gamma = std::numbers::egamma;
  return c;
}

}  // namespace sinegap::specialfn
