#pragma once

namespace nld {

// Gamma function via Lanczos approximation (g = 7, 9 terms), reflection for
// x < 1/2. Relative error below 1e-12 on the real line away from poles.
double gamma_fn(double x);

// Kummer's confluent hypergeometric function 1F1(alpha, beta; z).
//
// Direct power series for z >= -z_switch (after the Kummer transform
// 1F1(a,b;z) = e^z 1F1(b-a,b;-z) when z < 0), large-argument asymptotic
// expansion for z < -z_switch. beta must not be a nonpositive integer.
double kummer_1f1(double alpha, double beta, double z, double tol = 1e-14,
                  double z_switch = 30.0);

// Euler integral representation of 1F1, requires 0 < alpha < beta:
//   Gamma(beta)/(Gamma(beta-alpha) Gamma(alpha)) *
//     int_0^1 e^{zt} t^{alpha-1} (1-t)^{beta-alpha-1} dt.
// Independent oracle for kummer_1f1.
double euler_integral_1f1(double alpha, double beta, double z);

}  // namespace nld
