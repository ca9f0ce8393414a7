#pragma once

namespace deplm {

// Standard normal CDF, accurate to a few ulp (erfc-based).
double normal_cdf(double x);

// Inverse of normal_cdf on (0,1): rational initial guess plus one Halley
// refinement, |normal_cdf(result) - p| < 1e-15 over (1e-300, 1 - 1e-16).
double normal_quantile(double p);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x),
// series/continued-fraction implementation, absolute error < 1e-12.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Upper tail of the chi-square law with dof degrees of freedom.
double chi_square_sf(double x, int dof);

}  // namespace deplm
