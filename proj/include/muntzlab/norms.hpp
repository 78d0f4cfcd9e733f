#pragma once

#include "muntzlab/measure.hpp"
#include "muntzlab/poly.hpp"
#include "muntzlab/quad.hpp"

namespace muntzlab {

// Integral of |f|^p (1-t)^alpha dt.  Single monomials go through the Beta
// closed form; everything else through tanh-sinh with vectorized evaluation.
double pth_power_integral_jacobi(const MuntzPolynomial& f, double p, double alpha,
                                 const quad::QuadratureConfig& cfg);

// (Integral of |f|^p (1-t)^alpha dt)^(1/p)
double lp_norm_jacobi(const MuntzPolynomial& f, double p, double alpha,
                      const quad::QuadratureConfig& cfg);

// (Integral of |f|^p t^lambda_w dt)^(1/p); the power weight at zero is folded
// into the polynomial by shifting all exponents by lambda_w / p.
double lp_norm_power_weight(const MuntzPolynomial& f, double p, double lambda_w,
                            const quad::QuadratureConfig& cfg);

// Integral of |f|^p d mu (not rooted)
double pth_power_integral(const MuntzPolynomial& f, const MeasureSpec& mu, double p,
                          const quad::QuadratureConfig& cfg);

// (Integral of |f|^p d mu)^(1/p)
double lp_norm(const MuntzPolynomial& f, const MeasureSpec& mu, double p,
               const quad::QuadratureConfig& cfg);

}  // namespace muntzlab
