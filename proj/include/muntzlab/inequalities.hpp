#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muntzlab/measure.hpp"
#include "muntzlab/norms.hpp"
#include "muntzlab/poly.hpp"
#include "muntzlab/rng.hpp"

namespace muntzlab {

// Empirical value of one "implicit constant": the computed ratio, the input
// that attained it, and the parameters it was computed under.
struct RatioReport {
    double ratio = 0.0;
    std::string witness;
    std::vector<std::pair<std::string, double>> context;
};

// Random polynomial with i.i.d. standard normal coefficients, one per
// exponent of the given block (or of the whole spectrum).
MuntzPolynomial random_block_poly(const BlockSpectrum& s, std::size_t block, Rng& rng);
MuntzPolynomial random_poly(const BlockSpectrum& s, Rng& rng);

// Empirical [min, max] bracket over seeded trials.  The trial function may
// decline a sample (degenerate draw); those are counted in `skipped`.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    std::string lo_witness;
    std::string hi_witness;
    int trials = 0;
    int skipped = 0;
};

Bracket bracket_scan(int trials, std::uint64_t seed,
                     const std::function<std::optional<double>(std::size_t, Rng&)>& trial);

// sup over the evaluation grid of |f(x)| / (x^(lambda_min(E_k)/N) ||f||_inf)
// for f supported in a single block of s.
RatioReport pointwise_block_ratio(const MuntzPolynomial& f_k, const BlockSpectrum& s);

// ||f'||_inf / ((sum_k lambda_k) ||f||_inf).  Requires min exponent >= 1 so
// the derivative stays bounded.
RatioReport newman_ratio(const MuntzPolynomial& f);

// ||f_k||_{L^p(d mu)} / (lambda_anchor^delta ||f_k||_{L^q(nu_alpha)}) with
// delta = (1+alpha)/q - beta/p; lambda_anchor is the smallest exponent of f_k.
RatioReport bernstein_ratio(const MuntzPolynomial& f_k, double p, double q_exp, double alpha,
                            const MeasureSpec& mu, double beta,
                            const quad::QuadratureConfig& cfg);

// ||f||_{L^p(nu_alpha)} / min(||f||_inf^(1+(1+alpha)/p) / ||f'||_inf^((1+alpha)/p), ||f||_inf)
RatioReport flat_lower_ratio(const MuntzPolynomial& f_k, double p, double alpha,
                             const quad::QuadratureConfig& cfg);

// Extrema over the grid of (1-t)^alpha sum_k lambda_k^alpha t^(lambda_k).
// Grid restricted to [0.5, 1 - 1e-8]; requires lambda_max (1 - t) >= 10.
std::pair<RatioReport, RatioReport> kernel_ratio(const BlockSpectrum& s, double alpha,
                                                 const std::vector<double>& t_grid);

// ||sum f_k||_{L^p(nu_alpha)} / (sum ||f_k||^p)^(1/p)
RatioReport decoupling_ratio(const BlockDecomposition& blocks, double p, double alpha,
                             const quad::QuadratureConfig& cfg);

// (int |f(rho t)|^p t^lambda dt / int |f|^p t^lambda dt)^(1/p) * rho^((lambda+1)/p)
RatioReport dilation_norm_check(const MuntzPolynomial& f, double rho, double p, double lambda_k,
                                const quad::QuadratureConfig& cfg);

// ||f_k||_{L^p(t^lambda_k dt)} / ||f||_{L^p(t^lambda_k dt)} for block k.
RatioReport block_projection_ratio(const MuntzPolynomial& f, const BlockSpectrum& s,
                                   std::size_t k, double p, const quad::QuadratureConfig& cfg);

// int |f|^p d nu_alpha / int |f'|^p d nu_(alpha+p); requires f(0) = 0.
RatioReport derivative_switch_ratio(const MuntzPolynomial& f, double p, double alpha,
                                    const quad::QuadratureConfig& cfg);

// int |f|^p d mu / double integral of |f'(rho t)||f(rho t)|^(p-1) d mu d rho.
RatioReport derivative_translation_ratio(const MuntzPolynomial& f, double p,
                                         const MeasureSpec& mu,
                                         const quad::QuadratureConfig& cfg);

struct LocMaxCheck {
    double x0 = 0.0;
    bool satisfied = false;
};

// Whether the argmax location obeys 1 - A ||f||_inf / ||f'||_inf <= x0 <= 1.
LocMaxCheck loc_max_check(const MuntzPolynomial& f_k, double a_const);

// int g d mu / int g(x) beta C (1-x)^(beta-1) dx for nonnegative nondecreasing
// g; the tail envelope tail(eps) <= C eps^beta is verified on a grid first.
RatioReport ipp_check(const std::function<double(double)>& g, const MeasureSpec& mu, double beta,
                      double envelope_c, const quad::QuadratureConfig& cfg);

}  // namespace muntzlab
