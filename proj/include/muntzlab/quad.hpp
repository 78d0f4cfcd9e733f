#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "muntzlab/errors.hpp"

namespace muntzlab::quad {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    int max_levels = 12;
    double endpoint_cut = 1e-15;

    void validate() const {
        if (!(rel_tol > 0.0) || rel_tol > 1e-2) throw DomainError("rel_tol must lie in (0, 1e-2]");
        if (max_levels < 3 || max_levels > 16) throw DomainError("max_levels must lie in [3, 16]");
        if (!(endpoint_cut >= 0.0) || endpoint_cut > 1e-6)
            throw DomainError("endpoint_cut must lie in [0, 1e-6]");
    }
};

struct IntegrationResult {
    double value = 0.0;
    double error_bound = 0.0;
    int levels = 0;
    std::size_t evaluations = 0;
};

// log Gamma / Gamma / Beta via a Lanczos rational.  beta_function combines
// the three Lanczos series into one expression with log1p-reduced power
// terms, so no large-log cancellation occurs even at arguments near 1e6.
double log_gamma(double z);
double gamma_fn(double z);
double beta_function(double a, double b);
double log_beta(double a, double b);

namespace detail {

// Double-exponential node layer.  Level 0 holds all multiples of h0 = 1/2,
// level L > 0 the odd multiples of h_L = h0 / 2^L, both signs.  weight is
// pi*cosh(u)*t*(1-t) without the step factor.
struct DeLevel {
    std::vector<double> t;
    std::vector<double> omt;   // 1 - t, computed without cancellation
    std::vector<double> logt;  // log1p(-omt)
    std::vector<double> weight;
};

const DeLevel& de_level(int level);
inline double level_step(int level) { return 0.5 / static_cast<double>(1 << level); }

// Adaptive trapezoid refinement over the DE layers.  `level_sum(level)`
// returns the sum of integrand terms over that layer (no step factor);
// optionally records the per-level estimates.
template <class LevelSum>
IntegrationResult adaptive_levels(LevelSum&& level_sum, const QuadratureConfig& cfg,
                                  std::vector<double>* trace = nullptr) {
    cfg.validate();
    IntegrationResult res;
    double total = level_sum(0);
    res.evaluations += de_level(0).t.size();
    double estimate = level_step(0) * total;
    if (trace != nullptr) trace->push_back(estimate);
    double prev = estimate;
    for (int level = 1; level <= cfg.max_levels; ++level) {
        total += level_sum(level);
        res.evaluations += de_level(level).t.size();
        estimate = level_step(level) * total;
        if (trace != nullptr) trace->push_back(estimate);
        double diff = std::fabs(estimate - prev);
        res.value = estimate;
        res.error_bound = diff;
        res.levels = level;
        // the absolute floor only matters below ~1e-280, where double
        // precision itself limits the attainable relative accuracy
        if (level >= 2 && diff <= cfg.rel_tol * std::fabs(estimate) + 1e-290) return res;
        prev = estimate;
    }
    throw AccuracyError("tanh-sinh level budget exhausted", res.value, res.error_bound);
}

}  // namespace detail

// Integrate g(t, 1-t) over [0,1] with DE nodes; g receives both t and 1-t so
// endpoint-singular weights can be applied exactly.
template <class G>
IntegrationResult integrate_de(G&& g, const QuadratureConfig& cfg,
                               std::vector<double>* trace = nullptr) {
    auto level_sum = [&](int level) {
        const detail::DeLevel& nodes = detail::de_level(level);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.t.size(); ++i) {
            sum += g(nodes.t[i], nodes.omt[i]) * nodes.weight[i];
        }
        return sum;
    };
    return detail::adaptive_levels(level_sum, cfg, trace);
}

// Integral of g(t) (1-t)^alpha dt over [0,1] for alpha > -1, g bounded on
// [0,1).  g is never evaluated closer than cfg.endpoint_cut to t = 1.
template <class G>
IntegrationResult integrate_weighted_full(G&& g, double alpha, const QuadratureConfig& cfg) {
    if (!(alpha > -1.0)) throw DomainError("jacobi exponent must satisfy alpha > -1");
    const double t_hi = 1.0 - cfg.endpoint_cut;
    if (alpha == 0.0) {
        return integrate_de([&](double t, double) { return g(t < t_hi ? t : t_hi); }, cfg);
    }
    return integrate_de(
        [&](double t, double omt) { return g(t < t_hi ? t : t_hi) * std::pow(omt, alpha); }, cfg);
}

template <class G>
double integrate_weighted(G&& g, double alpha, const QuadratureConfig& cfg) {
    return integrate_weighted_full(std::forward<G>(g), alpha, cfg).value;
}

// Integral of g(t) (1-t)^alpha over [a, b] within [0,1]; the weight stays
// exact when b = 1.
template <class G>
double integrate_weighted_segment(G&& g, double alpha, double a, double b,
                                  const QuadratureConfig& cfg) {
    if (!(alpha > -1.0)) throw DomainError("jacobi exponent must satisfy alpha > -1");
    if (!(b > a) || a < 0.0 || b > 1.0) throw DomainError("bad segment");
    const double width = b - a;
    const bool right_end = (b == 1.0);
    const double end_scale = (right_end && alpha != 0.0) ? std::pow(1.0 - a, alpha) : 1.0;
    const double t_hi = 1.0 - cfg.endpoint_cut;
    auto value = integrate_de(
        [&](double s, double oms) {
            double t = a + width * s;
            double w = 1.0;
            if (alpha != 0.0) {
                w = right_end ? end_scale * std::pow(oms, alpha) : std::pow(1.0 - t, alpha);
            }
            return g(t < t_hi ? t : t_hi) * w;
        },
        cfg);
    return width * value.value;
}

// Weighted integral split at interior points where the integrand loses
// smoothness (|.|-type kinks); each piece sees them as endpoints.
template <class G>
double integrate_weighted_cuts(G&& g, double alpha, const std::vector<double>& cuts,
                               const QuadratureConfig& cfg) {
    if (cuts.empty()) return integrate_weighted(g, alpha, cfg);
    double total = 0.0;
    double a = 0.0;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
        double b = (i < cuts.size()) ? cuts[i] : 1.0;
        if (b > a && b <= 1.0) total += integrate_weighted_segment(g, alpha, a, b, cfg);
        a = std::max(a, b);
    }
    return total;
}

// Normalized Beta ratios B(x, beta) x^beta / Gamma(beta) for a grid of x;
// the ratio tends to 1 as x grows.
std::vector<std::pair<double, double>> beta_asymptotic_check(double beta,
                                                             const std::vector<double>& x_values);

}  // namespace muntzlab::quad
