#include "muntzlab/norms.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "muntzlab/kernels.hpp"

namespace muntzlab {

namespace {

void check_p(double p) {
    if (!(p > 0.0)) throw DomainError("integrability exponent p must be positive");
}

}  // namespace

namespace {

// Integral of |f|^p (1-t)^alpha over the whole interval, valid when |f|^p has
// no interior branch points (f of one sign, or p an even integer).
double whole_interval_integral(const MuntzPolynomial& f, double p, double alpha,
                               const quad::QuadratureConfig& cfg) {
    const auto lam = f.exponent_vector();
    const auto coef = f.coeff_vector();
    const auto& kt = kernels::active();
    std::vector<double> vals;
    std::vector<double> wts;
    auto level_sum = [&](int level) {
        const quad::detail::DeLevel& nodes = quad::detail::de_level(level);
        const std::size_t n = nodes.t.size();
        vals.resize(n);
        kt.exp_sum(lam, coef, nodes.logt, vals);
        if (alpha == 0.0) {
            return kt.abs_pow_weighted_sum(vals, nodes.weight, p);
        }
        wts.resize(n);
        kt.pow_array(nodes.omt, alpha, wts);
        for (std::size_t i = 0; i < n; ++i) wts[i] *= nodes.weight[i];
        return kt.abs_pow_weighted_sum(vals, wts, p);
    };
    return quad::detail::adaptive_levels(level_sum, cfg).value;
}

// Integral of |f|^p (1-t)^alpha over [a, b] mapped onto the DE nodes.  When
// b = 1 the weight uses the node's exact 1 - s; otherwise it is regular.
double segment_integral(const MuntzPolynomial& f, double p, double alpha, double a, double b,
                        const quad::QuadratureConfig& cfg) {
    const auto lam = f.exponent_vector();
    const auto coef = f.coeff_vector();
    const auto& kt = kernels::active();
    const double width = b - a;
    const bool right_end = (b == 1.0);
    const double end_scale = right_end && alpha != 0.0 ? std::pow(1.0 - a, alpha) : 1.0;
    std::vector<double> logs;
    std::vector<double> vals;
    std::vector<double> wts;
    auto level_sum = [&](int level) {
        const quad::detail::DeLevel& nodes = quad::detail::de_level(level);
        const std::size_t n = nodes.t.size();
        logs.resize(n);
        vals.resize(n);
        wts.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            double t = a + width * nodes.t[i];
            logs[i] = std::log(t);
        }
        kt.exp_sum(lam, coef, logs, vals);
        if (alpha == 0.0) {
            for (std::size_t i = 0; i < n; ++i) wts[i] = width * nodes.weight[i];
        } else if (right_end) {
            // 1 - t = (1 - a)(1 - s) exactly for b = 1
            kt.pow_array(nodes.omt, alpha, wts);
            for (std::size_t i = 0; i < n; ++i) wts[i] *= end_scale * width * nodes.weight[i];
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                wts[i] = std::pow(1.0 - (a + width * nodes.t[i]), alpha) * width *
                         nodes.weight[i];
            }
        }
        return kt.abs_pow_weighted_sum(vals, wts, p);
    };
    return quad::detail::adaptive_levels(level_sum, cfg).value;
}

}  // namespace

double pth_power_integral_jacobi(const MuntzPolynomial& f, double p, double alpha,
                                 const quad::QuadratureConfig& cfg) {
    check_p(p);
    if (!(alpha > -1.0)) throw DomainError("jacobi exponent must satisfy alpha > -1");
    if (f.is_zero()) return 0.0;
    if (p * f.min_exponent() <= -1.0)
        throw DomainError("|f|^p is not integrable at t = 0 for this p");
    if (f.size() == 1) {
        const Term& t = f.terms().front();
        return std::pow(std::fabs(t.coeff), p) *
               quad::beta_function(p * t.exponent + 1.0, alpha + 1.0);
    }

    // normalize by the largest coefficient so the quadrature runs at a
    // healthy scale even for heavily dilated inputs
    double scale = 0.0;
    for (const Term& t : f.terms()) scale = std::max(scale, std::fabs(t.coeff));
    MuntzPolynomial g = (1.0 / scale) * f;

    // |g|^p is analytic across sign changes only for even integer p; for any
    // other power the integral is split there so the branch points become
    // endpoint singularities, which the DE transform absorbs.
    const bool even_power = (p == 2.0 || p == 4.0);
    std::vector<double> cuts;
    if (!even_power) cuts = detail::sign_changes(g);

    double total = 0.0;
    if (cuts.empty()) {
        total = whole_interval_integral(g, p, alpha, cfg);
    } else {
        double a = 0.0;
        for (std::size_t i = 0; i <= cuts.size(); ++i) {
            double b = (i < cuts.size()) ? cuts[i] : 1.0;
            if (b > a) total += segment_integral(g, p, alpha, a, b, cfg);
            a = b;
        }
    }
    double factor = std::pow(scale, p);
    if (factor == 0.0 || std::isinf(factor)) {
        // recombine in log space when the direct power over/underflows
        return std::exp(p * std::log(scale) + std::log(total));
    }
    return factor * total;
}

double lp_norm_jacobi(const MuntzPolynomial& f, double p, double alpha,
                      const quad::QuadratureConfig& cfg) {
    return std::pow(pth_power_integral_jacobi(f, p, alpha, cfg), 1.0 / p);
}

double lp_norm_power_weight(const MuntzPolynomial& f, double p, double lambda_w,
                            const quad::QuadratureConfig& cfg) {
    check_p(p);
    if (!(lambda_w >= 0.0)) throw DomainError("power-weight exponent must be nonnegative");
    std::vector<Term> shifted = f.terms();
    const double shift = lambda_w / p;
    for (Term& t : shifted) t.exponent += shift;
    return lp_norm_jacobi(MuntzPolynomial::generalized(std::move(shifted)), p, 0.0, cfg);
}

namespace {

double pth_power_integral_cantor(const MuntzPolynomial& f, const MeasureSpec& mu, double p) {
    // stream the depth-D atom cells; f evaluated at cell centers
    const int depth = mu.cantor_depth();
    const double r = mu.contraction();
    std::vector<double> offsets(static_cast<std::size_t>(depth));
    double pr = 1.0;
    for (int j = 0; j < depth; ++j) {
        offsets[static_cast<std::size_t>(j)] = (1.0 - r) * pr;
        pr *= r;
    }
    const double center = 0.5 * pr;
    const double w = std::ldexp(1.0, -depth);
    const std::uint64_t count = std::uint64_t{1} << depth;

    const auto lam = f.exponent_vector();
    const auto coef = f.coeff_vector();
    const auto& kt = kernels::active();
    constexpr std::size_t kChunk = 1 << 15;
    std::vector<double> logs(kChunk);
    std::vector<double> vals(kChunk);
    std::vector<double> wts(kChunk, w);
    double total = 0.0;
    for (std::uint64_t first = 0; first < count;) {
        std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, count - first));
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t mask = first + i;
            double x = center;
            while (mask != 0) {
                int j = std::countr_zero(mask);
                x += offsets[static_cast<std::size_t>(j)];
                mask &= mask - 1;
            }
            logs[i] = std::log(x);
        }
        kt.exp_sum(lam, coef, {logs.data(), n}, {vals.data(), n});
        total += kt.abs_pow_weighted_sum({vals.data(), n}, {wts.data(), n}, p);
        first += n;
    }
    return total;
}

}  // namespace

double pth_power_integral(const MuntzPolynomial& f, const MeasureSpec& mu, double p,
                          const quad::QuadratureConfig& cfg) {
    check_p(p);
    if (f.is_zero()) return 0.0;
    switch (mu.kind()) {
        case MeasureKind::Jacobi:
            return pth_power_integral_jacobi(f, p, mu.alpha(), cfg);
        case MeasureKind::Atomic: {
            std::vector<double> pts;
            std::vector<double> wts;
            pts.reserve(mu.atoms().size());
            wts.reserve(mu.atoms().size());
            for (const auto& [t, w] : mu.atoms()) {
                pts.push_back(t);
                wts.push_back(w);
            }
            std::vector<double> vals(pts.size());
            eval_many(f, pts, vals);
            return kernels::active().abs_pow_weighted_sum(vals, wts, p);
        }
        case MeasureKind::Cantor:
            return pth_power_integral_cantor(f, mu, p);
        case MeasureKind::TailEnvelope:
            throw DomainError("tail envelope supports tail queries only");
    }
    throw DomainError("unknown measure kind");
}

double lp_norm(const MuntzPolynomial& f, const MeasureSpec& mu, double p,
               const quad::QuadratureConfig& cfg) {
    if (mu.kind() == MeasureKind::Jacobi) {
        check_p(p);
        if (f.is_zero()) return 0.0;
        return lp_norm_jacobi(f, p, mu.alpha(), cfg);
    }
    return std::pow(pth_power_integral(f, mu, p, cfg), 1.0 / p);
}

}  // namespace muntzlab
