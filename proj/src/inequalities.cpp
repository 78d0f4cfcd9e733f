#include "muntzlab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "muntzlab/kernels.hpp"

namespace muntzlab {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string t_witness(double t) { return "t=" + format_double(t); }

void require_nonzero(const MuntzPolynomial& f) {
    if (f.is_zero()) throw DegenerateInputError("zero polynomial");
}

void require_derivative_bounded(const MuntzPolynomial& f) {
    require_nonzero(f);
    if (f.min_exponent() < 1.0)
        throw PreconditionError("exponents below 1 make the derivative sup-norm unbounded");
}

// Composite grid on (0, 1] used for pointwise suprema.
std::vector<double> ratio_grid(double lambda_max) {
    std::vector<double> grid;
    grid.reserve(2048 + 257);
    for (int i = 1; i <= 2048; ++i) grid.push_back(static_cast<double>(i) / 2048.0);
    if (lambda_max > 20.0) {
        const double s0 = 10.0 / lambda_max;
        for (int j = 0; j <= 255; ++j) grid.push_back(1.0 - s0 * std::pow(10.0, -4.0 * j / 255.0));
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    return grid;
}

}  // namespace

MuntzPolynomial random_block_poly(const BlockSpectrum& s, std::size_t block, Rng& rng) {
    auto [begin, end] = s.block_range(block);
    std::vector<Term> terms;
    terms.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        terms.push_back(Term{s.exponents()[i], rng.normal()});
    }
    return MuntzPolynomial::muntz(std::move(terms));
}

MuntzPolynomial random_poly(const BlockSpectrum& s, Rng& rng) {
    std::vector<Term> terms;
    terms.reserve(s.size());
    for (double lambda : s.exponents()) terms.push_back(Term{lambda, rng.normal()});
    return MuntzPolynomial::muntz(std::move(terms));
}

Bracket bracket_scan(int trials, std::uint64_t seed,
                     const std::function<std::optional<double>(std::size_t, Rng&)>& trial) {
    if (trials < 1) throw DomainError("bracket_scan needs at least one trial");
    Bracket b;
    bool first = true;
    for (int i = 0; i < trials; ++i) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(i));
        auto v = trial(static_cast<std::size_t>(i), rng);
        ++b.trials;
        if (!v || !std::isfinite(*v)) {
            ++b.skipped;
            continue;
        }
        if (first || *v < b.lo) {
            b.lo = *v;
            b.lo_witness = "trial=" + std::to_string(i);
        }
        if (first || *v > b.hi) {
            b.hi = *v;
            b.hi_witness = "trial=" + std::to_string(i);
        }
        first = false;
    }
    if (first) throw DegenerateInputError("every trial was skipped");
    return b;
}

RatioReport pointwise_block_ratio(const MuntzPolynomial& f_k, const BlockSpectrum& s) {
    require_nonzero(f_k);
    // locate the block from the support and require the support inside it
    auto first_idx = s.find_exponent(f_k.min_exponent());
    if (!first_idx) throw MembershipError("exponent not present in spectrum");
    const std::size_t block = s.block_of_index(*first_idx);
    auto [begin, end] = s.block_range(block);
    for (const Term& t : f_k.terms()) {
        auto idx = s.find_exponent(t.exponent);
        if (!idx || *idx < begin || *idx >= end)
            throw MembershipError("polynomial is not supported in a single block");
    }

    const double lambda_min = s.block_min_exponent(block);
    const double expo = lambda_min / static_cast<double>(s.block_cap());
    const double m = sup_norm(f_k).value;

    auto grid = ratio_grid(f_k.max_exponent());
    std::vector<double> vals(grid.size());
    eval_many(f_k, grid, vals);
    double best = 0.0;
    double best_t = grid.front();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double denom = kernels::ref_exp(expo * std::log(grid[i])) * m;
        double r = std::fabs(vals[i]) / denom;
        if (r > best) {
            best = r;
            best_t = grid[i];
        }
    }
    return RatioReport{best,
                       t_witness(best_t),
                       {{"block", static_cast<double>(block)},
                        {"lambda_min", lambda_min},
                        {"N", static_cast<double>(s.block_cap())}}};
}

RatioReport newman_ratio(const MuntzPolynomial& f) {
    require_derivative_bounded(f);
    SupNorm df = sup_norm(derivative(f));
    SupNorm nf = sup_norm(f);
    double ratio = df.value / (f.exponent_sum() * nf.value);
    return RatioReport{ratio, t_witness(df.argmax), {{"exponent_sum", f.exponent_sum()}}};
}

RatioReport bernstein_ratio(const MuntzPolynomial& f_k, double p, double q_exp, double alpha,
                            const MeasureSpec& mu, double beta,
                            const quad::QuadratureConfig& cfg) {
    require_nonzero(f_k);
    if (!(p >= 1.0) || !(q_exp >= 1.0)) throw DomainError("p and q must be at least 1");
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    const double delta = (1.0 + alpha) / q_exp - beta / p;
    const double anchor = f_k.min_exponent();
    double num = lp_norm(f_k, mu, p, cfg);
    double den = std::pow(anchor, delta) * lp_norm_jacobi(f_k, q_exp, alpha, cfg);
    return RatioReport{num / den,
                       "lambda=" + format_double(anchor),
                       {{"p", p}, {"q", q_exp}, {"alpha", alpha}, {"beta", beta}, {"delta", delta}}};
}

RatioReport flat_lower_ratio(const MuntzPolynomial& f_k, double p, double alpha,
                             const quad::QuadratureConfig& cfg) {
    if (!(p >= 1.0)) throw DomainError("p must be at least 1");
    require_derivative_bounded(f_k);
    const double m = sup_norm(f_k).value;
    const double dm = sup_norm(derivative(f_k)).value;
    const double e = (1.0 + alpha) / p;
    const double flat = std::pow(m, 1.0 + e) / std::pow(dm, e);
    const double denom = std::min(flat, m);
    double num = lp_norm_jacobi(f_k, p, alpha, cfg);
    return RatioReport{num / denom,
                       flat < m ? "branch=flat" : "branch=sup",
                       {{"p", p}, {"alpha", alpha}, {"sup", m}, {"dsup", dm}}};
}

std::pair<RatioReport, RatioReport> kernel_ratio(const BlockSpectrum& s, double alpha,
                                                 const std::vector<double>& t_grid) {
    if (!(alpha > 0.0)) throw DomainError("kernel estimate requires alpha > 0");
    if (t_grid.empty()) throw DomainError("empty t grid");
    const double lambda_max = s.exponents().back();
    for (double t : t_grid) {
        if (!(t >= 0.5) || !(t <= 1.0 - 1e-8))
            throw DomainError("kernel grid must lie in [0.5, 1 - 1e-8]");
        if (lambda_max * (1.0 - t) < 10.0)
            throw AccuracyError("kernel sum truncation-dominated: lambda_max (1-t) < 10",
                                lambda_max * (1.0 - t), 10.0);
    }
    std::vector<double> coeffs(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) coeffs[i] = std::pow(s.exponents()[i], alpha);
    std::vector<double> logs(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) logs[i] = std::log(t_grid[i]);
    std::vector<double> sums(t_grid.size());
    kernels::active().exp_sum(s.exponents(), coeffs, logs, sums);

    RatioReport mn, mx;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        // 1 - t exact for t >= 0.5
        double v = std::pow(1.0 - t_grid[i], alpha) * sums[i];
        if (i == 0 || v < mn.ratio) mn = RatioReport{v, t_witness(t_grid[i]), {{"alpha", alpha}}};
        if (i == 0 || v > mx.ratio) mx = RatioReport{v, t_witness(t_grid[i]), {{"alpha", alpha}}};
    }
    return {mn, mx};
}

RatioReport decoupling_ratio(const BlockDecomposition& blocks, double p, double alpha,
                             const quad::QuadratureConfig& cfg) {
    if (!(p >= 1.0)) throw DomainError("p must be at least 1");
    MuntzPolynomial sum;
    double denom_p = 0.0;
    std::size_t nonzero = 0;
    for (const MuntzPolynomial& fk : blocks.blocks) {
        if (fk.is_zero()) continue;
        ++nonzero;
        sum = sum + fk;
        denom_p += pth_power_integral_jacobi(fk, p, alpha, cfg);
    }
    if (nonzero == 0) throw DegenerateInputError("all blocks vanish");
    double num = lp_norm_jacobi(sum, p, alpha, cfg);
    double den = std::pow(denom_p, 1.0 / p);
    return RatioReport{num / den,
                       "blocks=" + std::to_string(nonzero),
                       {{"p", p}, {"alpha", alpha}}};
}

RatioReport dilation_norm_check(const MuntzPolynomial& f, double rho, double p, double lambda_k,
                                const quad::QuadratureConfig& cfg) {
    require_nonzero(f);
    if (!(rho > 0.0) || rho > 1.0) throw DomainError("rho must lie in (0,1]");
    if (!(p >= 1.0)) throw DomainError("p must be at least 1");
    if (!(lambda_k > 0.0)) throw DomainError("lambda_k must be positive");
    double num = lp_norm_power_weight(dilate(f, rho), p, lambda_k, cfg);
    double den = lp_norm_power_weight(f, p, lambda_k, cfg);
    double value = (num / den) * std::pow(rho, (lambda_k + 1.0) / p);
    return RatioReport{value, "rho=" + format_double(rho), {{"p", p}, {"lambda_k", lambda_k}}};
}

RatioReport block_projection_ratio(const MuntzPolynomial& f, const BlockSpectrum& s,
                                   std::size_t k, double p, const quad::QuadratureConfig& cfg) {
    require_nonzero(f);
    if (!(p >= 1.0)) throw DomainError("p must be at least 1");
    if (k >= s.block_count()) throw DomainError("block index out of range");
    BlockDecomposition d = block_decompose(f, s);
    if (d.blocks[k].is_zero()) throw DegenerateInputError("requested block vanishes");
    const double lambda_k = s.block_min_exponent(k);
    double num = lp_norm_power_weight(d.blocks[k], p, lambda_k, cfg);
    double den = lp_norm_power_weight(f, p, lambda_k, cfg);
    return RatioReport{num / den,
                       "block=" + std::to_string(k),
                       {{"p", p}, {"lambda_k", lambda_k}}};
}

RatioReport derivative_switch_ratio(const MuntzPolynomial& f, double p, double alpha,
                                    const quad::QuadratureConfig& cfg) {
    require_nonzero(f);
    if (!f.vanishes_at_zero()) throw PreconditionError("f must vanish at 0 (no constant term)");
    if (!(p >= 1.0)) throw DomainError("p must be at least 1");
    double num = pth_power_integral_jacobi(f, p, alpha, cfg);
    double den = pth_power_integral_jacobi(derivative(f), p, alpha + p, cfg);
    return RatioReport{num / den, "", {{"p", p}, {"alpha", alpha}}};
}

RatioReport derivative_translation_ratio(const MuntzPolynomial& f, double p,
                                         const MeasureSpec& mu,
                                         const quad::QuadratureConfig& cfg) {
    require_nonzero(f);
    if (!f.vanishes_at_zero()) throw PreconditionError("f must vanish at 0 (no constant term)");
    if (!(p >= 1.0)) throw DomainError("p must be at least 1");
    double num = pth_power_integral(f, mu, p, cfg);

    quad::QuadratureConfig inner_cfg = cfg;
    inner_cfg.rel_tol = std::max(cfg.rel_tol, 1e-7);
    const MeasureSpec inner_mu =
        (mu.kind() == MeasureKind::Cantor) ? mu.with_cantor_depth(std::min(mu.cantor_depth(), 14))
                                           : mu;
    // kinks of |f'(rho t)| |f(rho t)|^(p-1) sit at the rescaled sign changes
    // of f' and (for p > 1) of f; locate them once
    std::vector<double> root_args = detail::sign_changes(derivative(f));
    if (p > 1.0) {
        auto more = detail::sign_changes(f);
        root_args.insert(root_args.end(), more.begin(), more.end());
        std::sort(root_args.begin(), root_args.end());
    }
    auto outer = [&](double rho, double) {
        if (rho <= 0.0) return 0.0;
        MuntzPolynomial h = dilate(f, rho);
        if (h.is_zero()) return 0.0;
        MuntzPolynomial hp = derivative(h);
        auto g = [&](double t) {
            return std::fabs(eval(hp, t) / rho) * std::pow(std::fabs(eval(h, t)), p - 1.0);
        };
        if (inner_mu.kind() == MeasureKind::Jacobi) {
            std::vector<double> cuts;
            for (double r : root_args) {
                if (r < rho) cuts.push_back(r / rho);
            }
            return quad::integrate_weighted_cuts(g, inner_mu.alpha(), cuts, inner_cfg);
        }
        return integrate(inner_mu, g, inner_cfg);
    };
    double den = quad::integrate_de(outer, inner_cfg).value;
    return RatioReport{num / den, "", {{"p", p}}};
}

LocMaxCheck loc_max_check(const MuntzPolynomial& f_k, double a_const) {
    if (!(a_const > 0.0)) throw DomainError("A must be positive");
    require_derivative_bounded(f_k);
    SupNorm nf = sup_norm(f_k);
    SupNorm df = sup_norm(derivative(f_k));
    double lhs = 1.0 - a_const * nf.value / df.value;
    return LocMaxCheck{nf.argmax, lhs <= nf.argmax && nf.argmax <= 1.0};
}

RatioReport ipp_check(const std::function<double(double)>& g, const MeasureSpec& mu, double beta,
                      double envelope_c, const quad::QuadratureConfig& cfg) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (!(envelope_c > 0.0)) throw DomainError("envelope constant must be positive");
    for (int j = 0; j <= 12; ++j) {
        double eps = std::pow(10.0, -6.0 + 0.5 * j);
        if (eps > 1.0) eps = 1.0;
        if (tail(mu, eps) > envelope_c * std::pow(eps, beta) * (1.0 + 1e-9))
            throw PreconditionError("tail envelope C eps^beta violated on the verification grid");
    }
    double num = integrate(mu, g, cfg);
    double den = beta * envelope_c * quad::integrate_weighted(g, beta - 1.0, cfg);
    return RatioReport{num / den, "", {{"beta", beta}, {"C", envelope_c}}};
}

}  // namespace muntzlab
