#include "muntzlab/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace muntzlab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Converges:
            return "converges";
        case Verdict::Diverges:
            return "diverges";
        case Verdict::Inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

EmbeddingProblem EmbeddingProblem::create(BlockSpectrum spectrum, MeasureSpec mu, double p,
                                          double beta, std::optional<double> rhs_alpha) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (beta >= 1.0) {
        if (!(p >= beta)) throw DomainError("the non-singular case requires p >= beta");
    } else {
        if (!(p >= 1.0)) throw DomainError("the singular case requires p >= 1");
    }
    if (rhs_alpha && !(*rhs_alpha > 0.0))
        throw DomainError("rhs weight exponent must be positive (the weight is nu_(alpha-1))");
    return EmbeddingProblem(std::move(spectrum), std::move(mu), p, beta, rhs_alpha);
}

namespace {

struct LineFit {
    double slope = 0.0;
    bool ok = false;
};

LineFit fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() < 2) return {};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) return {};
    return {(n * sxy - sx * sy) / denom, true};
}

}  // namespace

SeriesDiagnosis moment_series(const EmbeddingProblem& problem, int k_count) {
    if (!(problem.beta > 0.0) || !(problem.beta < 1.0))
        throw DomainError("moment_series requires beta in (0,1)");
    if (k_count < 2 || static_cast<std::size_t>(k_count) > problem.spectrum.size())
        throw DomainError("k_count must lie in [2, spectrum length]");

    const double beta = problem.beta;
    const double a_pow = beta / (1.0 - beta);
    const double m_pow = 1.0 / (1.0 - beta);

    SeriesDiagnosis d;
    d.terms.reserve(static_cast<std::size_t>(k_count));
    d.partial_sums.reserve(static_cast<std::size_t>(k_count));
    double s = 0.0;
    for (int k = 0; k < k_count; ++k) {
        double lambda = problem.spectrum.exponents()[static_cast<std::size_t>(k)];
        double m = moment(problem.mu, problem.p * lambda, 1e-7);
        double term = std::pow(lambda, a_pow) * std::pow(m, m_pow);
        d.terms.push_back(term);
        s += term;
        d.partial_sums.push_back(s);
    }

    // verdict from the tail half of the term sequence
    const std::size_t half = static_cast<std::size_t>(k_count) / 2;
    std::vector<double> idx, logn, logt;
    bool trailing_zero = d.terms.back() == 0.0;
    for (std::size_t k = half; k < d.terms.size(); ++k) {
        if (d.terms[k] > 0.0) {
            idx.push_back(static_cast<double>(k));
            logn.push_back(std::log(static_cast<double>(k) + 1.0));
            logt.push_back(std::log(d.terms[k]));
        }
    }
    if (idx.empty()) {
        d.verdict = Verdict::Converges;
        d.slope = 0.0;
        return d;
    }
    LineFit per_index = fit_slope(idx, logt);
    LineFit elasticity = fit_slope(logn, logt);
    // S_n ~ n^s implies term elasticity s - 1
    d.slope = elasticity.ok ? 1.0 + elasticity.slope : 0.0;
    if (trailing_zero || (per_index.ok && per_index.slope < -0.1)) {
        d.verdict = Verdict::Converges;
    } else if (elasticity.ok && std::fabs(d.slope - 1.0) <= 0.02) {
        d.verdict = Verdict::Diverges;
    } else if (per_index.ok && per_index.slope > 0.1) {
        d.verdict = Verdict::Diverges;  // terms grow, so the series cannot converge
    } else {
        d.verdict = Verdict::Inconclusive;
    }
    return d;
}

namespace {

double inner_cauchy_integral(const MeasureSpec& mu, double rho,
                             const quad::QuadratureConfig& cfg) {
    return integrate(mu, [rho](double t) { return 1.0 / (1.0 - rho * t); }, cfg);
}

}  // namespace

SeriesDiagnosis double_integral_condition(const MeasureSpec& mu, double beta,
                                          const std::vector<double>& delta_grid,
                                          const quad::QuadratureConfig& cfg) {
    if (!(beta > 0.0) || !(beta < 1.0))
        throw DomainError("double_integral_condition requires beta in (0,1)");
    if (delta_grid.size() < 3) throw DomainError("delta grid needs at least 3 points");
    std::vector<double> deltas = delta_grid;
    std::sort(deltas.begin(), deltas.end(), std::greater<double>());
    deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
    for (double d : deltas) {
        if (!(d > 0.0) || !(d < 1.0)) throw DomainError("delta grid must lie in (0,1)");
    }

    quad::QuadratureConfig inner_cfg = cfg;
    inner_cfg.rel_tol = std::max(cfg.rel_tol, 1e-8);
    quad::QuadratureConfig outer_cfg = cfg;
    outer_cfg.rel_tol = std::max(cfg.rel_tol, 1e-6);

    MeasureSpec inner_mu = mu;
    if (mu.kind() == MeasureKind::Cantor) {
        // resolve the inner kernel down to scales two decades below delta_min
        double need = std::log(deltas.back() * 1e-2) / std::log(mu.contraction());
        int depth = std::clamp(static_cast<int>(std::ceil(need)), 10, 22);
        inner_mu = mu.with_cantor_depth(std::min(depth, 22));
    }

    const double power = 1.0 / (1.0 - beta);
    SeriesDiagnosis d;
    for (double delta : deltas) {
        const double scale = 1.0 - delta;
        auto outer = [&](double s, double) {
            double rho = scale * s;
            return std::pow(inner_cauchy_integral(inner_mu, rho, inner_cfg), power);
        };
        double I = scale * quad::integrate_de(outer, outer_cfg).value;
        d.partial_sums.push_back(I);
    }
    // increments per unit of log(1/delta)
    for (std::size_t j = 0; j + 1 < deltas.size(); ++j) {
        double dlog = std::log(deltas[j] / deltas[j + 1]);
        d.terms.push_back((d.partial_sums[j + 1] - d.partial_sums[j]) / dlog);
    }

    const double i_last = d.partial_sums.back();
    const double g_last = d.terms.back();
    const double g_prev = d.terms[d.terms.size() - 2];
    d.slope = g_last;
    if (g_last <= 1e-9 * std::max(1.0, i_last)) {
        d.verdict = Verdict::Converges;  // increments vanished
    } else if (g_prev <= 0.0) {
        d.verdict = Verdict::Inconclusive;
    } else {
        double ratio = g_last / g_prev;
        if (ratio <= 0.8) {
            d.verdict = Verdict::Converges;  // geometrically decaying increments
        } else if (ratio >= 0.9) {
            d.verdict = Verdict::Diverges;  // log-like or faster growth
        } else {
            d.verdict = Verdict::Inconclusive;
        }
    }
    return d;
}

RatioReport embedding_ratio(const MuntzPolynomial& f, const EmbeddingProblem& problem,
                            const quad::QuadratureConfig& cfg) {
    if (f.is_zero()) throw DegenerateInputError("zero polynomial");
    const double q = problem.p / problem.beta;
    double num = lp_norm(f, problem.mu, problem.p, cfg);
    double den = problem.rhs_alpha ? lp_norm_jacobi(f, q, *problem.rhs_alpha - 1.0, cfg)
                                   : lp_norm_jacobi(f, q, 0.0, cfg);
    return RatioReport{num / den,
                       "",
                       {{"p", problem.p},
                        {"beta", problem.beta},
                        {"rhs_alpha", problem.rhs_alpha ? *problem.rhs_alpha : 0.0}}};
}

SearchResult embedding_constant_search(const EmbeddingProblem& problem, int trials,
                                       std::uint64_t seed, int ascent_steps,
                                       const quad::QuadratureConfig& cfg) {
    if (trials < 1) throw DomainError("trials must be at least 1");
    if (ascent_steps < 0) throw DomainError("ascent_steps must be nonnegative");

    SearchResult result;
    result.trials = trials;
    bool have = false;
    for (int i = 0; i < trials; ++i) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(i));
        MuntzPolynomial f = random_poly(problem.spectrum, rng);
        if (f.is_zero()) {
            ++result.skipped;
            continue;
        }
        double r;
        try {
            r = embedding_ratio(f, problem, cfg).ratio;
        } catch (const Error&) {
            ++result.skipped;
            continue;
        }
        if (!std::isfinite(r)) {
            ++result.skipped;
            continue;
        }
        if (!have || r > result.best.ratio) {
            result.best.ratio = r;
            result.best.witness = "trial=" + std::to_string(i);
            result.witness = f;
            have = true;
        }
    }
    if (!have) throw DegenerateInputError("no usable sample in the search");

    // multiplicative coordinate ascent with step halving
    std::vector<Term> coeffs = result.witness.terms();
    double step = 0.5;
    for (int round = 0; round < ascent_steps; ++round, step *= 0.5) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            for (double factor : {1.0 + step, 1.0 - step}) {
                if (factor == 0.0) continue;
                std::vector<Term> cand = coeffs;
                cand[i].coeff *= factor;
                MuntzPolynomial g = MuntzPolynomial::generalized(cand);
                if (g.is_zero()) continue;
                double r;
                try {
                    r = embedding_ratio(g, problem, cfg).ratio;
                } catch (const Error&) {
                    continue;
                }
                if (std::isfinite(r) && r > result.best.ratio) {
                    result.best.ratio = r;
                    result.best.witness += "+ascent";
                    coeffs = cand;
                    result.witness = g;
                }
            }
        }
    }
    result.best.context = {{"p", problem.p},
                           {"beta", problem.beta},
                           {"trials", static_cast<double>(trials)},
                           {"ascent_steps", static_cast<double>(ascent_steps)}};
    return result;
}

std::vector<TailNecessityRow> tail_necessity_check(const EmbeddingProblem& problem,
                                                   std::size_t k_begin, std::size_t k_end) {
    if (k_begin >= k_end || k_end > problem.spectrum.size())
        throw DomainError("index range out of bounds");
    std::vector<TailNecessityRow> rows;
    rows.reserve(k_end - k_begin);
    const double ep = std::exp(problem.p);
    for (std::size_t k = k_begin; k < k_end; ++k) {
        double lambda = problem.spectrum.exponents()[k];
        double eps = std::min(1.0, 1.0 / lambda);
        rows.push_back(TailNecessityRow{lambda, tail(problem.mu, eps),
                                        ep * moment(problem.mu, problem.p * lambda),
                                        std::pow(lambda, -problem.beta)});
    }
    return rows;
}

RatioReport reverse_embedding_check(const MuntzPolynomial& f, double p, double alpha,
                                    const quad::QuadratureConfig& cfg) {
    if (f.is_zero()) throw DegenerateInputError("zero polynomial");
    if (!(alpha > -1.0) || !(alpha < 0.0)) throw DomainError("alpha must lie in (-1, 0)");
    const double beta = 1.0 + alpha;
    if (!(p > beta)) throw DomainError("requires p > beta = 1 + alpha");
    double num = lp_norm_jacobi(f, p / beta, 0.0, cfg);
    double den = lp_norm_jacobi(f, p, alpha, cfg);
    return RatioReport{num / den, "", {{"p", p}, {"alpha", alpha}, {"beta", beta}}};
}

namespace {

double phi_multi(const std::vector<double>& z, const std::vector<double>& ps) {
    double num = 1.0;
    double den = 1.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        num *= z[j];
        den += std::pow(z[j], ps[j]);
    }
    return num / den;
}

}  // namespace

SchurSums schur_kernel_sums(const BlockSpectrum& s, const std::vector<double>& exponents,
                            double beta, int i_max) {
    const std::size_t n = exponents.size();
    if (n < 2) throw DomainError("need at least two conjugate exponents");
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    double recip = 0.0;
    for (double p : exponents) {
        if (!(p > 1.0)) throw DomainError("conjugate exponents must exceed 1");
        recip += 1.0 / p;
    }
    if (std::fabs(recip - 1.0) > 1e-12)
        throw DomainError("exponents are not conjugate: sum of reciprocals differs from 1");
    const auto& lam = s.exponents();
    const long len = static_cast<long>(lam.size());
    if (i_max < 1 || static_cast<std::size_t>(i_max) > lam.size())
        throw DomainError("i_max must lie in [1, spectrum length]");

    SchurSums sums;
    if (n == 2) {
        const double p = exponents[0];
        auto phi = [&](long i, long j) {
            double x = std::pow(lam[static_cast<std::size_t>(i)] / lam[static_cast<std::size_t>(j)],
                                beta / p);
            return x / (1.0 + std::pow(x, p));
        };
        for (long i = 0; i < len; ++i) {
            double row = 0.0, col = 0.0;
            for (long j = std::max(0L, i - i_max); j <= std::min(len - 1, i + i_max); ++j) {
                row += phi(i, j);
                col += phi(j, i);
            }
            sums.row_sup = std::max(sums.row_sup, row);
            sums.col_sup = std::max(sums.col_sup, col);
        }
        return sums;
    }

    const std::size_t m = n - 1;  // free indices in the multilinear kernel
    std::vector<double> z(m);
    std::vector<double> ps(exponents.begin(), exponents.end() - 1);

    // row: fix i_n, sum over all (i_1..i_(n-1)) within the window of i_n
    for (long in = 0; in < len; ++in) {
        const long lo = std::max(0L, in - i_max);
        const long hi = std::min(len - 1, in + i_max);
        double total = 0.0;
        std::vector<long> idx(m, lo);
        while (true) {
            for (std::size_t j = 0; j < m; ++j) {
                z[j] = std::pow(lam[static_cast<std::size_t>(idx[j])] /
                                    lam[static_cast<std::size_t>(in)],
                                beta / ps[j]);
            }
            total += phi_multi(z, ps);
            std::size_t carry = 0;
            while (carry < m && ++idx[carry] > hi) {
                idx[carry] = lo;
                ++carry;
            }
            if (carry == m) break;
        }
        sums.row_sup = std::max(sums.row_sup, total);
    }

    // column: fix (i_1..i_(n-1)), sum over i_n within the window of every i_j
    {
        std::vector<long> idx(m, 0);
        while (true) {
            long lo = 0, hi = len - 1;
            for (std::size_t j = 0; j < m; ++j) {
                lo = std::max(lo, idx[j] - i_max);
                hi = std::min(hi, idx[j] + i_max);
            }
            double total = 0.0;
            for (long in = lo; in <= hi; ++in) {
                for (std::size_t j = 0; j < m; ++j) {
                    z[j] = std::pow(lam[static_cast<std::size_t>(idx[j])] /
                                        lam[static_cast<std::size_t>(in)],
                                    beta / ps[j]);
                }
                total += phi_multi(z, ps);
            }
            sums.col_sup = std::max(sums.col_sup, total);
            std::size_t carry = 0;
            while (carry < m && ++idx[carry] >= len) {
                idx[carry] = 0;
                ++carry;
            }
            if (carry == m) break;
        }
    }
    return sums;
}

}  // namespace muntzlab
