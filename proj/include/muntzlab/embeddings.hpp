#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "muntzlab/inequalities.hpp"
#include "muntzlab/measure.hpp"
#include "muntzlab/poly.hpp"
#include "muntzlab/spectrum.hpp"

namespace muntzlab {

// One Carleson-embedding instance: does ||f||_{L^p(d mu)} <= C ||f||_{p/beta}
// hold over the spectrum?  With rhs_alpha set the right-hand norm is taken
// against nu_(rhs_alpha - 1) instead of Lebesgue measure.
struct EmbeddingProblem {
    BlockSpectrum spectrum;
    MeasureSpec mu;
    double p;
    double beta;
    std::optional<double> rhs_alpha;

    static EmbeddingProblem create(BlockSpectrum spectrum, MeasureSpec mu, double p, double beta,
                                   std::optional<double> rhs_alpha = std::nullopt);

private:
    EmbeddingProblem(BlockSpectrum s, MeasureSpec m, double p_, double beta_,
                     std::optional<double> rhs)
        : spectrum(std::move(s)), mu(std::move(m)), p(p_), beta(beta_), rhs_alpha(rhs) {}
};

enum class Verdict { Converges, Diverges, Inconclusive };
const char* to_string(Verdict v);

struct SeriesDiagnosis {
    std::vector<double> terms;
    std::vector<double> partial_sums;
    Verdict verdict = Verdict::Inconclusive;
    // Fitted log-log growth rate of the partial sums (1 = linear growth).
    double slope = 0.0;
};

// Partial sums of lambda_k^(beta/(1-beta)) moment(mu, p lambda_k)^(1/(1-beta))
// over the first K spectrum exponents, with a heuristic verdict:
//   - terms decaying faster than exp(-0.1 k)  -> Converges
//   - partial-sum growth exponent within 0.02 of linear, or growing terms
//     -> Diverges
//   - otherwise Inconclusive
SeriesDiagnosis moment_series(const EmbeddingProblem& problem, int k_count);

// Truncated outer integrals I(delta) = int_0^(1-delta) (int d mu / (1 - rho t))^(1/(1-beta)) d rho
// over the delta grid; verdict from the behavior of the increments per decade.
SeriesDiagnosis double_integral_condition(const MeasureSpec& mu, double beta,
                                          const std::vector<double>& delta_grid,
                                          const quad::QuadratureConfig& cfg);

// ||f||_{L^p(d mu)} / ||f||_{L^(p/beta)(rhs measure)}
RatioReport embedding_ratio(const MuntzPolynomial& f, const EmbeddingProblem& problem,
                            const quad::QuadratureConfig& cfg);

struct SearchResult {
    RatioReport best;
    MuntzPolynomial witness;
    int trials = 0;
    int skipped = 0;
};

// Best embedding ratio over seeded random polynomials followed by
// multiplicative coordinate ascent (step halving per round).  Deterministic
// given (trials, seed, ascent_steps).
SearchResult embedding_constant_search(const EmbeddingProblem& problem, int trials,
                                       std::uint64_t seed, int ascent_steps,
                                       const quad::QuadratureConfig& cfg);

struct TailNecessityRow {
    double lambda;
    double tail_value;    // mu([1 - 1/lambda, 1])
    double moment_bound;  // e^p int t^(p lambda) d mu
    double beta_power;    // lambda^(-beta)
};

// Rows of the tail-vs-moment domination chain for k in [k_begin, k_end).
std::vector<TailNecessityRow> tail_necessity_check(const EmbeddingProblem& problem,
                                                   std::size_t k_begin, std::size_t k_end);

// ||f||_{L^(p/beta)} / ||f||_{L^p(nu_alpha)} with beta = 1 + alpha, alpha in (-1,0).
RatioReport reverse_embedding_check(const MuntzPolynomial& f, double p, double alpha,
                                    const quad::QuadratureConfig& cfg);

struct SchurSums {
    double row_sup = 0.0;
    double col_sup = 0.0;
};

// Windowed Schur sums of the kernel Phi(z) = z1...z_(n-1) / (1 + sum z_j^(p_j))
// at z_j = (lambda_(i_j)/lambda_(i_n))^(beta/p_j).  `exponents` lists all n
// conjugate exponents (sum of reciprocals = 1); indices range over the
// spectrum with every i_j within i_max of the row index.
SchurSums schur_kernel_sums(const BlockSpectrum& s, const std::vector<double>& exponents,
                            double beta, int i_max);

}  // namespace muntzlab
