#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "muntzlab/errors.hpp"
#include "muntzlab/quad.hpp"

namespace muntzlab {

enum class MeasureKind { Jacobi, Cantor, Atomic, TailEnvelope };

// Borel measure on [0,1]: Jacobi weight (1-t)^alpha dt, self-similar Cantor
// measure (maps x -> rx and x -> rx + 1 - r, both weight 1/2), finite atomic
// measure, or a synthetic tail envelope C eps^beta (tail queries only).
// Immutable; internal caches are lazily built and lock-protected.
class MeasureSpec {
public:
    static MeasureSpec jacobi(double alpha);
    static MeasureSpec cantor(double r, int depth = 20);
    static MeasureSpec atomic(std::vector<double> points, std::vector<double> weights);
    static MeasureSpec tail_envelope(double beta, double c);

    MeasureKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double contraction() const { return r_; }
    int cantor_depth() const { return depth_; }
    double envelope_beta() const { return beta_; }
    double envelope_constant() const { return c_; }
    const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }

    // Hausdorff-dimension exponent of the Cantor family: log 2 / log(1/r).
    double cantor_beta() const;
    double mass() const;

    MeasureSpec with_cantor_depth(int depth) const;

private:
    MeasureSpec() = default;
    MeasureKind kind_ = MeasureKind::Jacobi;
    double alpha_ = 0.0;
    double r_ = 0.0;
    int depth_ = 20;
    double beta_ = 0.0;
    double c_ = 0.0;
    std::vector<std::pair<double, double>> atoms_;  // sorted by position

    struct CantorCache;
    std::shared_ptr<CantorCache> cache_;
    friend struct CantorAccess;
};

// mu([1 - eps, 1]).  Exact closed forms for Jacobi and atomic; for Cantor,
// exact at construction scales r^m and depth-limited self-similar descent
// elsewhere.
double tail(const MeasureSpec& mu, double eps);

// Integral of t^lambda d mu with a certified absolute error bound <= tol.
// Jacobi and integer-lambda Cantor moments are closed-form/recursive; other
// Cantor moments use centered atom sums whose error is bracketed by the
// left/right endpoint sums.
double moment(const MeasureSpec& mu, double lambda, double tol = 1e-6);

struct MomentApproximation {
    double value;
    double error_bound;
    int depth;
};

// Atom-sum approximation of a Cantor moment at a fixed construction depth.
MomentApproximation cantor_moment_atoms(const MeasureSpec& mu, double lambda, int depth);

// Integral of a bounded function against the measure.
double integrate(const MeasureSpec& mu, const std::function<double(double)>& g,
                 const quad::QuadratureConfig& cfg);

struct BetaClassFit {
    double beta_hat = 0.0;
    double constant_hat = 0.0;
    std::vector<double> grid;
    std::vector<double> residuals;  // log-space residuals; 0 for zero-tail points
};

// Least-squares fit of log tail(eps) against log eps over the grid (zero
// tails ignored); constant_hat = sup tail(eps)/eps^beta_hat over the grid.
BetaClassFit beta_class_fit(const MeasureSpec& mu, std::vector<double> eps_grid);

// sup over the grid of tail(eps)/eps^beta for a caller-supplied beta.
double tail_envelope_constant(const MeasureSpec& mu, double beta,
                              const std::vector<double>& grid);

}  // namespace muntzlab
