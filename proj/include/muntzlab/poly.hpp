#pragma once

#include <span>
#include <vector>

#include "muntzlab/errors.hpp"
#include "muntzlab/spectrum.hpp"

namespace muntzlab {

struct Term {
    double exponent;
    double coeff;
};

// Finite combination sum_k a_k t^(lambda_k).  Exponents are kept strictly
// increasing and zero coefficients are never stored.  A leading exponent-0
// term is the explicit constant; factories control whether non-positive
// exponents are admitted (derivatives produce them).
class MuntzPolynomial {
public:
    MuntzPolynomial() = default;

    // All exponents strictly positive.
    static MuntzPolynomial muntz(std::vector<Term> terms);
    // Constant c0 plus a strict Muntz part.
    static MuntzPolynomial with_constant(double c0, std::vector<Term> terms);
    // Any real exponents (results of differentiation).
    static MuntzPolynomial generalized(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    double min_exponent() const;
    double max_exponent() const;
    bool has_constant_term() const;
    // f(0) == 0: no constant term and no negative exponents.
    bool vanishes_at_zero() const;
    double exponent_sum() const;

    std::vector<double> exponent_vector() const;
    std::vector<double> coeff_vector() const;

private:
    static MuntzPolynomial normalized(std::vector<Term> terms);
    std::vector<Term> terms_;
};

MuntzPolynomial operator+(const MuntzPolynomial& a, const MuntzPolynomial& b);
MuntzPolynomial operator*(double c, const MuntzPolynomial& f);

// Pointwise evaluation on [0,1].  t^lambda goes through exp(lambda log t)
// with the t = 0 limit handled separately.
double eval(const MuntzPolynomial& f, double t);

// Vectorized evaluation; out[i] = f(ts[i]).  ts entries must lie in [0,1].
void eval_many(const MuntzPolynomial& f, std::span<const double> ts, std::span<double> out);

// Term-wise derivative (lambda a) t^(lambda-1); constants vanish.
MuntzPolynomial derivative(const MuntzPolynomial& f);

// T_rho: coefficients a_k -> a_k rho^(lambda_k), rho in (0,1].
MuntzPolynomial dilate(const MuntzPolynomial& f, double rho);

struct SupNorm {
    double value;
    double argmax;
};

// Max of |f| over [0,1] with its location; composite grid (uniform 2048
// points plus a log cluster within 10/lambda_max of t = 1) refined by golden
// section.  Deterministic.
SupNorm sup_norm(const MuntzPolynomial& f);

struct BlockDecomposition {
    std::vector<MuntzPolynomial> blocks;
};

// Partition of f by the spectrum's blocks; every exponent of f must belong
// to the spectrum.
BlockDecomposition block_decompose(const MuntzPolynomial& f, const BlockSpectrum& s);

namespace detail {

// Shared evaluation grid: uniform 2048 points plus a log cluster within
// 10/lambda_max of t = 1.  Sorted, deduplicated.
std::vector<double> composite_grid(double lambda_max, bool include_zero);

// Sign changes of f in (0, 1), located by grid scan plus bisection.
std::vector<double> sign_changes(const MuntzPolynomial& f);

}  // namespace detail

}  // namespace muntzlab
