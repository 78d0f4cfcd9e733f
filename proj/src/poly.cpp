#include "muntzlab/poly.hpp"

#include <algorithm>
#include <cmath>

#include "muntzlab/kernels.hpp"

namespace muntzlab {

MuntzPolynomial MuntzPolynomial::normalized(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (const Term& t : terms) {
        if (!merged.empty() && merged.back().exponent == t.exponent) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
    MuntzPolynomial f;
    f.terms_ = std::move(merged);
    return f;
}

MuntzPolynomial MuntzPolynomial::muntz(std::vector<Term> terms) {
    for (const Term& t : terms) {
        if (!(t.exponent > 0.0)) throw DomainError("Muntz polynomial exponents must be positive");
    }
    return normalized(std::move(terms));
}

MuntzPolynomial MuntzPolynomial::with_constant(double c0, std::vector<Term> terms) {
    MuntzPolynomial f = muntz(std::move(terms));
    if (c0 != 0.0) f.terms_.insert(f.terms_.begin(), Term{0.0, c0});
    return f;
}

MuntzPolynomial MuntzPolynomial::generalized(std::vector<Term> terms) {
    return normalized(std::move(terms));
}

double MuntzPolynomial::min_exponent() const {
    if (terms_.empty()) throw DegenerateInputError("zero polynomial has no exponents");
    return terms_.front().exponent;
}

double MuntzPolynomial::max_exponent() const {
    if (terms_.empty()) throw DegenerateInputError("zero polynomial has no exponents");
    return terms_.back().exponent;
}

bool MuntzPolynomial::has_constant_term() const {
    return !terms_.empty() && terms_.front().exponent == 0.0;
}

bool MuntzPolynomial::vanishes_at_zero() const {
    return terms_.empty() || terms_.front().exponent > 0.0;
}

double MuntzPolynomial::exponent_sum() const {
    double s = 0.0;
    for (const Term& t : terms_) s += t.exponent;
    return s;
}

std::vector<double> MuntzPolynomial::exponent_vector() const {
    std::vector<double> v(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) v[i] = terms_[i].exponent;
    return v;
}

std::vector<double> MuntzPolynomial::coeff_vector() const {
    std::vector<double> v(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) v[i] = terms_[i].coeff;
    return v;
}

MuntzPolynomial operator+(const MuntzPolynomial& a, const MuntzPolynomial& b) {
    std::vector<Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return MuntzPolynomial::generalized(std::move(terms));
}

MuntzPolynomial operator*(double c, const MuntzPolynomial& f) {
    std::vector<Term> terms = f.terms();
    for (Term& t : terms) t.coeff *= c;
    return MuntzPolynomial::generalized(std::move(terms));
}

double eval(const MuntzPolynomial& f, double t) {
    if (!(t >= 0.0) || t > 1.0) throw DomainError("evaluation point must lie in [0,1]");
    if (t == 0.0) {
        double v = 0.0;
        for (const Term& term : f.terms()) {
            if (term.exponent < 0.0)
                throw DomainError("evaluation at 0 with a negative exponent");
            if (term.exponent == 0.0) v += term.coeff;
        }
        return v;
    }
    const double u = std::log(t);
    double v = 0.0;
    for (const Term& term : f.terms()) {
        v = std::fma(term.coeff, kernels::ref_exp(term.exponent * u), v);
    }
    return v;
}

void eval_many(const MuntzPolynomial& f, std::span<const double> ts, std::span<double> out) {
    if (ts.size() != out.size()) throw DomainError("eval_many: size mismatch");
    std::vector<double> logs(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double t = ts[i];
        if (!(t >= 0.0) || t > 1.0) throw DomainError("evaluation point must lie in [0,1]");
        logs[i] = (t == 0.0) ? 1.0 : std::log(t);  // placeholder fixed below
    }
    const auto lam = f.exponent_vector();
    const auto coef = f.coeff_vector();
    kernels::active().exp_sum(lam, coef, logs, out);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] == 0.0) out[i] = eval(f, 0.0);
    }
}

MuntzPolynomial derivative(const MuntzPolynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const Term& t : f.terms()) {
        if (t.exponent != 0.0) terms.push_back(Term{t.exponent - 1.0, t.exponent * t.coeff});
    }
    return MuntzPolynomial::generalized(std::move(terms));
}

MuntzPolynomial dilate(const MuntzPolynomial& f, double rho) {
    if (!(rho > 0.0) || rho > 1.0) throw DomainError("dilation factor must lie in (0,1]");
    if (rho == 1.0) return f;
    const double lr = std::log(rho);
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const Term& t : f.terms()) {
        double c = t.coeff * kernels::ref_exp(t.exponent * lr);
        if (c != 0.0) terms.push_back(Term{t.exponent, c});
    }
    return MuntzPolynomial::generalized(std::move(terms));
}

namespace detail {

std::vector<double> composite_grid(double lambda_max, bool include_zero) {
    std::vector<double> grid;
    grid.reserve(2049 + 257);
    for (int i = include_zero ? 0 : 1; i <= 2048; ++i) {
        grid.push_back(static_cast<double>(i) / 2048.0);
    }
    if (lambda_max > 20.0) {
        // maxima of high-exponent blocks sit within O(1/lambda) of 1
        const double s0 = 10.0 / lambda_max;
        for (int j = 0; j <= 255; ++j) {
            grid.push_back(1.0 - s0 * std::pow(10.0, -4.0 * j / 255.0));
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    return grid;
}

std::vector<double> sign_changes(const MuntzPolynomial& f) {
    std::vector<double> roots;
    if (f.size() < 2) return roots;
    std::vector<double> grid = composite_grid(f.max_exponent(), false);
    std::vector<double> vals(grid.size());
    eval_many(f, grid, vals);
    auto push = [&roots](double r) {
        if (r > 0.0 && r < 1.0 && (roots.empty() || r - roots.back() > 1e-13)) {
            roots.push_back(r);
        }
    };
    // zeros from underflow are not crossings; bisect between nonzero values
    // of opposite sign (possibly across a run of exact zeros)
    std::size_t last = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (vals[i] == 0.0) continue;
        if (last < grid.size() && (vals[last] < 0.0) != (vals[i] < 0.0)) {
            double a = grid[last], b = grid[i];
            double fa = vals[last];
            for (int it = 0; it < 80 && (b - a) > 1e-15; ++it) {
                double m = 0.5 * (a + b);
                double fm = eval(f, m);
                if (fm == 0.0) {
                    // continue toward the sign flip on the right half
                    a = m;
                    fa = 0.0;
                    continue;
                }
                if (fa != 0.0 && (fa < 0.0) != (fm < 0.0)) {
                    b = m;
                } else if (fa != 0.0) {
                    a = m;
                    fa = fm;
                } else {
                    if ((fm < 0.0) != (vals[i] < 0.0)) {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
            }
            push(0.5 * (a + b));
        }
        last = i;
    }
    return roots;
}

}  // namespace detail

namespace {

double abs_eval(const MuntzPolynomial& f, double t) { return std::fabs(eval(f, t)); }

}  // namespace

SupNorm sup_norm(const MuntzPolynomial& f) {
    if (f.is_zero()) throw DegenerateInputError("sup-norm of the zero polynomial");
    if (f.min_exponent() < 0.0)
        throw DomainError("sup-norm unbounded: negative exponent present");

    std::vector<double> grid = detail::composite_grid(f.max_exponent(), true);
    std::vector<double> vals(grid.size());
    eval_many(f, grid, vals);
    std::size_t best = 0;
    double best_val = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double a = std::fabs(vals[i]);
        if (a > best_val) {
            best_val = a;
            best = i;
        }
    }

    double lo = (best == 0) ? grid[0] : grid[best - 1];
    double hi = (best + 1 == grid.size()) ? grid[best] : grid[best + 1];
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = abs_eval(f, x1);
    double f2 = abs_eval(f, x2);
    for (int it = 0; it < 120 && (b - a) > 1e-14; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = abs_eval(f, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = abs_eval(f, x1);
        }
    }
    SupNorm result{best_val, grid[best]};
    for (auto [x, v] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
        if (v > result.value) result = SupNorm{v, x};
    }
    return result;
}

BlockDecomposition block_decompose(const MuntzPolynomial& f, const BlockSpectrum& s) {
    BlockDecomposition d;
    std::vector<std::vector<Term>> buckets(s.block_count());
    for (const Term& t : f.terms()) {
        auto idx = s.find_exponent(t.exponent);
        if (!idx) throw MembershipError("polynomial exponent not present in spectrum");
        buckets[s.block_of_index(*idx)].push_back(t);
    }
    d.blocks.reserve(buckets.size());
    for (auto& bucket : buckets) d.blocks.push_back(MuntzPolynomial::generalized(std::move(bucket)));
    return d;
}

}  // namespace muntzlab
