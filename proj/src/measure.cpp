#include "muntzlab/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>

#include "muntzlab/kernels.hpp"

namespace muntzlab {

struct MeasureSpec::CantorCache {
    std::mutex mu;
    std::vector<double> integer_moments;  // m_0, m_1, ...
};

struct CantorAccess {
    static MeasureSpec::CantorCache& cache(const MeasureSpec& m) { return *m.cache_; }
};

MeasureSpec MeasureSpec::jacobi(double alpha) {
    if (!(alpha > -1.0)) throw DomainError("jacobi weight requires alpha > -1");
    MeasureSpec m;
    m.kind_ = MeasureKind::Jacobi;
    m.alpha_ = alpha;
    return m;
}

MeasureSpec MeasureSpec::cantor(double r, int depth) {
    if (!(r > 0.0) || r > 0.5) throw DomainError("cantor contraction must lie in (0, 1/2]");
    if (depth < 4 || depth > 24) throw DomainError("cantor depth must lie in [4, 24]");
    MeasureSpec m;
    m.kind_ = MeasureKind::Cantor;
    m.r_ = r;
    m.depth_ = depth;
    m.cache_ = std::make_shared<CantorCache>();
    return m;
}

MeasureSpec MeasureSpec::atomic(std::vector<double> points, std::vector<double> weights) {
    if (points.empty() || points.size() != weights.size())
        throw DomainError("atomic measure needs matching nonempty points and weights");
    MeasureSpec m;
    m.kind_ = MeasureKind::Atomic;
    m.atoms_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i] >= 0.0) || points[i] > 1.0) throw DomainError("atom outside [0,1]");
        if (!(weights[i] > 0.0)) throw DomainError("atom weights must be positive");
        m.atoms_.emplace_back(points[i], weights[i]);
    }
    std::sort(m.atoms_.begin(), m.atoms_.end());
    return m;
}

MeasureSpec MeasureSpec::tail_envelope(double beta, double c) {
    if (!(beta > 0.0)) throw DomainError("tail envelope requires beta > 0");
    if (!(c > 0.0)) throw DomainError("tail envelope requires C > 0");
    MeasureSpec m;
    m.kind_ = MeasureKind::TailEnvelope;
    m.beta_ = beta;
    m.c_ = c;
    return m;
}

double MeasureSpec::cantor_beta() const {
    if (kind_ != MeasureKind::Cantor) throw DomainError("cantor_beta on non-Cantor measure");
    return std::log(2.0) / std::log(1.0 / r_);
}

double MeasureSpec::mass() const {
    switch (kind_) {
        case MeasureKind::Jacobi:
            return 1.0 / (alpha_ + 1.0);
        case MeasureKind::Cantor:
            return 1.0;
        case MeasureKind::Atomic: {
            double s = 0.0;
            for (const auto& [t, w] : atoms_) s += w;
            return s;
        }
        case MeasureKind::TailEnvelope:
            return c_;
    }
    return 0.0;
}

MeasureSpec MeasureSpec::with_cantor_depth(int depth) const {
    if (kind_ != MeasureKind::Cantor) return *this;
    return cantor(r_, depth);
}

namespace {

double cantor_tail(double r, double eps) {
    if (eps <= 0.0) return 0.0;
    if (eps >= 1.0) return 1.0;
    // exact at construction scales r^m
    double m_guess = std::round(std::log(eps) / std::log(r));
    if (m_guess >= 0.0 && m_guess <= 1074.0) {
        double power = std::pow(r, m_guess);
        if (std::fabs(eps - power) <= 1e-12 * power) {
            return std::ldexp(1.0, -static_cast<int>(m_guess));
        }
    }
    double acc = 0.0;
    double mass = 1.0;
    double e = eps;
    for (int d = 0; d < 1200 && mass > 0.0; ++d) {
        if (e >= 1.0) return acc + mass;
        if (e <= 0.0) return acc;
        if (e > 1.0 - r) {
            acc += 0.5 * mass;
            e = (e - (1.0 - r)) / r;
            mass *= 0.5;
            continue;
        }
        if (e >= r) return acc + 0.5 * mass;  // plateau between the two pieces
        e /= r;
        mass *= 0.5;
    }
    return acc;
}

// Centered atoms of the depth-D self-similar refinement, streamed in mask
// order: point(mask) = r^D/2 + (1-r) sum_j bit_j(mask) r^j.
class CantorAtomStream {
public:
    CantorAtomStream(double r, int depth) : depth_(depth) {
        offsets_.resize(static_cast<std::size_t>(depth));
        double p = 1.0;
        for (int j = 0; j < depth; ++j) {
            offsets_[static_cast<std::size_t>(j)] = (1.0 - r) * p;
            p *= r;
        }
        center_ = 0.5 * p;
        count_ = std::uint64_t{1} << depth;
    }

    std::uint64_t count() const { return count_; }

    void fill(std::uint64_t first, std::size_t n, double* out) const {
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t mask = first + i;
            double x = center_;
            while (mask != 0) {
                int j = std::countr_zero(mask);
                x += offsets_[static_cast<std::size_t>(j)];
                mask &= mask - 1;
            }
            out[i] = x;
        }
    }

private:
    int depth_;
    std::vector<double> offsets_;
    double center_ = 0.0;
    std::uint64_t count_ = 0;
};

// sum over depth-D atoms of |shift(t)|^lambda / 2^D, where shift in {-,0,+}
// moves each atom to its cell's left endpoint, center, or right endpoint.
enum class AtomShift { Left, Center, Right };

double cantor_atom_power_sum(double r, int depth, double lambda, AtomShift shift) {
    CantorAtomStream stream(r, depth);
    const double half_cell = 0.5 * std::pow(r, depth);
    const double delta = (shift == AtomShift::Left) ? -half_cell
                         : (shift == AtomShift::Right) ? half_cell
                                                       : 0.0;
    const double w = std::ldexp(1.0, -depth);
    constexpr std::size_t kChunk = 1 << 15;
    std::vector<double> pts(kChunk);
    std::vector<double> wts(kChunk, w);
    double total = 0.0;
    for (std::uint64_t first = 0; first < stream.count();) {
        std::size_t n = static_cast<std::size_t>(
            std::min<std::uint64_t>(kChunk, stream.count() - first));
        stream.fill(first, n, pts.data());
        if (delta != 0.0) {
            for (std::size_t i = 0; i < n; ++i) pts[i] = std::max(0.0, pts[i] + delta);
        }
        total += kernels::active().abs_pow_weighted_sum({pts.data(), n}, {wts.data(), n}, lambda);
        first += n;
    }
    return total;
}

// m_n (1 - r^n) = (1/2) sum_{k<n} C(n,k) r^k (1-r)^(n-k) m_k, m_0 = 1.
void extend_integer_moments(std::vector<double>& m, double r, int n_target) {
    if (m.empty()) m.push_back(1.0);
    for (int n = static_cast<int>(m.size()); n <= n_target; ++n) {
        double term = std::pow(1.0 - r, n);  // C(n,0) r^0 (1-r)^n
        double s = 0.0;
        for (int k = 0; k < n; ++k) {
            s += term * m[static_cast<std::size_t>(k)];
            term *= (static_cast<double>(n - k) / static_cast<double>(k + 1)) * (r / (1.0 - r));
        }
        m.push_back(0.5 * s / (1.0 - std::pow(r, n)));
    }
}

}  // namespace

double tail(const MeasureSpec& mu, double eps) {
    if (!(eps > 0.0) || eps > 1.0) throw DomainError("tail requires eps in (0,1]");
    switch (mu.kind()) {
        case MeasureKind::Jacobi:
            return std::pow(eps, mu.alpha() + 1.0) / (mu.alpha() + 1.0);
        case MeasureKind::Atomic: {
            double s = 0.0;
            for (const auto& [t, w] : mu.atoms()) {
                if (t >= 1.0 - eps) s += w;
            }
            return s;
        }
        case MeasureKind::Cantor:
            return cantor_tail(mu.contraction(), eps);
        case MeasureKind::TailEnvelope:
            return mu.envelope_constant() * std::pow(eps, mu.envelope_beta());
    }
    return 0.0;
}

MomentApproximation cantor_moment_atoms(const MeasureSpec& mu, double lambda, int depth) {
    if (mu.kind() != MeasureKind::Cantor) throw DomainError("atom approximation is Cantor-only");
    if (!(lambda >= 0.0)) throw DomainError("moment requires lambda >= 0");
    if (depth < 1 || depth > 24) throw DomainError("atom depth must lie in [1, 24]");
    const double r = mu.contraction();
    double mid = cantor_atom_power_sum(r, depth, lambda, AtomShift::Center);
    // t^lambda is monotone, so the endpoint sums bracket the true moment
    double lo = cantor_atom_power_sum(r, depth, lambda, AtomShift::Left);
    double hi = cantor_atom_power_sum(r, depth, lambda, AtomShift::Right);
    return MomentApproximation{mid, std::max(hi - mid, mid - lo), depth};
}

double moment(const MeasureSpec& mu, double lambda, double tol) {
    if (!(lambda >= 0.0)) throw DomainError("moment requires lambda >= 0");
    if (!(tol > 0.0)) throw DomainError("moment tolerance must be positive");
    switch (mu.kind()) {
        case MeasureKind::Jacobi:
            return quad::beta_function(lambda + 1.0, mu.alpha() + 1.0);
        case MeasureKind::Atomic: {
            double s = 0.0;
            for (const auto& [t, w] : mu.atoms()) s += w * std::pow(t, lambda);
            return s;
        }
        case MeasureKind::TailEnvelope:
            throw DomainError("tail envelope supports tail queries only");
        case MeasureKind::Cantor:
            break;
    }
    const double r = mu.contraction();
    if (r == 0.5) return 1.0 / (lambda + 1.0);  // the r = 1/2 measure is Lebesgue
    if (lambda == std::floor(lambda) && lambda <= 600.0) {
        auto& cache = CantorAccess::cache(mu);
        std::scoped_lock lock(cache.mu);
        extend_integer_moments(cache.integer_moments, r, static_cast<int>(lambda));
        return cache.integer_moments[static_cast<std::size_t>(lambda)];
    }
    MomentApproximation approx{0.0, 0.0, 0};
    for (int depth = mu.cantor_depth();; depth += 2) {
        approx = cantor_moment_atoms(mu, lambda, depth);
        if (approx.error_bound <= tol) return approx.value;
        if (depth >= 24) break;
        depth = std::min(depth, 22);
    }
    throw AccuracyError("cantor moment tolerance unreachable at depth 24", approx.value,
                        approx.error_bound);
}

double integrate(const MeasureSpec& mu, const std::function<double(double)>& g,
                 const quad::QuadratureConfig& cfg) {
    switch (mu.kind()) {
        case MeasureKind::Jacobi:
            return quad::integrate_weighted(g, mu.alpha(), cfg);
        case MeasureKind::Atomic: {
            double s = 0.0;
            for (const auto& [t, w] : mu.atoms()) s += w * g(t);
            return s;
        }
        case MeasureKind::TailEnvelope:
            throw DomainError("tail envelope supports tail queries only");
        case MeasureKind::Cantor: {
            CantorAtomStream stream(mu.contraction(), mu.cantor_depth());
            const double w = std::ldexp(1.0, -mu.cantor_depth());
            constexpr std::size_t kChunk = 1 << 15;
            std::vector<double> pts(kChunk);
            double total = 0.0;
            for (std::uint64_t first = 0; first < stream.count();) {
                std::size_t n = static_cast<std::size_t>(
                    std::min<std::uint64_t>(kChunk, stream.count() - first));
                stream.fill(first, n, pts.data());
                double chunk = 0.0;
                for (std::size_t i = 0; i < n; ++i) chunk += g(pts[i]);
                total += w * chunk;
                first += n;
            }
            return total;
        }
    }
    return 0.0;
}

BetaClassFit beta_class_fit(const MeasureSpec& mu, std::vector<double> eps_grid) {
    if (eps_grid.size() < 4) throw DomainError("beta_class_fit needs at least 4 grid points");
    double lo = eps_grid[0], hi = eps_grid[0];
    for (double e : eps_grid) {
        if (!(e > 0.0) || e > 1.0) throw DomainError("eps grid must lie in (0,1]");
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    if (hi / lo < 1e3) throw DomainError("eps grid must span at least 3 decades");

    std::vector<double> tails(eps_grid.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        tails[i] = tail(mu, eps_grid[i]);
        if (tails[i] > 0.0) {
            double x = std::log(eps_grid[i]);
            double y = std::log(tails[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++n;
        }
    }
    if (n < 2) throw DegenerateInputError("all tails vanish on the grid");
    double denom = static_cast<double>(n) * sxx - sx * sx;
    if (denom == 0.0) throw DegenerateInputError("eps grid does not determine a slope");
    BetaClassFit fit;
    fit.beta_hat = (static_cast<double>(n) * sxy - sx * sy) / denom;
    double intercept = (sy - fit.beta_hat * sx) / static_cast<double>(n);
    fit.grid = std::move(eps_grid);
    fit.residuals.assign(fit.grid.size(), 0.0);
    fit.constant_hat = 0.0;
    for (std::size_t i = 0; i < fit.grid.size(); ++i) {
        if (tails[i] > 0.0) {
            fit.residuals[i] =
                std::log(tails[i]) - (intercept + fit.beta_hat * std::log(fit.grid[i]));
            fit.constant_hat =
                std::max(fit.constant_hat, tails[i] / std::pow(fit.grid[i], fit.beta_hat));
        }
    }
    return fit;
}

double tail_envelope_constant(const MeasureSpec& mu, double beta,
                              const std::vector<double>& grid) {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (grid.empty()) throw DomainError("empty grid");
    double c = 0.0;
    for (double e : grid) {
        if (!(e > 0.0) || e > 1.0) throw DomainError("eps grid must lie in (0,1]");
        c = std::max(c, tail(mu, e) / std::pow(e, beta));
    }
    return c;
}

}  // namespace muntzlab
