#include "muntzlab/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace muntzlab {

namespace {

constexpr double kRelTol = 1e-12;

SpectrumValidation fail(SpectrumViolation::Kind kind, std::size_t index, std::string message) {
    SpectrumValidation v;
    v.ok = false;
    v.violation = SpectrumViolation{kind, index, std::move(message)};
    return v;
}

}  // namespace

SpectrumValidation validate(const std::vector<double>& exponents,
                            const std::vector<std::size_t>& block_starts) {
    using Kind = SpectrumViolation::Kind;
    if (exponents.empty()) return fail(Kind::BadBlockStarts, 0, "empty exponent list");
    if (block_starts.empty() || block_starts.front() != 0)
        return fail(Kind::BadBlockStarts, 0, "block_starts must begin with index 0");
    for (std::size_t k = 1; k < block_starts.size(); ++k) {
        if (block_starts[k] <= block_starts[k - 1] || block_starts[k] >= exponents.size())
            return fail(Kind::BadBlockStarts, k, "block_starts must increase and stay in range");
    }
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (!(exponents[i] > 0.0))
            return fail(Kind::NonPositive, i, "exponent must be positive");
        if (i > 0 && !(exponents[i] > exponents[i - 1]))
            return fail(Kind::NotIncreasing, i, "exponents must be strictly increasing");
    }

    SpectrumValidation v;
    v.ok = true;
    int max_block = 0;
    for (std::size_t k = 0; k < block_starts.size(); ++k) {
        std::size_t end = (k + 1 < block_starts.size()) ? block_starts[k + 1] : exponents.size();
        max_block = std::max(max_block, static_cast<int>(end - block_starts[k]));
    }
    v.block_cap = max_block;

    double q = std::numeric_limits<double>::infinity();
    double max_gap = 0.0;
    std::size_t min_at = 0;
    for (std::size_t k = 1; k < block_starts.size(); ++k) {
        double gap = exponents[block_starts[k]] / exponents[block_starts[k] - 1];
        if (gap < q) {
            q = gap;
            min_at = k;
        }
        max_gap = std::max(max_gap, gap);
    }
    v.q = q;
    if (block_starts.size() >= 2) {
        if (!(q > 1.0))
            return fail(Kind::RatioCollapse, min_at, "inter-block ratio does not exceed 1");
        if (max_gap > std::pow(q, 2.0 * max_block) * (1.0 + kRelTol))
            return fail(Kind::RatioCollapse, min_at,
                        "inter-block ratios collapse: largest gap exceeds q^(2N)");
    }
    return v;
}

BlockSpectrum BlockSpectrum::create(std::vector<double> exponents,
                                    std::vector<std::size_t> block_starts, double ratio_lower,
                                    int block_cap) {
    SpectrumValidation v = validate(exponents, block_starts);
    if (!v.ok) throw DomainError("invalid spectrum: " + v.violation->message);
    if (!(ratio_lower > 1.0)) throw DomainError("ratio_lower must exceed 1");
    if (block_cap < 1) throw DomainError("block_cap must be at least 1");
    if (v.block_cap > block_cap) throw DomainError("invalid spectrum: block exceeds block_cap");
    if (block_starts.size() >= 2) {
        if (ratio_lower > v.q * (1.0 + kRelTol))
            throw DomainError("invalid spectrum: inter-block gap below declared ratio_lower");
        double bound = std::pow(ratio_lower, 2.0 * block_cap) * (1.0 + kRelTol);
        for (std::size_t k = 1; k < block_starts.size(); ++k) {
            double gap = exponents[block_starts[k]] / exponents[block_starts[k] - 1];
            if (gap > bound)
                throw DomainError("invalid spectrum: inter-block gap above ratio_lower^(2N)");
        }
    }
    BlockSpectrum s;
    s.exponents_ = std::move(exponents);
    s.block_starts_ = std::move(block_starts);
    s.ratio_lower_ = ratio_lower;
    s.block_cap_ = block_cap;
    s.attained_q_ = v.q;
    return s;
}

std::pair<std::size_t, std::size_t> BlockSpectrum::block_range(std::size_t k) const {
    std::size_t begin = block_starts_.at(k);
    std::size_t end = (k + 1 < block_starts_.size()) ? block_starts_[k + 1] : exponents_.size();
    return {begin, end};
}

std::size_t BlockSpectrum::block_of_index(std::size_t i) const {
    auto it = std::upper_bound(block_starts_.begin(), block_starts_.end(), i);
    return static_cast<std::size_t>(it - block_starts_.begin()) - 1;
}

double BlockSpectrum::inverse_exponent_sum() const {
    double s = 0.0;
    for (double lambda : exponents_) s += 1.0 / lambda;
    return s;
}

std::optional<std::size_t> BlockSpectrum::find_exponent(double lambda) const {
    auto it = std::lower_bound(exponents_.begin(), exponents_.end(), lambda);
    for (auto cand : {it, it == exponents_.begin() ? it : std::prev(it)}) {
        if (cand != exponents_.end() &&
            std::fabs(*cand - lambda) <= kRelTol * std::max(std::fabs(lambda), 1.0)) {
            return static_cast<std::size_t>(cand - exponents_.begin());
        }
    }
    return std::nullopt;
}

BlockSpectrum generate_lacunary(double lambda0, double ratio, int count) {
    if (!(lambda0 > 0.0)) throw DomainError("lambda0 must be positive");
    if (!(ratio > 1.0)) throw DomainError("ratio must exceed 1");
    if (count < 1) throw DomainError("count must be at least 1");
    std::vector<double> exps(static_cast<std::size_t>(count));
    std::vector<std::size_t> starts(static_cast<std::size_t>(count));
    double value = lambda0;
    for (int k = 0; k < count; ++k) {
        exps[static_cast<std::size_t>(k)] = value;
        starts[static_cast<std::size_t>(k)] = static_cast<std::size_t>(k);
        value *= ratio;
    }
    return BlockSpectrum::create(std::move(exps), std::move(starts), ratio, 1);
}

BlockSpectrum generate_quasi_lacunary(std::vector<double> bases, double ratio, int count) {
    if (bases.empty()) throw DomainError("bases must be nonempty");
    if (!(ratio > 1.0)) throw DomainError("ratio must exceed 1");
    if (count < 1) throw DomainError("count must be at least 1");
    for (double b : bases) {
        if (!(b >= 1.0) || !(b < ratio)) throw DomainError("bases must lie in [1, ratio)");
    }
    std::sort(bases.begin(), bases.end());

    std::vector<double> exps;
    exps.reserve(bases.size() * static_cast<std::size_t>(count));
    double scale = 1.0;
    for (int k = 0; k < count; ++k) {
        for (double b : bases) exps.push_back(b * scale);
        scale *= ratio;
    }
    std::sort(exps.begin(), exps.end());
    for (std::size_t i = 1; i < exps.size(); ++i) {
        if (exps[i] - exps[i - 1] <= kRelTol * exps[i])
            throw DomainError("duplicate exponent produced by bases");
    }

    const double split = std::sqrt(ratio);
    std::vector<std::size_t> starts{0};
    double anchor = exps[0];
    for (std::size_t i = 1; i < exps.size(); ++i) {
        if (exps[i] / anchor > split) {
            starts.push_back(i);
            anchor = exps[i];
        }
    }

    SpectrumValidation v = validate(exps, starts);
    if (!v.ok) throw DomainError("quasi-lacunary construction failed: " + v.violation->message);
    double q = std::min(v.q, ratio);
    return BlockSpectrum::create(std::move(exps), std::move(starts), q,
                                 static_cast<int>(bases.size()));
}

}  // namespace muntzlab
