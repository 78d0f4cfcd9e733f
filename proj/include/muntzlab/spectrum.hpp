#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muntzlab/errors.hpp"

namespace muntzlab {

// Structured outcome of checking the block-lacunarity invariants.
struct SpectrumViolation {
    enum class Kind { NonPositive, NotIncreasing, BadBlockStarts, RatioCollapse, BlockTooLarge };
    Kind kind;
    std::size_t index;
    std::string message;
};

struct SpectrumValidation {
    bool ok = false;
    // Largest q > 1 with q <= every inter-block gap; +inf when < 2 blocks.
    double q = std::numeric_limits<double>::infinity();
    // Smallest admissible block-size bound (max block size).
    int block_cap = 0;
    std::optional<SpectrumViolation> violation;
};

// Validates exponents/blocks and reports the attained (q, N).  Gap between
// consecutive blocks is first(next block) / last(current block); validity
// requires every gap in [q, q^(2N)] with q > 1.
SpectrumValidation validate(const std::vector<double>& exponents,
                            const std::vector<std::size_t>& block_starts);

// Finite increasing exponent sequence with a block partition.  Immutable.
class BlockSpectrum {
public:
    static BlockSpectrum create(std::vector<double> exponents, std::vector<std::size_t> block_starts,
                                double ratio_lower, int block_cap);

    const std::vector<double>& exponents() const { return exponents_; }
    const std::vector<std::size_t>& block_starts() const { return block_starts_; }
    double ratio_lower() const { return ratio_lower_; }
    int block_cap() const { return block_cap_; }
    double attained_q() const { return attained_q_; }

    std::size_t size() const { return exponents_.size(); }
    std::size_t block_count() const { return block_starts_.size(); }
    // Index range [begin, end) of block k.
    std::pair<std::size_t, std::size_t> block_range(std::size_t k) const;
    double block_min_exponent(std::size_t k) const { return exponents_[block_range(k).first]; }
    std::size_t block_of_index(std::size_t i) const;

    // Truncated Muntz sum: sum of 1/lambda over the stored exponents.
    double inverse_exponent_sum() const;

    // Locate an exponent up to 1e-12 relative tolerance.
    std::optional<std::size_t> find_exponent(double lambda) const;

private:
    BlockSpectrum() = default;
    std::vector<double> exponents_;
    std::vector<std::size_t> block_starts_;
    double ratio_lower_ = 0.0;
    int block_cap_ = 0;
    double attained_q_ = 0.0;
};

// lambda0 * ratio^k, k < count, singleton blocks, parameters (ratio, 1).
BlockSpectrum generate_lacunary(double lambda0, double ratio, int count);

// Union of base_i * ratio^k over bases in [1, ratio); terms within a factor
// sqrt(ratio) of the current block anchor share a block; N = |bases|.
BlockSpectrum generate_quasi_lacunary(std::vector<double> bases, double ratio, int count);

}  // namespace muntzlab
