#pragma once

#include <cmath>
#include <cstdint>

namespace muntzlab {

// Small counter-free splitmix64 generator.  Self-contained so that sampled
// checks are reproducible across standard libraries and platforms.  Trial
// streams are derived from (seed, trial_index) and are independent of the
// order in which trials run.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x9E3779B97F4A7C15ULL)) {}

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        return Rng(mix(seed) ^ mix(trial * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform in (0, 1]; never returns 0 so logs are safe.
    double uniform() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (no cached spare; keeps streams stateless).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace muntzlab
