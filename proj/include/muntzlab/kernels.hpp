#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops used by polynomial evaluation, quadrature and
// measure sums.  Every kernel exists in a scalar reference version and an
// AVX2 version; the two are bit-identical by construction (same fused
// operations, same accumulation pattern) and a runtime dispatcher picks one
// per process.  Set MUNTZLAB_KERNEL=scalar|avx2 to override.

namespace muntzlab::kernels {

struct KernelTable {
    // out[i] = sum_k coeffs[k] * exp(scales[k] * x[i])
    void (*exp_sum)(std::span<const double> scales, std::span<const double> coeffs,
                    std::span<const double> x, std::span<double> out);
    // returns sum_i w[i] * |v[i]|^p   (p >= 0; small integer p fast-pathed)
    double (*abs_pow_weighted_sum)(std::span<const double> v, std::span<const double> w, double p);
    // out[i] = base[i]^alpha computed as exp(alpha * log(base[i])); base[i] > 0 or alpha > 0
    void (*pow_array)(std::span<const double> base, double alpha, std::span<double> out);
    const char* name;
};

const KernelTable& active();

// Name of the backend in use ("avx2" or "scalar").
std::string_view backend_name();

// Force a backend by name; returns false (and leaves the dispatch unchanged)
// if the requested backend is unavailable.  Intended for tests.
bool force_backend(std::string_view name);

const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when unsupported at build or run time

// Scalar reference transcendentals (the exact functions the kernels apply
// per element).  Exposed for accuracy tests.
double ref_exp(double x);
double ref_log(double x);

}  // namespace muntzlab::kernels
