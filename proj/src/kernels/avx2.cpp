#include "muntzlab/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include "kernels_body.hpp"
#include "vec_avx2.hpp"

namespace muntzlab::kernels {

namespace {

void exp_sum_avx2(std::span<const double> scales, std::span<const double> coeffs,
                  std::span<const double> x, std::span<double> out) {
    exp_sum_impl<VecAvx2>(scales, coeffs, x, out);
}

double abs_pow_weighted_sum_avx2(std::span<const double> v, std::span<const double> w, double p) {
    return abs_pow_weighted_sum_impl<VecAvx2>(v, w, p);
}

void pow_array_avx2(std::span<const double> base, double alpha, std::span<double> out) {
    pow_array_impl<VecAvx2>(base, alpha, out);
}

}  // namespace

const KernelTable* avx2_table() {
    static const KernelTable table{exp_sum_avx2, abs_pow_weighted_sum_avx2, pow_array_avx2, "avx2"};
    return &table;
}

}  // namespace muntzlab::kernels

#else

namespace muntzlab::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace muntzlab::kernels

#endif
