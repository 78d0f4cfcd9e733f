#include "muntzlab/kernels.hpp"

#include "kernels_body.hpp"
#include "vec_scalar.hpp"

namespace muntzlab::kernels {

namespace {

void exp_sum_scalar(std::span<const double> scales, std::span<const double> coeffs,
                    std::span<const double> x, std::span<double> out) {
    exp_sum_impl<VecScalar>(scales, coeffs, x, out);
}

double abs_pow_weighted_sum_scalar(std::span<const double> v, std::span<const double> w, double p) {
    return abs_pow_weighted_sum_impl<VecScalar>(v, w, p);
}

void pow_array_scalar(std::span<const double> base, double alpha, std::span<double> out) {
    pow_array_impl<VecScalar>(base, alpha, out);
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{exp_sum_scalar, abs_pow_weighted_sum_scalar, pow_array_scalar,
                                   "scalar"};
    return table;
}

double ref_exp(double x) { return exp_impl<VecScalar>(x); }
double ref_log(double x) { return log_impl<VecScalar>(x); }

}  // namespace muntzlab::kernels
