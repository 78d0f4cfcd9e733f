#pragma once

#include <cmath>
#include <cstddef>
#include <span>

#include "math_body.hpp"
#include "vec_scalar.hpp"

namespace muntzlab::kernels {

enum class PowMode { One, Two, Three, Four, General };

inline PowMode pow_mode(double p) {
    if (p == 1.0) return PowMode::One;
    if (p == 2.0) return PowMode::Two;
    if (p == 3.0) return PowMode::Three;
    if (p == 4.0) return PowMode::Four;
    return PowMode::General;
}

template <class V>
inline typename V::D abs_pow(typename V::D v, double p, PowMode mode) {
    switch (mode) {
        case PowMode::One:
            return V::abs(v);
        case PowMode::Two:
            return V::mul(v, v);
        case PowMode::Three: {
            auto a = V::abs(v);
            return V::mul(V::mul(a, a), a);
        }
        case PowMode::Four: {
            auto s = V::mul(v, v);
            return V::mul(s, s);
        }
        default:
            // |v|^p = exp(p log |v|); log(0) = -inf feeds through to exp -> 0
            return exp_impl<V>(V::mul(V::broadcast(p), log_impl<V>(V::abs(v))));
    }
}

template <class V>
void exp_sum_impl(std::span<const double> scales, std::span<const double> coeffs,
                  std::span<const double> x, std::span<double> out) {
    const std::size_t n = x.size();
    const std::size_t k_count = scales.size();
    std::size_t i = 0;
    for (; i + V::width <= n; i += V::width) {
        auto xi = V::load(&x[i]);
        auto acc = V::broadcast(0.0);
        for (std::size_t k = 0; k < k_count; ++k) {
            auto e = exp_impl<V>(V::mul(V::broadcast(scales[k]), xi));
            acc = V::fma(V::broadcast(coeffs[k]), e, acc);
        }
        V::store(&out[i], acc);
    }
    for (; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < k_count; ++k) {
            acc = std::fma(coeffs[k], exp_impl<VecScalar>(scales[k] * x[i]), acc);
        }
        out[i] = acc;
    }
}

// Reduction with four stripes regardless of backend, so that accumulation
// order (and therefore rounding) is identical between scalar and AVX2.
template <class V>
double abs_pow_weighted_sum_impl(std::span<const double> v, std::span<const double> w, double p) {
    const PowMode mode = pow_mode(p);
    const std::size_t n = v.size();
    double lanes[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;

    if constexpr (V::width == 4) {
        auto acc = V::broadcast(0.0);
        for (; i + 4 <= n; i += 4) {
            acc = V::fma(V::load(&w[i]), abs_pow<V>(V::load(&v[i]), p, mode), acc);
        }
        V::store(lanes, acc);
    } else {
        for (; i + 4 <= n; i += 4) {
            for (int j = 0; j < 4; ++j) {
                lanes[j] = std::fma(w[i + j], abs_pow<VecScalar>(v[i + j], p, mode), lanes[j]);
            }
        }
    }
    for (std::size_t j = 0; i < n; ++i, ++j) {
        lanes[j] = std::fma(w[i], abs_pow<VecScalar>(v[i], p, mode), lanes[j]);
    }
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

template <class V>
void pow_array_impl(std::span<const double> base, double alpha, std::span<double> out) {
    const std::size_t n = base.size();
    std::size_t i = 0;
    for (; i + V::width <= n; i += V::width) {
        auto b = V::load(&base[i]);
        V::store(&out[i], exp_impl<V>(V::mul(V::broadcast(alpha), log_impl<V>(b))));
    }
    for (; i < n; ++i) {
        out[i] = exp_impl<VecScalar>(alpha * log_impl<VecScalar>(base[i]));
    }
}

}  // namespace muntzlab::kernels
