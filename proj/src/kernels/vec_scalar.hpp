#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

namespace muntzlab::kernels {

// One-lane backend.  The AVX2 backend mirrors these operations exactly
// (fused multiply-add, bit-level scale/frexp), so per-element results are
// bit-identical across backends.
struct VecScalar {
    static constexpr int width = 1;
    using D = double;
    using M = bool;

    static D broadcast(double v) { return v; }
    static D load(const double* p) { return *p; }
    static void store(double* p, D v) { *p = v; }

    static D add(D a, D b) { return a + b; }
    static D sub(D a, D b) { return a - b; }
    static D mul(D a, D b) { return a * b; }
    static D div(D a, D b) { return a / b; }
    static D fma(D a, D b, D c) { return std::fma(a, b, c); }
    static D floor(D a) { return std::floor(a); }
    static D abs(D a) { return std::fabs(a); }

    static M lt(D a, D b) { return a < b; }
    static M le(D a, D b) { return a <= b; }
    static M gt(D a, D b) { return a > b; }
    static M eq(D a, D b) { return a == b; }
    static M unord(D a, D b) { return std::isnan(a) || std::isnan(b); }
    static M m_or(M a, M b) { return a || b; }
    static M m_and(M a, M b) { return a && b; }

    static D select(M m, D if_true, D if_false) { return m ? if_true : if_false; }

    // 2^n for integral n already clamped to a safe range.
    static D pow2i(D n) {
        auto ni = static_cast<long long>(n);
        auto bits = static_cast<std::uint64_t>(ni + 1023) << 52;
        return std::bit_cast<double>(bits);
    }

    // Exponent/mantissa split: returns e with x = m * 2^e, m in [0.5, 1).
    // Caller guarantees x is positive and normal.
    static D frexp_em(D x, D& m) {
        auto bits = std::bit_cast<std::uint64_t>(x);
        auto eraw = static_cast<long long>((bits >> 52) & 0x7FFULL);
        m = std::bit_cast<double>((bits & 0xFFFFFFFFFFFFFULL) | 0x3FE0000000000000ULL);
        return static_cast<double>(eraw) - 1022.0;
    }
};

}  // namespace muntzlab::kernels
