#pragma once

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace muntzlab::kernels {

struct VecAvx2 {
    static constexpr int width = 4;
    using D = __m256d;
    using M = __m256d;

    static D broadcast(double v) { return _mm256_set1_pd(v); }
    static D load(const double* p) { return _mm256_loadu_pd(p); }
    static void store(double* p, D v) { _mm256_storeu_pd(p, v); }

    static D add(D a, D b) { return _mm256_add_pd(a, b); }
    static D sub(D a, D b) { return _mm256_sub_pd(a, b); }
    static D mul(D a, D b) { return _mm256_mul_pd(a, b); }
    static D div(D a, D b) { return _mm256_div_pd(a, b); }
    static D fma(D a, D b, D c) { return _mm256_fmadd_pd(a, b, c); }
    static D floor(D a) { return _mm256_floor_pd(a); }
    static D abs(D a) {
        const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
        return _mm256_and_pd(a, mask);
    }

    static M lt(D a, D b) { return _mm256_cmp_pd(a, b, _CMP_LT_OQ); }
    static M le(D a, D b) { return _mm256_cmp_pd(a, b, _CMP_LE_OQ); }
    static M gt(D a, D b) { return _mm256_cmp_pd(a, b, _CMP_GT_OQ); }
    static M eq(D a, D b) { return _mm256_cmp_pd(a, b, _CMP_EQ_OQ); }
    static M unord(D a, D b) { return _mm256_cmp_pd(a, b, _CMP_UNORD_Q); }
    static M m_or(M a, M b) { return _mm256_or_pd(a, b); }
    static M m_and(M a, M b) { return _mm256_and_pd(a, b); }

    static D select(M m, D if_true, D if_false) { return _mm256_blendv_pd(if_false, if_true, m); }

    static D pow2i(D n) {
        __m128i ni32 = _mm256_cvtpd_epi32(n);
        __m256i ni64 = _mm256_cvtepi32_epi64(ni32);
        __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(ni64, _mm256_set1_epi64x(1023)), 52);
        return _mm256_castsi256_pd(bits);
    }

    static D frexp_em(D x, D& m) {
        __m256i bits = _mm256_castpd_si256(x);
        __m256i eraw = _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7FF));
        __m256i mant = _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0xFFFFFFFFFFFFFLL)),
                                       _mm256_set1_epi64x(0x3FE0000000000000LL));
        m = _mm256_castsi256_pd(mant);
        // eraw < 2^52, so the magic-number conversion to double is exact
        __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
        __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(eraw, magic)),
                                  _mm256_castsi256_pd(magic));
        return _mm256_sub_pd(e, _mm256_set1_pd(1022.0));
    }
};

}  // namespace muntzlab::kernels

#endif  // __AVX2__ && __FMA__
