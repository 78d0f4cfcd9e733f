#pragma once

#include <cmath>
#include <limits>

// exp/log bodies shared by the scalar and AVX2 lanes.  Rational
// approximations follow the classical Cephes layout (argument reduction with
// a split ln 2, degree-2/3 rational for exp, degree-5/5 for log), which keeps
// the relative error near 1-2 ulp over the full double range.  Inputs that
// would produce subnormal exp results flush to zero.

namespace muntzlab::kernels {

namespace consts {
inline constexpr double kLog2E = 1.4426950408889634073599;
inline constexpr double kExpC1 = 6.93145751953125e-1;
inline constexpr double kExpC2 = 1.42860682030941723212e-6;
inline constexpr double kExpMax = 709.782712893384;   // log(DBL_MAX)
inline constexpr double kExpMin = -708.396418532264;  // log(DBL_MIN), subnormals flushed

inline constexpr double kExpP0 = 1.26177193074810590878e-4;
inline constexpr double kExpP1 = 3.02994407707441961300e-2;
inline constexpr double kExpP2 = 9.99999999999999999910e-1;
inline constexpr double kExpQ0 = 3.00198505138664455042e-6;
inline constexpr double kExpQ1 = 2.52448340349684104192e-3;
inline constexpr double kExpQ2 = 2.27265548208155028766e-1;
inline constexpr double kExpQ3 = 2.00000000000000000005e0;

inline constexpr double kSqrtHalf = 0.70710678118654752440;
inline constexpr double kLogC1 = 0.693359375;
inline constexpr double kLogC2 = -2.121944400546905827679e-4;

inline constexpr double kLogP0 = 1.01875663804580931796e-4;
inline constexpr double kLogP1 = 4.97494994976747001425e-1;
inline constexpr double kLogP2 = 4.70579119878881725854e0;
inline constexpr double kLogP3 = 1.44989225341610930846e1;
inline constexpr double kLogP4 = 1.79368678507819816313e1;
inline constexpr double kLogP5 = 7.70838733755885391666e0;
inline constexpr double kLogQ0 = 1.12873587189167450590e1;
inline constexpr double kLogQ1 = 4.52279145837532221105e1;
inline constexpr double kLogQ2 = 8.29875266912776603211e1;
inline constexpr double kLogQ3 = 7.11544750618563894466e1;
inline constexpr double kLogQ4 = 2.31251620126765340583e1;
}  // namespace consts

// Horner evaluation; coefficients given from the constant term upward.
template <class V>
inline typename V::D horner(typename V::D, double c0) {
    return V::broadcast(c0);
}

template <class V, class... Ts>
inline typename V::D horner(typename V::D x, double c0, Ts... rest) {
    return V::fma(x, horner<V>(x, rest...), V::broadcast(c0));
}

template <class V>
inline typename V::D exp_impl(typename V::D x) {
    using namespace consts;
    using D = typename V::D;

    auto too_big = V::gt(x, V::broadcast(kExpMax));
    auto too_small = V::lt(x, V::broadcast(kExpMin));
    auto is_nan = V::unord(x, x);

    D n = V::floor(V::fma(x, V::broadcast(kLog2E), V::broadcast(0.5)));
    // sanitize before the integer conversion in pow2i
    n = V::select(V::lt(n, V::broadcast(-1100.0)), V::broadcast(-1100.0), n);
    n = V::select(V::gt(n, V::broadcast(1100.0)), V::broadcast(1100.0), n);
    n = V::select(is_nan, V::broadcast(0.0), n);

    D g = V::fma(n, V::broadcast(-kExpC1), x);
    g = V::fma(n, V::broadcast(-kExpC2), g);
    g = V::select(is_nan, V::broadcast(0.0), g);
    D gg = V::mul(g, g);

    D px = V::mul(g, horner<V>(gg, kExpP2, kExpP1, kExpP0));
    D q = horner<V>(gg, kExpQ3, kExpQ2, kExpQ1, kExpQ0);
    D r = V::fma(V::broadcast(2.0), V::div(px, V::sub(q, px)), V::broadcast(1.0));
    r = V::mul(r, V::pow2i(n));

    const double inf = std::numeric_limits<double>::infinity();
    const double qnan = std::numeric_limits<double>::quiet_NaN();
    r = V::select(too_big, V::broadcast(inf), r);
    r = V::select(too_small, V::broadcast(0.0), r);
    return V::select(is_nan, V::broadcast(qnan), r);
}

template <class V>
inline typename V::D log_impl(typename V::D x) {
    using namespace consts;
    using D = typename V::D;
    const double inf = std::numeric_limits<double>::infinity();
    const double qnan = std::numeric_limits<double>::quiet_NaN();

    auto is_zero = V::eq(x, V::broadcast(0.0));
    auto is_neg = V::lt(x, V::broadcast(0.0));
    auto is_inf = V::eq(x, V::broadcast(inf));
    auto is_nan = V::unord(x, x);
    auto is_denorm = V::m_and(V::gt(x, V::broadcast(0.0)),
                              V::lt(x, V::broadcast(2.2250738585072014e-308)));

    D xs = V::select(is_denorm, V::mul(x, V::broadcast(0x1.0p54)), x);
    // feed a harmless value through the bit path for lanes selected away later
    auto bad = V::m_or(V::m_or(is_zero, is_neg), V::m_or(is_inf, is_nan));
    xs = V::select(bad, V::broadcast(1.0), xs);

    D m;
    D e = V::frexp_em(xs, m);
    e = V::select(is_denorm, V::sub(e, V::broadcast(54.0)), e);

    auto low = V::lt(m, V::broadcast(kSqrtHalf));
    e = V::select(low, V::sub(e, V::broadcast(1.0)), e);
    D z = V::select(low, V::fma(m, V::broadcast(2.0), V::broadcast(-1.0)),
                    V::sub(m, V::broadcast(1.0)));

    D zz = V::mul(z, z);
    D p = horner<V>(z, kLogP5, kLogP4, kLogP3, kLogP2, kLogP1, kLogP0);
    D q = horner<V>(z, kLogQ4, kLogQ3, kLogQ2, kLogQ1, kLogQ0, 1.0);
    D y = V::mul(z, V::div(V::mul(zz, p), q));
    y = V::fma(e, V::broadcast(kLogC2), y);
    y = V::fma(zz, V::broadcast(-0.5), y);
    D r = V::add(z, y);
    r = V::fma(e, V::broadcast(kLogC1), r);

    r = V::select(is_zero, V::broadcast(-inf), r);
    r = V::select(is_neg, V::broadcast(qnan), r);
    r = V::select(is_inf, V::broadcast(inf), r);
    return V::select(is_nan, V::broadcast(qnan), r);
}

}  // namespace muntzlab::kernels
