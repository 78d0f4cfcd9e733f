#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "muntzlab/kernels.hpp"
#include "muntzlab/rng.hpp"

using namespace muntzlab;

namespace {

double rel_err(double got, double want) {
    if (want == 0.0) return std::fabs(got);
    return std::fabs((got - want) / want);
}

}  // namespace

TEST_CASE("reference exp matches libm to a few ulp") {
    double worst = 0.0;
    for (double x = -708.0; x <= 709.0; x += 0.193) {
        double want = std::exp(x);
        if (want == 0.0 || std::isinf(want)) continue;
        worst = std::max(worst, rel_err(kernels::ref_exp(x), want));
    }
    CHECK(worst < 5e-15);
    CHECK(kernels::ref_exp(0.0) == 1.0);
    CHECK(kernels::ref_exp(800.0) == std::numeric_limits<double>::infinity());
    CHECK(kernels::ref_exp(-800.0) == 0.0);
    CHECK(std::isnan(kernels::ref_exp(std::nan(""))));
}

TEST_CASE("reference log matches libm to a few ulp") {
    double worst = 0.0;
    for (double x = 1e-300; x < 1e300; x *= 3.7) {
        worst = std::max(worst, std::fabs(kernels::ref_log(x) - std::log(x)) /
                                    std::max(1.0, std::fabs(std::log(x))));
    }
    CHECK(worst < 5e-15);
    CHECK(kernels::ref_log(1.0) == 0.0);
    CHECK(kernels::ref_log(0.0) == -std::numeric_limits<double>::infinity());
    CHECK(std::isnan(kernels::ref_log(-1.0)));
    // denormal input
    CHECK(rel_err(kernels::ref_log(1e-310), std::log(1e-310)) < 5e-15);
}

TEST_CASE("exp_sum agrees with a naive pow loop") {
    std::vector<double> lam = {0.5, 1.0, 7.25, 64.0, 1000.0};
    std::vector<double> coef = {2.0, -1.5, 0.25, 3.0, -0.125};
    Rng rng(7);
    std::vector<double> ts, logs;
    for (int i = 0; i < 257; ++i) {
        double t = rng.uniform();
        ts.push_back(t);
        logs.push_back(std::log(t));
    }
    std::vector<double> out(ts.size());
    kernels::active().exp_sum(lam, coef, logs, out);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double want = 0.0;
        for (std::size_t k = 0; k < lam.size(); ++k) want += coef[k] * std::pow(ts[i], lam[k]);
        CHECK(std::fabs(out[i] - want) <= 1e-13 * (1.0 + std::fabs(want)));
    }
}

TEST_CASE("abs_pow_weighted_sum agrees with a naive loop") {
    Rng rng(11);
    std::vector<double> v, w;
    for (int i = 0; i < 1001; ++i) {
        v.push_back(rng.normal());
        w.push_back(rng.uniform());
    }
    for (double p : {1.0, 2.0, 3.0, 3.5, 0.75}) {
        double got = kernels::active().abs_pow_weighted_sum(v, w, p);
        double want = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) want += w[i] * std::pow(std::fabs(v[i]), p);
        CHECK(rel_err(got, want) < 1e-12);
    }
}

TEST_CASE("pow_array agrees with std::pow") {
    Rng rng(13);
    std::vector<double> base;
    for (int i = 0; i < 130; ++i) base.push_back(rng.uniform());
    std::vector<double> out(base.size());
    for (double a : {-0.5, 0.25, 1.0, 2.5}) {
        kernels::active().pow_array(base, a, out);
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(rel_err(out[i], std::pow(base[i], a)) < 1e-13);
        }
    }
}

TEST_CASE("scalar and avx2 backends are bit-identical") {
    const kernels::KernelTable* avx2 = kernels::avx2_table();
    if (avx2 == nullptr) return;  // nothing to compare on this host

    Rng rng(17);
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 64u, 1001u}) {
        std::vector<double> lam = {0.25, 3.0, 47.0};
        std::vector<double> coef = {1.0, -2.0, 0.5};
        std::vector<double> x(n), o1(n), o2(n);
        for (auto& xi : x) xi = -700.0 * rng.uniform();
        kernels::scalar_table().exp_sum(lam, coef, x, o1);
        avx2->exp_sum(lam, coef, x, o2);
        CHECK(std::memcmp(o1.data(), o2.data(), n * sizeof(double)) == 0);

        std::vector<double> v(n), w(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = rng.normal();
            w[i] = rng.uniform();
        }
        for (double p : {1.0, 2.0, 3.5}) {
            double a = kernels::scalar_table().abs_pow_weighted_sum(v, w, p);
            double b = avx2->abs_pow_weighted_sum(v, w, p);
            CHECK(a == b);
        }

        std::vector<double> pa(n), pb(n);
        kernels::scalar_table().pow_array(w, -0.5, pa);
        avx2->pow_array(w, -0.5, pb);
        CHECK(std::memcmp(pa.data(), pb.data(), n * sizeof(double)) == 0);
    }
}

TEST_CASE("backend forcing") {
    std::string original(kernels::backend_name());
    CHECK(kernels::force_backend("scalar"));
    CHECK(kernels::backend_name() == "scalar");
    CHECK_FALSE(kernels::force_backend("neon"));
    CHECK(kernels::force_backend(original));
}
