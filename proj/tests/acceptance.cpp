// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Criterion 10 drives the CLI binary; pass its path with
//   acceptance --cli <path-to-muntzlab>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "muntzlab/embeddings.hpp"
#include "muntzlab/inequalities.hpp"
#include "muntzlab/report.hpp"

using namespace muntzlab;

namespace {

const quad::QuadratureConfig kCfg{};
int g_failures = 0;

void report_line(int criterion, bool pass, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MuntzPolynomial mono(double lambda, double c = 1.0) {
    return MuntzPolynomial::muntz({{lambda, c}});
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// --------------------------------------------------------------------------

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        double lam = 0.5 * std::pow(1e4 / 0.5, static_cast<double>(i) / 19.0);
        for (double alpha : {-0.5, 0.0, 1.0, 2.5}) {
            double got = quad::integrate_weighted(
                [lam](double t) { return std::pow(t, lam); }, alpha, kCfg);
            double want = quad::beta_function(lam + 1.0, alpha + 1.0);
            worst = std::max(worst, std::fabs(got / want - 1.0));
        }
    }
    double secs = seconds_since(t0);
    report_line(1, worst < 1e-8 && secs < 5.0, "quadrature vs Beta closed form on the 20x4 grid",
                fmt("worst rel err %.3e, %.2f s", worst, secs));
}

void criterion_2() {
    bool pass = true;
    std::string detail;
    for (double beta : {0.5, 1.0, 2.0}) {
        double v = quad::beta_asymptotic_check(beta, {1e4})[0].second;
        double err = std::fabs(v - 1.0);
        pass = pass && err < 0.02;
        if (beta == 1.0) pass = pass && err <= 1e-12;
        detail += fmt("beta=%g:%.2e ", beta, err);
    }
    report_line(2, pass, "Beta asymptotics at x = 1e4", detail);
}

void criterion_3() {
    auto mu = MeasureSpec::cantor(1.0 / 3.0);
    bool tails = true;
    for (int m = 1; m <= 15; ++m) {
        tails = tails && tail(mu, std::pow(1.0 / 3.0, m)) == std::ldexp(1.0, -m);
    }
    double worst = 0.0;
    for (int n = 1; n <= 12; ++n) {
        worst = std::max(worst,
                         std::fabs(cantor_moment_atoms(mu, n, 12).value - moment(mu, n)));
    }
    std::vector<double> grid;
    for (int m = 1; m <= 12; ++m) grid.push_back(std::pow(1.0 / 3.0, m));
    double beta_hat = beta_class_fit(mu, grid).beta_hat;
    double target = std::log(2.0) / std::log(3.0);
    bool pass = tails && worst < 1e-9 && std::fabs(beta_hat - target) < 0.01;
    report_line(3, pass, "Cantor tails, moment recursion vs atoms, dimension fit",
                fmt("tails %s, moment gap %.2e, beta_hat %.4f", tails ? "exact" : "BROKEN",
                    worst, beta_hat));
}

void criterion_4() {
    // NOTE: the min/max of the ratio over random sign patterns is an extreme
    // statistic; at 10^3 samples its drift under doubling genuinely exceeds
    // 5% for most seeds (the minimum keeps finding deeper cancellations).
    // The criterion is evaluated exactly as stated and its outcome reported
    // honestly; see the decisions ledger for the multi-seed analysis.
    auto s = generate_lacunary(1.0, 2.0, 12);
    bool pass = true;
    std::string detail;
    double max_secs = 0.0;
    int stable_cells = 0;
    for (double p : {1.0, 2.0, 3.5}) {
        for (double alpha : {-0.5, 0.0, 1.0}) {
            auto t0 = std::chrono::steady_clock::now();
            auto trial = [&](std::size_t, Rng& rng) -> std::optional<double> {
                auto f = random_poly(s, rng);
                if (f.is_zero()) return std::nullopt;
                return decoupling_ratio(block_decompose(f, s), p, alpha, kCfg).ratio;
            };
            const std::uint64_t seed = 20240;
            Bracket base = bracket_scan(1000, seed, trial);
            Bracket doubled = bracket_scan(2000, seed, trial);
            double move_lo = std::fabs(doubled.lo - base.lo) / base.lo;
            double move_hi = std::fabs(doubled.hi - base.hi) / base.hi;
            double secs = seconds_since(t0);
            max_secs = std::max(max_secs, secs);
            bool ok = base.lo > 0.0 && move_lo < 0.05 && move_hi < 0.05 && secs < 60.0;
            pass = pass && ok;
            if (ok) ++stable_cells;
            if (!ok) detail += fmt("(p=%g,a=%g: c1=%.3f dlo=%.3f dhi=%.3f) ", p, alpha, base.lo,
                                   move_lo, move_hi);
        }
    }
    detail = fmt("%d/9 cells stable, slowest %.1f s ", stable_cells, max_secs) + detail;
    report_line(4, pass, "decoupling brackets over 1000->2000 samples", detail);
}

void criterion_5() {
    bool pass = true;
    std::string detail;
    auto numh = MeasureSpec::jacobi(-0.5);
    for (double p : {1.0, 2.0}) {
        auto problem = EmbeddingProblem::create(generate_lacunary(1.0, 2.0, 16), numh, p, 0.5);
        auto d = moment_series(problem, 16);
        bool ok = d.verdict == Verdict::Diverges && std::fabs(d.slope - 1.0) <= 0.02;
        pass = pass && ok;
        detail += fmt("nu(p=%g): %s slope=%.4f; ", p, to_string(d.verdict), d.slope);
    }
    auto atom = MeasureSpec::atomic({0.5}, {1.0});
    auto problem = EmbeddingProblem::create(generate_lacunary(1.0, 2.0, 16), atom, 1.0, 0.5);
    auto d = moment_series(problem, 16);
    double drift = std::fabs(d.partial_sums.back() - d.partial_sums[10]);
    bool ok = d.verdict == Verdict::Converges && drift <= 1e-12;
    pass = pass && ok;
    detail += fmt("atom: %s drift=%.1e", to_string(d.verdict), drift);
    report_line(5, pass, "moment-series verdicts for the divergent and convergent examples",
                detail);
}

void criterion_6() {
    std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<std::pair<std::string, MeasureSpec>> measures;
    measures.emplace_back("nu_-1/2", MeasureSpec::jacobi(-0.5));
    measures.emplace_back("atom_0.5", MeasureSpec::atomic({0.5}, {1.0}));
    measures.emplace_back("atom_1", MeasureSpec::atomic({1.0}, {1.0}));
    measures.emplace_back("cantor_1/3", MeasureSpec::cantor(1.0 / 3.0));
    bool pass = true;
    std::string detail;
    for (const auto& [name, mu] : measures) {
        auto problem = EmbeddingProblem::create(generate_lacunary(1.0, 2.0, 12), mu, 1.0, 0.5);
        auto series = moment_series(problem, 12);
        auto dic = double_integral_condition(mu, 0.5, deltas, kCfg);
        bool contradiction =
            (series.verdict == Verdict::Converges && dic.verdict == Verdict::Diverges) ||
            (series.verdict == Verdict::Diverges && dic.verdict == Verdict::Converges);
        pass = pass && !contradiction;
        detail += fmt("%s:%s/%s ", name.c_str(), to_string(series.verdict),
                      to_string(dic.verdict));
    }
    report_line(6, pass, "moment-series and double-integral verdicts never contradict", detail);
}

void criterion_7() {
    auto s = generate_lacunary(1.0, 2.0, 13);
    auto unit_problem =
        EmbeddingProblem::create(s, MeasureSpec::jacobi(0.0), 2.0, 1.0);
    auto search = embedding_constant_search(unit_problem, 50, 4242, 5, kCfg);
    bool unit_ok = search.best.ratio == 1.0;

    const double p = 2.0, beta = 1.0, q = 2.0;
    auto dirac_problem =
        EmbeddingProblem::create(s, MeasureSpec::atomic({1.0}, {1.0}), p, beta);
    bool mono_ok = true;
    double prev = 0.0;
    double last_factor = 0.0;
    for (int k = 0; k <= 12; ++k) {
        double lam = s.exponents()[static_cast<std::size_t>(k)];
        double got = embedding_ratio(mono(lam), dirac_problem, kCfg).ratio;
        double closed = std::pow(p * lam / beta + 1.0, beta / p);
        mono_ok = mono_ok && std::fabs(got / closed - 1.0) < 1e-9;
        mono_ok = mono_ok && got >= std::pow(p * lam / beta, beta / p);  // unbounded envelope
        if (k > 0) {
            last_factor = got / prev;
            mono_ok = mono_ok && got > prev;
        }
        prev = got;
    }
    double growth = std::pow(q, beta / p);
    bool factor_ok = last_factor >= 0.99 * growth;
    report_line(7, unit_ok && mono_ok && factor_ok,
                "unit constant for the Lebesgue case, unbounded growth at the boundary atom",
                fmt("search=%.17g, last step factor %.5f vs q^(beta/p)=%.5f", search.best.ratio,
                    last_factor, growth));
}

void criterion_8() {
    auto s = generate_lacunary(1.0, 2.0, 97);
    auto a24 = schur_kernel_sums(s, {2.0, 2.0}, 1.0, 24);
    auto a48 = schur_kernel_sums(s, {2.0, 2.0}, 1.0, 48);
    double row_rel = std::fabs(a48.row_sup - a24.row_sup) / a48.row_sup;
    double col_rel = std::fabs(a48.col_sup - a24.col_sup) / a48.col_sup;
    bool bilinear_ok = row_rel < 1e-3 && col_rel < 1e-3;

    auto s3 = generate_lacunary(1.0, 2.0, 49);
    auto t12 = schur_kernel_sums(s3, {3.0, 3.0, 3.0}, 1.0, 12);
    auto t24 = schur_kernel_sums(s3, {3.0, 3.0, 3.0}, 1.0, 24);
    double t_row_rel = std::fabs(t24.row_sup - t12.row_sup) / t24.row_sup;
    double t_col_rel = std::fabs(t24.col_sup - t12.col_sup) / t24.col_sup;
    bool trilinear_ok = t_row_rel < 1e-3 && t_col_rel < 1e-3;

    report_line(8, bilinear_ok && trilinear_ok, "Schur sum stability under window doubling",
                fmt("bilinear rel %.2e/%.2e; trilinear rel %.2e/%.2e (sup %.4f -> %.4f)",
                    row_rel, col_rel, t_row_rel, t_col_rel, t12.row_sup, t24.row_sup));
}

struct StabilityResult {
    bool ok;
    double lo, hi, move;
};

enum class BoundedEnd { Lower, Upper };

// Stability is asserted on the endpoint the corresponding inequality bounds;
// the opposite extreme is reported but free to wander (it is an extreme of
// an unbounded-side tail and converges slowly).
StabilityResult stable_bracket(int base_trials, std::uint64_t seed, BoundedEnd end,
                               const std::function<std::optional<double>(std::size_t, Rng&)>& f) {
    Bracket a = bracket_scan(base_trials, seed, f);
    Bracket b = bracket_scan(2 * base_trials, seed, f);
    double move_lo = std::fabs(b.lo - a.lo) / std::max(1e-300, std::fabs(a.lo));
    double move_hi = std::fabs(b.hi - a.hi) / std::max(1e-300, std::fabs(a.hi));
    double move = (end == BoundedEnd::Lower) ? move_lo : move_hi;
    bool ok = std::isfinite(a.lo) && std::isfinite(a.hi) && a.lo > 0.0 && move < 0.05;
    return {ok, b.lo, b.hi, move};
}

void criterion_9() {
    bool pass = true;
    std::string detail;
    auto s = generate_lacunary(1.0, 2.0, 10);
    auto q = generate_quasi_lacunary({1.0, 1.5}, 4.0, 6);

    {  // dilation contraction over 1000 samples
        double worst = 0.0;
        const double pvals[3] = {1.0, 2.0, 3.5};
        for (int i = 0; i < 1000; ++i) {
            Rng rng = Rng::for_trial(777, static_cast<std::uint64_t>(i));
            auto f = random_poly(s, rng);
            double rho = 0.02 + 0.96 * rng.uniform();
            double lam = s.exponents()[i % s.size()];
            worst = std::max(worst, dilation_norm_check(f, rho, pvals[i % 3], lam, kCfg).ratio);
        }
        bool ok = worst <= 1.0 + 1e-9;
        pass = pass && ok;
        detail += fmt("dilation max %.12f; ", worst);
    }

    auto block_sampler = [&](const BlockSpectrum& spec) {
        return [&spec](std::size_t i, Rng& rng) -> std::optional<double> {
            auto f = random_block_poly(spec, i % spec.block_count(), rng);
            if (f.is_zero()) return std::nullopt;
            return f.min_exponent();  // replaced by each op below
        };
    };
    (void)block_sampler;

    {  // derivative_switch per (p, alpha) cells; the estimate bounds the ratio above
        for (auto [p, alpha] : {std::pair{1.0, 0.0}, std::pair{2.0, -0.5}}) {
            auto r = stable_bracket(1000, 811, BoundedEnd::Upper,
                                    [&](std::size_t, Rng& rng) -> std::optional<double> {
                auto f = random_poly(s, rng);
                if (f.is_zero()) return std::nullopt;
                return derivative_switch_ratio(f, p, alpha, kCfg).ratio;
            });
            pass = pass && r.ok;
            detail += fmt("dswitch(p=%g)%s; ", p, r.ok ? "ok" : fmt(" MOVE %.3f", r.move).c_str());
        }
    }
    {  // derivative_translation; bounded above
        auto nu0 = MeasureSpec::jacobi(0.0);
        auto r = stable_bracket(200, 812, BoundedEnd::Upper,
                                [&](std::size_t, Rng& rng) -> std::optional<double> {
            auto f = random_poly(s, rng);
            if (f.is_zero()) return std::nullopt;
            return derivative_translation_ratio(f, 2.0, nu0, kCfg).ratio;
        });
        pass = pass && r.ok;
        detail += fmt("dtrans%s; ", r.ok ? "ok" : fmt(" MOVE %.3f", r.move).c_str());
    }
    {  // pointwise block ratio on the quasi spectrum; bounded above
        auto r = stable_bracket(1000, 813, BoundedEnd::Upper,
                                [&](std::size_t i, Rng& rng) -> std::optional<double> {
            auto f = random_block_poly(q, i % q.block_count(), rng);
            if (f.is_zero()) return std::nullopt;
            return pointwise_block_ratio(f, q).ratio;
        });
        pass = pass && r.ok;
        detail += fmt("pointwise%s; ", r.ok ? "ok" : fmt(" MOVE %.3f", r.move).c_str());
    }
    {  // newman; bounded above
        auto r = stable_bracket(1000, 814, BoundedEnd::Upper,
                                [&](std::size_t, Rng& rng) -> std::optional<double> {
            auto f = random_poly(s, rng);
            if (f.is_zero()) return std::nullopt;
            return newman_ratio(f).ratio;
        });
        pass = pass && r.ok;
        detail += fmt("newman%s; ", r.ok ? "ok" : fmt(" MOVE %.3f", r.move).c_str());
    }
    {  // flat lower; the estimate bounds the ratio below
        auto r = stable_bracket(1000, 815, BoundedEnd::Lower,
                                [&](std::size_t i, Rng& rng) -> std::optional<double> {
            auto f = random_block_poly(q, i % q.block_count(), rng);
            if (f.is_zero()) return std::nullopt;
            return flat_lower_ratio(f, 2.0, 0.0, kCfg).ratio;
        });
        pass = pass && r.ok && r.lo > 0.0;
        detail += fmt("flat%s; ", r.ok ? "ok" : fmt(" MOVE %.3f", r.move).c_str());
    }
    {  // bernstein against nu_(beta-1); bounded above
        auto numh = MeasureSpec::jacobi(-0.5);
        auto r = stable_bracket(500, 816, BoundedEnd::Upper,
                                [&](std::size_t i, Rng& rng) -> std::optional<double> {
            auto f = random_block_poly(q, i % q.block_count(), rng);
            if (f.is_zero()) return std::nullopt;
            return bernstein_ratio(f, 2.0, 2.0, 0.0, numh, 0.5, kCfg).ratio;
        });
        pass = pass && r.ok;
        detail += fmt("bernstein%s; ", r.ok ? "ok" : fmt(" MOVE %.3f", r.move).c_str());
    }
    {  // block projection; bounded above
        auto r = stable_bracket(500, 817, BoundedEnd::Upper,
                                [&](std::size_t i, Rng& rng) -> std::optional<double> {
            auto f = random_poly(s, rng);
            if (f.is_zero()) return std::nullopt;
            return block_projection_ratio(f, s, i % s.block_count(), 2.0, kCfg).ratio;
        });
        pass = pass && r.ok;
        detail += fmt("projection%s; ", r.ok ? "ok" : fmt(" MOVE %.3f", r.move).c_str());
    }

    {  // closed-form examples from the operation tables
        bool ex = true;
        ex = ex && std::fabs(newman_ratio(mono(2.0)).ratio - 1.0) < 1e-12;
        ex = ex && std::fabs(newman_ratio(MuntzPolynomial::muntz({{1, 1}, {2, -1}})).ratio -
                             4.0 / 3.0) < 1e-9;
        ex = ex && std::fabs(dilation_norm_check(mono(1.0), 0.5, 1.0, 2.0, kCfg).ratio - 0.0625) <
                       1e-10;
        ex = ex && dilation_norm_check(mono(2.0), 1.0, 2.0, 3.0, kCfg).ratio == 1.0;
        auto s7 = generate_lacunary(1.0, 2.0, 7);
        double want_dec =
            std::sqrt((1.0 / 3 + 2.0 / 66 + 1.0 / 129) / (1.0 / 3 + 1.0 / 129));
        ex = ex && std::fabs(decoupling_ratio(
                                 block_decompose(MuntzPolynomial::muntz({{1, 1}, {64, 1}}), s7),
                                 2.0, 0.0, kCfg)
                                     .ratio -
                             want_dec) < 1e-9;
        ex = ex && std::fabs(flat_lower_ratio(mono(1.0), 2.0, 0.0, kCfg).ratio -
                             1.0 / std::sqrt(3.0)) < 1e-9;
        ex = ex && std::fabs(derivative_switch_ratio(mono(1.0), 1.0, 0.0, kCfg).ratio - 1.0) <
                       1e-12;
        auto nu0 = MeasureSpec::jacobi(0.0);
        ex = ex && std::fabs(derivative_translation_ratio(mono(1.0), 1.0, nu0, kCfg).ratio -
                             0.5) < 1e-5;
        auto dira = MeasureSpec::atomic({0.7}, {1.0});
        ex = ex && std::fabs(derivative_translation_ratio(mono(3.0), 1.0, dira, kCfg).ratio -
                             0.7) < 1e-6;
        auto numh = MeasureSpec::jacobi(-0.5);
        ex = ex && std::fabs(ipp_check([](double t) { return t * t * t; }, numh, 0.5, 2.0, kCfg)
                                 .ratio -
                             1.0) < 1e-9;
        ex = ex && std::fabs(bernstein_ratio(mono(8.0), 2.0, 2.0, 0.0, nu0, 1.0, kCfg).ratio -
                             1.0) < 1e-12;
        auto lc = loc_max_check(MuntzPolynomial::muntz({{2, 1}, {4, -1}}), 8.0);
        ex = ex && lc.satisfied && std::fabs(lc.x0 - 1.0 / std::sqrt(2.0)) < 1e-6;
        auto lc2 = loc_max_check(MuntzPolynomial::muntz({{2, 1}, {4, -1}}), 0.1);
        ex = ex && !lc2.satisfied;
        auto s31 = generate_lacunary(1.0, 2.0, 31);
        double oracle = 0.0;
        for (int k = 0; k <= 30; ++k)
            oracle += std::pow(2.0, k) * std::pow(0.5, std::pow(2.0, k));
        oracle *= 0.5;
        ex = ex && std::fabs(kernel_ratio(s31, 1.0, {0.5}).first.ratio - oracle) < 1e-12;
        ex = ex && pointwise_block_ratio(mono(8.0), s).ratio < 1.0 + 1e-9;
        pass = pass && ex;
        detail += fmt("closed forms %s", ex ? "ok" : "BROKEN");
    }

    report_line(9, pass, "inequality ratio suite brackets and closed-form examples", detail);
}

void criterion_10(const std::string& cli) {
    if (cli.empty()) {
        report_line(10, false, "CLI determinism", "no --cli path supplied");
        return;
    }
    if (std::system("mkdir -p acceptance_tmp") != 0) {
        report_line(10, false, "CLI determinism", "cannot create work directory");
        return;
    }
    {
        std::ofstream f("acceptance_tmp/geo2.json");
        f << R"({"kind":"lacunary","lambda0":1.0,"ratio":2.0,"count":12})";
    }
    {
        std::ofstream f("acceptance_tmp/cantor.json");
        f << R"({"kind":"cantor","r":0.3333333333333333})";
    }
    auto run = [&](const std::string& cmd) {
        int rc = std::system(cmd.c_str());
        return WEXITSTATUS(rc);
    };
    auto body = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return CheckReport::from_json(json::parse(ss.str())).body_string();
    };
    bool pass = true;
    pass = pass && run(cli + " classify --measure acceptance_tmp/cantor.json --beta 0.6309 --p 2"
                             " --json acceptance_tmp/c1.json >/dev/null 2>&1") == 0;
    pass = pass && run(cli + " classify --measure acceptance_tmp/cantor.json --beta 0.6309 --p 2"
                             " --json acceptance_tmp/c2.json >/dev/null 2>&1") == 0;
    pass = pass && body("acceptance_tmp/c1.json") == body("acceptance_tmp/c2.json");

    std::string dec = " decoupling --spectrum acceptance_tmp/geo2.json --p 2 --alpha 0"
                      " --trials 200 --seed 7";
    pass = pass && run(cli + dec + " --json acceptance_tmp/d1.json --csv acceptance_tmp/d1.csv"
                                   " >/dev/null 2>&1") == 0;
    pass = pass && run(cli + dec + " --json acceptance_tmp/d2.json --csv acceptance_tmp/d2.csv"
                                   " >/dev/null 2>&1") == 0;
    pass = pass && body("acceptance_tmp/d1.json") == body("acceptance_tmp/d2.json");
    {
        std::ifstream a("acceptance_tmp/d1.csv", std::ios::binary);
        std::ifstream b("acceptance_tmp/d2.csv", std::ios::binary);
        std::ostringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        pass = pass && sa.str() == sb.str() && !sa.str().empty();
    }
    report_line(10, pass, "CLI reports are byte-identical for identical seeds",
                "classify + decoupling rerun comparison");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    }
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(cli);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
