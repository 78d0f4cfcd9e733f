// muntzlab command line: run named checks against spectrum/measure spec
// files and emit machine-readable reports (JSON, optional CSV).
//
// Exit codes: 0 success, 1 input error, 2 check failure.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "muntzlab/embeddings.hpp"
#include "muntzlab/inequalities.hpp"
#include "muntzlab/kernels.hpp"
#include "muntzlab/report.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using muntzlab::json;

struct Options {
    std::string spectrum_file;
    std::string measure_file;
    std::string json_path;
    std::string csv_path;
    double p = 2.0;
    double beta = 1.0;
    double alpha = 0.0;
    double tol = 1e-10;
    int trials = 200;
    std::uint64_t seed = 0;
    bool alpha_given = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw muntzlab::ParseError("file", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_spec_file(const std::string& path) {
    std::string text = slurp(path);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw muntzlab::ParseError("file", "'" + path + "' is not valid JSON");
    return j;
}

muntzlab::BlockSpectrum load_spectrum(const Options& opt, muntzlab::CheckReport& report) {
    if (opt.spectrum_file.empty()) throw muntzlab::ParseError("spectrum", "--spectrum is required");
    report.input_digests.emplace_back("spectrum", muntzlab::fnv1a_hex(slurp(opt.spectrum_file)));
    return muntzlab::spectrum_from_json(parse_spec_file(opt.spectrum_file));
}

muntzlab::MeasureSpec load_measure(const Options& opt, muntzlab::CheckReport& report) {
    if (opt.measure_file.empty()) throw muntzlab::ParseError("measure", "--measure is required");
    report.input_digests.emplace_back("measure", muntzlab::fnv1a_hex(slurp(opt.measure_file)));
    return muntzlab::measure_from_json(parse_spec_file(opt.measure_file));
}

muntzlab::quad::QuadratureConfig quad_config(const Options& opt) {
    muntzlab::quad::QuadratureConfig cfg;
    cfg.rel_tol = opt.tol;
    cfg.validate();
    return cfg;
}

void emit(muntzlab::CheckReport& report, const Options& opt,
          const std::vector<muntzlab::CsvRow>& csv_rows,
          std::chrono::steady_clock::time_point t0) {
    report.tool_version = kVersion;
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::string text = report.full_string();
    if (opt.json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.json_path, std::ios::binary);
        out << text;
    }
    if (!opt.csv_path.empty()) {
        std::ofstream out(opt.csv_path, std::ios::binary);
        out << muntzlab::to_csv(csv_rows);
    }
}

// ---------------------------------------------------------------------------

int run_spectrum(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    muntzlab::CheckReport report;
    report.check_name = "spectrum";
    report.seed = opt.seed;
    muntzlab::BlockSpectrum s = load_spectrum(opt, report);
    report.results = muntzlab::spectrum_to_json(s);
    std::vector<muntzlab::CsvRow> rows;
    rows.push_back({"spectrum", "q", "", muntzlab::format_g17(s.attained_q()), ""});
    rows.push_back({"spectrum", "N", "", std::to_string(s.block_cap()), ""});
    emit(report, opt, rows, t0);
    return 0;
}

int run_decoupling(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    muntzlab::CheckReport report;
    report.check_name = "decoupling";
    report.seed = opt.seed;
    muntzlab::BlockSpectrum s = load_spectrum(opt, report);
    auto cfg = quad_config(opt);
    report.parameters = json{{"p", opt.p}, {"alpha", opt.alpha}, {"trials", opt.trials}};

    auto trial = [&](std::size_t, muntzlab::Rng& rng) -> std::optional<double> {
        muntzlab::MuntzPolynomial f = muntzlab::random_poly(s, rng);
        if (f.is_zero()) return std::nullopt;
        auto blocks = muntzlab::block_decompose(f, s);
        return muntzlab::decoupling_ratio(blocks, opt.p, opt.alpha, cfg).ratio;
    };
    muntzlab::Bracket b = muntzlab::bracket_scan(opt.trials, opt.seed, trial);
    report.results = muntzlab::bracket_to_json(b);

    std::vector<muntzlab::CsvRow> rows;
    rows.push_back({"decoupling", muntzlab::format_g17(opt.p), muntzlab::format_g17(opt.alpha),
                    muntzlab::format_g17(b.lo), b.lo_witness});
    rows.push_back({"decoupling", muntzlab::format_g17(opt.p), muntzlab::format_g17(opt.alpha),
                    muntzlab::format_g17(b.hi), b.hi_witness});
    emit(report, opt, rows, t0);
    return b.lo > 0.0 ? 0 : 2;
}

int run_kernel(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    muntzlab::CheckReport report;
    report.check_name = "kernel";
    report.seed = opt.seed;
    muntzlab::BlockSpectrum s = load_spectrum(opt, report);
    if (!(opt.alpha > 0.0))
        throw muntzlab::DomainError("kernel estimate requires alpha > 0");
    double lam_max = s.exponents().back();
    if (lam_max < 20.0)
        throw muntzlab::DomainError("spectrum too short for the kernel window (lambda_max < 20)");
    const double s_max = 0.5;
    const double s_min = std::max(1e-6, 10.0 / lam_max);
    std::vector<double> grid;
    const int n = 64;
    for (int i = 0; i < n; ++i) {
        double f = static_cast<double>(i) / (n - 1);
        grid.push_back(1.0 - s_max * std::pow(s_min / s_max, f));
    }
    auto [mn, mx] = muntzlab::kernel_ratio(s, opt.alpha, grid);
    report.parameters = json{{"alpha", opt.alpha}, {"grid_points", n}};
    report.results = json{{"min", muntzlab::ratio_to_json(mn)},
                          {"max", muntzlab::ratio_to_json(mx)},
                          {"spread", mx.ratio / mn.ratio}};
    std::vector<muntzlab::CsvRow> rows;
    rows.push_back({"kernel", muntzlab::format_g17(opt.alpha), "min",
                    muntzlab::format_g17(mn.ratio), mn.witness});
    rows.push_back({"kernel", muntzlab::format_g17(opt.alpha), "max",
                    muntzlab::format_g17(mx.ratio), mx.witness});
    emit(report, opt, rows, t0);
    return 0;
}

int run_bernstein(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    muntzlab::CheckReport report;
    report.check_name = "bernstein";
    report.seed = opt.seed;
    muntzlab::BlockSpectrum s = load_spectrum(opt, report);
    muntzlab::MeasureSpec mu = load_measure(opt, report);
    auto cfg = quad_config(opt);
    report.parameters =
        json{{"p", opt.p}, {"q", opt.p}, {"alpha", opt.alpha}, {"beta", opt.beta},
             {"trials", opt.trials}};

    auto trial = [&](std::size_t i, muntzlab::Rng& rng) -> std::optional<double> {
        std::size_t k = i % s.block_count();
        muntzlab::MuntzPolynomial f = muntzlab::random_block_poly(s, k, rng);
        if (f.is_zero()) return std::nullopt;
        return muntzlab::bernstein_ratio(f, opt.p, opt.p, opt.alpha, mu, opt.beta, cfg).ratio;
    };
    muntzlab::Bracket b = muntzlab::bracket_scan(opt.trials, opt.seed, trial);
    report.results = muntzlab::bracket_to_json(b);
    std::vector<muntzlab::CsvRow> rows;
    rows.push_back({"bernstein", muntzlab::format_g17(opt.p), muntzlab::format_g17(opt.beta),
                    muntzlab::format_g17(b.hi), b.hi_witness});
    emit(report, opt, rows, t0);
    return std::isfinite(b.hi) ? 0 : 2;
}

int run_embedding(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    muntzlab::CheckReport report;
    report.check_name = "embedding";
    report.seed = opt.seed;
    muntzlab::BlockSpectrum s = load_spectrum(opt, report);
    muntzlab::MeasureSpec mu = load_measure(opt, report);
    auto cfg = quad_config(opt);
    std::optional<double> rhs;
    if (opt.alpha_given) rhs = opt.alpha;
    auto problem = muntzlab::EmbeddingProblem::create(s, mu, opt.p, opt.beta, rhs);
    report.parameters = json{{"p", opt.p},
                             {"beta", opt.beta},
                             {"rhs_alpha", rhs ? json(*rhs) : json()},
                             {"trials", opt.trials}};
    auto res = muntzlab::embedding_constant_search(problem, opt.trials, opt.seed, 6, cfg);
    json witness = json::array();
    for (const auto& term : res.witness.terms())
        witness.push_back(json::array({term.exponent, term.coeff}));
    report.results = json{{"best", muntzlab::ratio_to_json(res.best)},
                          {"witness_terms", witness},
                          {"skipped", res.skipped}};
    std::vector<muntzlab::CsvRow> rows;
    rows.push_back({"embedding", muntzlab::format_g17(opt.p), muntzlab::format_g17(opt.beta),
                    muntzlab::format_g17(res.best.ratio), res.best.witness});
    emit(report, opt, rows, t0);
    return 0;
}

int run_classify(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    muntzlab::CheckReport report;
    report.check_name = "classify";
    report.seed = opt.seed;
    muntzlab::MeasureSpec mu = load_measure(opt, report);
    auto cfg = quad_config(opt);
    report.parameters = json{{"beta", opt.beta}, {"p", opt.p}};

    json results = json::object();
    results["mass"] = mu.mass();

    std::vector<double> fit_grid;
    for (int j = 1; j <= 8; ++j) fit_grid.push_back(std::pow(10.0, -j));
    try {
        results["tail_fit"] = muntzlab::fit_to_json(muntzlab::beta_class_fit(mu, fit_grid));
    } catch (const muntzlab::Error& e) {
        results["tail_fit"] = json{{"error", e.what()}};
    }
    results["envelope_constant"] =
        muntzlab::tail_envelope_constant(mu, opt.beta, fit_grid);

    std::vector<muntzlab::CsvRow> rows;
    if (opt.beta > 0.0 && opt.beta < 1.0 && mu.kind() != muntzlab::MeasureKind::TailEnvelope) {
        auto spectrum = muntzlab::generate_lacunary(1.0, 2.0, 12);
        auto problem = muntzlab::EmbeddingProblem::create(spectrum, mu, opt.p, opt.beta);
        auto series = muntzlab::moment_series(problem, 12);
        results["moment_series"] = muntzlab::series_to_json(series);
        std::vector<double> deltas = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
        auto dic = muntzlab::double_integral_condition(mu, opt.beta, deltas, cfg);
        results["double_integral"] = muntzlab::series_to_json(dic);
        results["verdicts_agree"] =
            series.verdict == dic.verdict || series.verdict == muntzlab::Verdict::Inconclusive ||
            dic.verdict == muntzlab::Verdict::Inconclusive;
        rows.push_back({"classify", "moment_series", "", to_string(series.verdict), ""});
        rows.push_back({"classify", "double_integral", "", to_string(dic.verdict), ""});
    }
    report.results = results;
    emit(report, opt, rows, t0);
    return 0;
}

int run_schur(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    muntzlab::CheckReport report;
    report.check_name = "schur";
    report.seed = opt.seed;
    muntzlab::BlockSpectrum s = load_spectrum(opt, report);
    if (!(opt.p > 1.0)) throw muntzlab::DomainError("schur requires p > 1");
    std::vector<double> ps = {opt.p, opt.p / (opt.p - 1.0)};
    int i_max = std::max(1, static_cast<int>((s.size() - 1) / 2));
    int i_half = std::max(1, i_max / 2);
    auto full = muntzlab::schur_kernel_sums(s, ps, opt.beta, i_max);
    auto half = muntzlab::schur_kernel_sums(s, ps, opt.beta, i_half);
    report.parameters = json{{"p", opt.p}, {"beta", opt.beta}, {"i_max", i_max}};
    report.results = json{
        {"row_sup", full.row_sup},
        {"col_sup", full.col_sup},
        {"half_window", json{{"i_max", i_half}, {"row_sup", half.row_sup}, {"col_sup", half.col_sup}}},
        {"row_rel_delta", (full.row_sup - half.row_sup) / full.row_sup}};
    std::vector<muntzlab::CsvRow> rows;
    rows.push_back({"schur", muntzlab::format_g17(opt.p), std::to_string(i_max),
                    muntzlab::format_g17(full.row_sup), "row"});
    rows.push_back({"schur", muntzlab::format_g17(opt.p), std::to_string(i_max),
                    muntzlab::format_g17(full.col_sup), "col"});
    emit(report, opt, rows, t0);
    return 0;
}

// Aggregated default property suite.
int run_all(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    muntzlab::CheckReport report;
    report.check_name = "all";
    report.seed = opt.seed;
    auto cfg = quad_config(opt);
    json checks = json::array();
    int failures = 0;
    auto record = [&](const std::string& name, bool pass, json details) {
        checks.push_back(json{{"name", name}, {"pass", pass}, {"details", details}});
        if (!pass) ++failures;
    };

    {  // spectrum properties
        auto s = muntzlab::generate_lacunary(1.0, 2.0, 12);
        auto q = muntzlab::generate_quasi_lacunary({1.0, 1.5}, 3.0, 6);
        bool pass = std::fabs(s.attained_q() - 2.0) < 1e-12 && s.block_cap() == 1 &&
                    std::fabs(q.attained_q() - 2.0) < 1e-12 && q.block_cap() == 2;
        for (double c : {2.5, 10.0}) {
            std::vector<double> scaled = q.exponents();
            for (double& x : scaled) x *= c;
            auto v = muntzlab::validate(scaled, q.block_starts());
            pass = pass && v.ok && v.block_cap == 2;
        }
        record("spectrum_props", pass, json{{"q", s.attained_q()}, {"quasi_q", q.attained_q()}});
    }
    {  // quadrature against the Beta closed form
        double worst = 0.0;
        for (double lam : {0.5, 3.0, 47.2, 1000.0}) {
            for (double al : {-0.5, 0.0, 1.0, 2.5}) {
                double got = muntzlab::quad::integrate_weighted(
                    [lam](double t) { return std::pow(t, lam); }, al, cfg);
                double want = muntzlab::quad::beta_function(lam + 1.0, al + 1.0);
                worst = std::max(worst, std::fabs(got / want - 1.0));
            }
        }
        record("quad_monomial_oracle", worst < 1e-8, json{{"worst_rel_err", worst}});
    }
    {  // Beta asymptotics
        bool pass = true;
        json vals = json::object();
        for (double b : {0.5, 1.0, 2.0}) {
            auto rows = muntzlab::quad::beta_asymptotic_check(b, {1e4});
            double v = rows[0].second;
            vals[muntzlab::format_g17(b)] = v;
            pass = pass && std::fabs(v - 1.0) < 0.02;
            if (b == 1.0) pass = pass && std::fabs(v - 1.0) < 1e-12;
        }
        record("beta_asymptotics", pass, vals);
    }
    {  // Cantor measure
        auto mu = muntzlab::MeasureSpec::cantor(1.0 / 3.0);
        bool pass = true;
        for (int m = 1; m <= 12; ++m) {
            pass = pass && muntzlab::tail(mu, std::pow(1.0 / 3.0, m)) == std::ldexp(1.0, -m);
        }
        double worst = 0.0;
        for (int n = 1; n <= 6; ++n) {
            auto approx = muntzlab::cantor_moment_atoms(mu, n, 12);
            worst = std::max(worst, std::fabs(approx.value - muntzlab::moment(mu, n)));
        }
        pass = pass && worst < 1e-9;
        std::vector<double> grid;
        for (int m = 1; m <= 12; ++m) grid.push_back(std::pow(1.0 / 3.0, m));
        auto fit = muntzlab::beta_class_fit(mu, grid);
        double target = std::log(2.0) / std::log(3.0);
        pass = pass && std::fabs(fit.beta_hat - target) < 0.01;
        record("cantor_measure", pass,
               json{{"moment_gap", worst}, {"beta_hat", fit.beta_hat}});
    }
    {  // polynomial identities
        auto f = muntzlab::MuntzPolynomial::muntz({{1.0, 1.0}, {2.5, -0.7}, {8.0, 0.3}});
        muntzlab::Rng rng(opt.seed ^ 0x706f6c79);
        double worst = 0.0;
        for (int i = 0; i < 64; ++i) {
            double rho = 0.05 + 0.95 * rng.uniform();
            double t = rng.uniform();
            double a = muntzlab::eval(muntzlab::dilate(f, rho), t);
            double b = muntzlab::eval(f, rho * t);
            worst = std::max(worst, std::fabs(a - b) / std::max(1e-300, std::fabs(b)));
        }
        auto sn = muntzlab::sup_norm(f);
        auto sn3 = muntzlab::sup_norm(3.0 * f);
        bool pass = worst < 1e-12 && std::fabs(sn3.value - 3.0 * sn.value) < 1e-12 * sn3.value;
        record("poly_props", pass, json{{"dilate_eval_err", worst}});
    }
    {  // dilation contraction bound
        auto s = muntzlab::generate_lacunary(1.0, 2.0, 8);
        double worst = 0.0;
        const double pvals[3] = {1.0, 2.0, 3.5};
        for (int i = 0; i < 200; ++i) {
            muntzlab::Rng rng = muntzlab::Rng::for_trial(opt.seed, 9000 + i);
            auto f = muntzlab::random_poly(s, rng);
            double rho = 0.05 + 0.9 * rng.uniform();
            double p = pvals[i % 3];
            double lam = s.exponents()[i % s.size()];
            worst = std::max(worst,
                             muntzlab::dilation_norm_check(f, rho, p, lam, cfg).ratio);
        }
        record("dilation_bound", worst <= 1.0 + 1e-9, json{{"max_value", worst}});
    }
    {  // decoupling bracket
        auto s = muntzlab::generate_lacunary(1.0, 2.0, 8);
        auto trial = [&](std::size_t, muntzlab::Rng& rng) -> std::optional<double> {
            auto f = muntzlab::random_poly(s, rng);
            if (f.is_zero()) return std::nullopt;
            return muntzlab::decoupling_ratio(muntzlab::block_decompose(f, s), 2.0, 0.0, cfg)
                .ratio;
        };
        auto b = muntzlab::bracket_scan(100, opt.seed, trial);
        record("decoupling_bracket", b.lo > 0.0 && std::isfinite(b.hi),
               muntzlab::bracket_to_json(b));
    }
    {  // series verdicts
        auto spectrum = muntzlab::generate_lacunary(1.0, 2.0, 16);
        auto nu = muntzlab::MeasureSpec::jacobi(-0.5);
        auto a_half = muntzlab::MeasureSpec::atomic({0.5}, {1.0});
        auto a_one = muntzlab::MeasureSpec::atomic({1.0}, {1.0});
        auto pr = [&](const muntzlab::MeasureSpec& m) {
            return muntzlab::EmbeddingProblem::create(spectrum, m, 1.0, 0.5);
        };
        auto v1 = muntzlab::moment_series(pr(nu), 16).verdict;
        auto v2 = muntzlab::moment_series(pr(a_half), 16).verdict;
        auto v3 = muntzlab::moment_series(pr(a_one), 16).verdict;
        bool pass = v1 == muntzlab::Verdict::Diverges && v2 == muntzlab::Verdict::Converges &&
                    v3 == muntzlab::Verdict::Diverges;
        record("series_verdicts", pass,
               json{{"nu", to_string(v1)}, {"atomic_half", to_string(v2)},
                    {"atomic_one", to_string(v3)}});
    }
    {  // schur window stability (bilinear)
        auto s = muntzlab::generate_lacunary(1.0, 2.0, 97);
        auto a = muntzlab::schur_kernel_sums(s, {2.0, 2.0}, 1.0, 24);
        auto b = muntzlab::schur_kernel_sums(s, {2.0, 2.0}, 1.0, 48);
        double rel = (b.row_sup - a.row_sup) / b.row_sup;
        record("schur_stability", rel < 1e-3 && b.row_sup >= a.row_sup,
               json{{"rel_delta", rel}, {"row_sup", b.row_sup}});
    }
    {  // exact unit ratio for the Lebesgue embedding
        auto s = muntzlab::generate_lacunary(1.0, 2.0, 6);
        auto problem = muntzlab::EmbeddingProblem::create(
            s, muntzlab::MeasureSpec::jacobi(0.0), 2.0, 1.0);
        auto res = muntzlab::embedding_constant_search(problem, 10, opt.seed, 3, cfg);
        record("embedding_unit_ratio", res.best.ratio == 1.0, json{{"ratio", res.best.ratio}});
    }

    report.parameters = json{{"trials", opt.trials}};
    report.results = json{{"checks", checks}, {"failures", failures}};
    std::vector<muntzlab::CsvRow> rows;
    for (const auto& c : checks) {
        rows.push_back({"all", c["name"].get<std::string>(), "",
                        c["pass"].get<bool>() ? "pass" : "fail", ""});
    }
    emit(report, opt, rows, t0);
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Muntz polynomial / Carleson embedding numerical toolkit"};
    app.set_version_flag("--version", std::string("muntzlab ") + kVersion);
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--spectrum", opt.spectrum_file, "spectrum spec file (JSON)");
        sub->add_option("--measure", opt.measure_file, "measure spec file (JSON)");
        sub->add_option("--p", opt.p, "integrability exponent p");
        sub->add_option("--beta", opt.beta, "tail exponent beta");
        auto* a = sub->add_option("--alpha", opt.alpha, "jacobi weight exponent alpha");
        sub->add_option("--trials", opt.trials, "number of random trials");
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--csv", opt.csv_path, "CSV plot-data output path");
        sub->add_option("--json", opt.json_path, "JSON report output path (default: stdout)");
        sub->add_option("--tol", opt.tol, "quadrature relative tolerance");
        sub->parse_complete_callback([&opt, a] { opt.alpha_given = a->count() > 0; });
    };

    CLI::App* c_spectrum = app.add_subcommand("spectrum", "validate a spectrum spec");
    CLI::App* c_decoupling = app.add_subcommand("decoupling", "block-decoupling ratio bracket");
    CLI::App* c_kernel = app.add_subcommand("kernel", "two-sided kernel sum bracket");
    CLI::App* c_bernstein = app.add_subcommand("bernstein", "weighted Bernstein ratio bracket");
    CLI::App* c_embedding = app.add_subcommand("embedding", "embedding constant search");
    CLI::App* c_classify = app.add_subcommand("classify", "measure classification verdicts");
    CLI::App* c_schur = app.add_subcommand("schur", "Schur kernel row/column sums");
    CLI::App* c_all = app.add_subcommand("all", "run the default property suite");
    for (CLI::App* sub : {c_spectrum, c_decoupling, c_kernel, c_bernstein, c_embedding, c_classify,
                          c_schur, c_all}) {
        add_common(sub);
    }

    CLI11_PARSE(app, argc, argv);

    if (const char* env_seed = std::getenv("MUNTZLAB_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env_seed, &end, 10);
        if (end != env_seed && *end == '\0') opt.seed = v;
    }

    try {
        if (c_spectrum->parsed()) return run_spectrum(opt);
        if (c_decoupling->parsed()) return run_decoupling(opt);
        if (c_kernel->parsed()) return run_kernel(opt);
        if (c_bernstein->parsed()) return run_bernstein(opt);
        if (c_embedding->parsed()) return run_embedding(opt);
        if (c_classify->parsed()) return run_classify(opt);
        if (c_schur->parsed()) return run_schur(opt);
        if (c_all->parsed()) return run_all(opt);
    } catch (const muntzlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
