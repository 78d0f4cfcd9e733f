#include "muntzlab/report.hpp"

#include <cstdio>

namespace muntzlab {

std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

double require_number(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number())
        throw ParseError(field, "expected a number");
    return j[field].get<double>();
}

int require_int(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(field, "expected an integer");
    return j[field].get<int>();
}

std::string require_string(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_string())
        throw ParseError(field, "expected a string");
    return j[field].get<std::string>();
}

}  // namespace

BlockSpectrum spectrum_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("spectrum", "expected an object");
    std::string kind = require_string(j, "kind");
    if (kind == "lacunary") {
        return generate_lacunary(require_number(j, "lambda0"), require_number(j, "ratio"),
                                 require_int(j, "count"));
    }
    if (kind == "quasi") {
        if (!j.contains("bases") || !j["bases"].is_array())
            throw ParseError("bases", "expected an array of numbers");
        std::vector<double> bases;
        for (const auto& b : j["bases"]) {
            if (!b.is_number()) throw ParseError("bases", "expected an array of numbers");
            bases.push_back(b.get<double>());
        }
        return generate_quasi_lacunary(std::move(bases), require_number(j, "ratio"),
                                       require_int(j, "count"));
    }
    throw ParseError("kind", "expected \"lacunary\" or \"quasi\"");
}

MeasureSpec measure_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("measure", "expected an object");
    std::string kind = require_string(j, "kind");
    if (kind == "jacobi") return MeasureSpec::jacobi(require_number(j, "alpha"));
    if (kind == "cantor") {
        int depth = j.contains("depth") ? require_int(j, "depth") : 20;
        return MeasureSpec::cantor(require_number(j, "r"), depth);
    }
    if (kind == "atomic") {
        if (!j.contains("atoms") || !j["atoms"].is_array())
            throw ParseError("atoms", "expected an array of [t, w] pairs");
        std::vector<double> pts, wts;
        for (const auto& a : j["atoms"]) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
                throw ParseError("atoms", "expected an array of [t, w] pairs");
            pts.push_back(a[0].get<double>());
            wts.push_back(a[1].get<double>());
        }
        return MeasureSpec::atomic(std::move(pts), std::move(wts));
    }
    if (kind == "tail")
        return MeasureSpec::tail_envelope(require_number(j, "beta"), require_number(j, "C"));
    throw ParseError("kind", "expected \"jacobi\", \"cantor\", \"atomic\" or \"tail\"");
}

EmbeddingProblem problem_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("problem", "expected an object");
    if (!j.contains("spectrum")) throw ParseError("spectrum", "missing");
    if (!j.contains("measure")) throw ParseError("measure", "missing");
    std::optional<double> rhs;
    if (j.contains("rhs_alpha") && !j["rhs_alpha"].is_null())
        rhs = require_number(j, "rhs_alpha");
    return EmbeddingProblem::create(spectrum_from_json(j["spectrum"]),
                                    measure_from_json(j["measure"]), require_number(j, "p"),
                                    require_number(j, "beta"), rhs);
}

json spectrum_to_json(const BlockSpectrum& s) {
    json blocks = json::array();
    for (std::size_t k = 0; k < s.block_count(); ++k) {
        auto [b, e] = s.block_range(k);
        blocks.push_back(e - b);
    }
    return json{{"exponents", s.exponents()},
                {"block_starts", s.block_starts()},
                {"block_sizes", blocks},
                {"ratio_lower", s.ratio_lower()},
                {"attained_q", s.attained_q()},
                {"block_cap", s.block_cap()},
                {"inverse_exponent_sum", s.inverse_exponent_sum()}};
}

json measure_to_json(const MeasureSpec& m) {
    switch (m.kind()) {
        case MeasureKind::Jacobi:
            return json{{"kind", "jacobi"}, {"alpha", m.alpha()}};
        case MeasureKind::Cantor:
            return json{{"kind", "cantor"}, {"r", m.contraction()}, {"depth", m.cantor_depth()}};
        case MeasureKind::Atomic: {
            json atoms = json::array();
            for (const auto& [t, w] : m.atoms()) atoms.push_back(json::array({t, w}));
            return json{{"kind", "atomic"}, {"atoms", atoms}};
        }
        case MeasureKind::TailEnvelope:
            return json{{"kind", "tail"}, {"beta", m.envelope_beta()}, {"C", m.envelope_constant()}};
    }
    return json();
}

json ratio_to_json(const RatioReport& r) {
    json ctx = json::object();
    for (const auto& [k, v] : r.context) ctx[k] = v;
    return json{{"ratio", r.ratio}, {"witness", r.witness}, {"context", ctx}};
}

json bracket_to_json(const Bracket& b) {
    return json{{"lo", b.lo},           {"hi", b.hi},         {"lo_witness", b.lo_witness},
                {"hi_witness", b.hi_witness}, {"trials", b.trials}, {"skipped", b.skipped}};
}

json series_to_json(const SeriesDiagnosis& d) {
    return json{{"terms", d.terms},
                {"partial_sums", d.partial_sums},
                {"verdict", to_string(d.verdict)},
                {"slope", d.slope}};
}

json fit_to_json(const BetaClassFit& f) {
    return json{{"beta_hat", f.beta_hat},
                {"constant_hat", f.constant_hat},
                {"grid", f.grid},
                {"residuals", f.residuals}};
}

json CheckReport::to_json() const {
    json inputs = json::object();
    for (const auto& [name, digest] : input_digests) inputs[name] = digest;
    return json{{"check", check_name},     {"inputs", inputs}, {"params", parameters},
                {"results", results},      {"seed", seed},     {"version", tool_version},
                {"wall_time_ms", wall_time_ms}};
}

CheckReport CheckReport::from_json(const json& j) {
    CheckReport r;
    r.check_name = j.at("check").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items())
        r.input_digests.emplace_back(k, v.get<std::string>());
    r.parameters = j.at("params");
    r.results = j.at("results");
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tool_version = j.at("version").get<std::string>();
    r.wall_time_ms = j.value("wall_time_ms", 0.0);
    return r;
}

std::string CheckReport::body_string() const {
    json j = to_json();
    j.erase("wall_time_ms");
    return j.dump(2) + "\n";
}

std::string CheckReport::full_string() const { return to_json().dump(2) + "\n"; }

std::string to_csv(const std::vector<CsvRow>& rows) {
    std::string out = "check,param1,param2,value,witness\n";
    for (const CsvRow& r : rows) {
        out += r.check + "," + r.param1 + "," + r.param2 + "," + r.value + "," + r.witness + "\n";
    }
    return out;
}

}  // namespace muntzlab
