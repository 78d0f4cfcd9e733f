#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "muntzlab/embeddings.hpp"
#include "muntzlab/inequalities.hpp"
#include "muntzlab/measure.hpp"
#include "muntzlab/spectrum.hpp"

namespace muntzlab {

using json = nlohmann::json;

std::string format_g17(double v);
std::string fnv1a_hex(std::string_view bytes);

// Spec-file loaders.  Malformed content raises ParseError naming the field.
BlockSpectrum spectrum_from_json(const json& j);
MeasureSpec measure_from_json(const json& j);
EmbeddingProblem problem_from_json(const json& j);

json spectrum_to_json(const BlockSpectrum& s);
json measure_to_json(const MeasureSpec& m);
json ratio_to_json(const RatioReport& r);
json bracket_to_json(const Bracket& b);
json series_to_json(const SeriesDiagnosis& d);
json fit_to_json(const BetaClassFit& f);

// One verification run.  Serialization is deterministic (sorted keys,
// shortest round-trip numbers); the body excludes the wall time, so equal
// inputs and seed reproduce it byte for byte.
struct CheckReport {
    std::string check_name;
    std::vector<std::pair<std::string, std::string>> input_digests;  // (label, fnv1a)
    json parameters = json::object();
    json results = json::object();
    std::uint64_t seed = 0;
    std::string tool_version;
    double wall_time_ms = 0.0;

    json to_json() const;
    static CheckReport from_json(const json& j);
    std::string body_string() const;
    std::string full_string() const;
};

struct CsvRow {
    std::string check;
    std::string param1;
    std::string param2;
    std::string value;
    std::string witness;
};

std::string to_csv(const std::vector<CsvRow>& rows);

}  // namespace muntzlab
