#include "projineq/cli/inputs.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "projineq/cli/error.hpp"
#include "projineq/errors.hpp"

namespace projineq::cli {

namespace {

using nlohmann::json;

Vector vector_field(const json &value, const std::string &where) {
    if (!value.is_array() || value.empty()) {
        throw InputError(ExitCode::MalformedInput, where + ": expected a non-empty array of numbers");
    }
    std::vector<double> coords;
    coords.reserve(value.size());
    for (const auto &c : value) {
        if (!c.is_number()) throw InputError(ExitCode::MalformedInput, where + ": expected numbers");
        coords.push_back(c.get<double>());
    }
    try {
        return Vector(std::move(coords));
    } catch (const DomainError &e) {
        throw InputError(ExitCode::InvalidValue, where + ": " + e.what());
    }
}

void check_dim(const Vector &v, std::size_t n, const std::string &where) {
    if (v.dim() != n) {
        throw InputError(ExitCode::DimensionMismatch, where + ": dimension " + std::to_string(v.dim()) +
                                                          " does not match x (" + std::to_string(n) + ")");
    }
}

} // namespace

BoundsInput parse_bounds_input(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::out_of_range &e) {
        // numbers beyond the double range
        throw InputError(ExitCode::InvalidValue, std::string("bounds input: ") + e.what());
    } catch (const json::exception &e) {
        throw InputError(ExitCode::MalformedInput, std::string("bounds input: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError(ExitCode::MalformedInput, "bounds input: expected a JSON object");
    if (doc.contains("version")) {
        const auto &v = doc["version"];
        if (!v.is_number_integer() || v.get<int>() != kBoundsInputVersion) {
            throw InputError(ExitCode::MalformedInput, "bounds input: unsupported version (expected 1)");
        }
    }
    for (const char *key : {"x", "y"}) {
        if (!doc.contains(key)) {
            throw InputError(ExitCode::MalformedInput, std::string("bounds input: missing field '") + key + "'");
        }
    }
    const bool has_span = doc.contains("span");
    const bool has_z = doc.contains("z");
    if (has_span == has_z) {
        throw InputError(ExitCode::MalformedInput, "bounds input: exactly one of 'span' or 'z' is required");
    }

    BoundsInput in{vector_field(doc["x"], "x"), vector_field(doc["y"], "y"), std::nullopt, std::nullopt};
    const std::size_t n = in.x.dim();
    check_dim(in.y, n, "y");

    if (has_span) {
        const auto &span = doc["span"];
        if (!span.is_array()) throw InputError(ExitCode::MalformedInput, "span: expected an array of vectors");
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < span.size(); ++i) {
            const std::string where = "span[" + std::to_string(i) + "]";
            vs.push_back(vector_field(span[i], where));
            check_dim(vs.back(), n, where);
        }
        in.span = std::move(vs);
    } else {
        in.z = vector_field(doc["z"], "z");
        check_dim(*in.z, n, "z");
        if (norm(*in.z) == 0.0) throw InputError(ExitCode::ZeroDirection, "z: zero direction");
    }
    return in;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(ExitCode::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double tolerance_from_env(double fallback) {
    const char *raw = std::getenv("PROJINEQ_TOLERANCE");
    if (raw == nullptr || *raw == '\0') return fallback;
    char *end = nullptr;
    errno = 0;
    const double v = std::strtod(raw, &end);
    if (errno != 0 || end == raw || *end != '\0' || !std::isfinite(v) || !(v > 0.0)) {
        throw InputError(ExitCode::Usage, std::string("PROJINEQ_TOLERANCE: not a positive number: '") + raw + "'");
    }
    return v;
}

} // namespace projineq::cli
