#pragma once

// JSON persistence of coefficient sets:
//
//   {
//     "schema_version": 1,
//     "generator": "lanczos-interpolation-recursion",
//     "r": {"re": 1.0, "im": 62.83185307179586},
//     "n_terms": 10,
//     "coefficients": [{"re": ..., "im": ...}, ...]
//   }

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lanczos/coefficients.hpp"
#include "lanczos/errors.hpp"

namespace lanczos::cli {

inline constexpr int coefficient_schema_version = 1;
inline constexpr const char* coefficient_generator = "lanczos-interpolation-recursion";

/// Malformed or unreadable coefficient file.
class file_error : public error {
public:
    using error::error;
};

inline nlohmann::json to_json(const coefficient_set& set) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& a : set.coefficients()) coeffs.push_back({{"re", a.real()}, {"im", a.imag()}});
    return {
        {"schema_version", coefficient_schema_version},
        {"generator", coefficient_generator},
        {"r", {{"re", set.parameter().real()}, {"im", set.parameter().imag()}}},
        {"n_terms", set.size()},
        {"coefficients", std::move(coeffs)},
    };
}

inline coefficient_set coefficient_set_from_json(const nlohmann::json& j) {
    try {
        if (j.at("schema_version").get<int>() != coefficient_schema_version)
            throw file_error("unsupported schema_version " + j.at("schema_version").dump());
        if (j.at("generator").get<std::string>() != coefficient_generator)
            throw file_error("unknown generator " + j.at("generator").dump());
        const free_parameter r(j.at("r").at("re").get<double>(), j.at("r").at("im").get<double>());
        const int n_terms = j.at("n_terms").get<int>();
        const auto& list = j.at("coefficients");
        if (!list.is_array() || static_cast<int>(list.size()) != n_terms)
            throw file_error("n_terms does not match the coefficient list length");
        std::vector<std::complex<double>> a;
        a.reserve(list.size());
        for (const auto& c : list) a.emplace_back(c.at("re").get<double>(), c.at("im").get<double>());
        return {r, std::move(a)};
    } catch (const nlohmann::json::exception& e) {
        throw file_error(std::string("malformed coefficient file: ") + e.what());
    } catch (const parameter_error& e) {
        throw file_error(std::string("invalid coefficient file: ") + e.what());
    }
}

inline void write_coefficient_file(const std::filesystem::path& path, const coefficient_set& set) {
    std::ofstream os(path);
    if (!os) throw file_error("cannot open " + path.string() + " for writing");
    os << to_json(set).dump(2) << '\n';
    if (!os) throw file_error("failed writing " + path.string());
}

inline coefficient_set read_coefficient_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw file_error("cannot open " + path.string());
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw file_error(path.string() + ": " + e.what());
    }
    return coefficient_set_from_json(j);
}

}  // namespace lanczos::cli
