#pragma once

#include <json.hpp>
#include <string>

#include "torquad/autgroup.hpp"
#include "torquad/complex.hpp"
#include "torquad/geometry.hpp"
#include "torquad/verify.hpp"

// All emitters are deterministic: fields in fixed order, lists sorted,
// coordinates printed with 17 significant digits. Identical inputs give
// byte-identical output.

namespace torquad {

inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json complex_to_json(const CellComplex& c);
CellComplex complex_from_json(const nlohmann::ordered_json& j);

// Complex schema extended with a "coords" array.
std::string realization_to_json_string(const CellComplex& c,
                                       const Realization& r);
Realization realization_from_json(const nlohmann::ordered_json& j);

// OFF-style export: "4OFF" header, counts line, one 4-component line per
// vertex, faces as index lists.
std::string realization_to_off(const CellComplex& c, const Realization& r);

nlohmann::ordered_json group_to_json(const PermGroup& g,
                                     bool include_elements = false);
PermGroup group_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::ordered_json& j);
bool certificates_equal(const Certificate& a, const Certificate& b);

// Human-readable summary, one result per line.
std::string certificate_summary(const Certificate& cert);

std::string format_double(double x);  // %.17g

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace torquad
