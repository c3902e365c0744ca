#pragma once

#include "mgce/dg_lie.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>

namespace mgce {

struct ManifestError : std::runtime_error {
    enum class Kind { parse, unknown_name, duplicate_name, bad_rational };
    Kind kind;
    ManifestError(Kind k, const std::string& message)
        : std::runtime_error(message), kind(k) {}
};

// Textual description of an algebra, its representations and the default
// computation requests. All scalars are exact rational strings.
struct Manifest {
    std::string name;
    DgLieAlgebra algebra;
    std::map<std::string, Representation> representations;
    std::optional<int> default_maxweight;
    std::optional<std::pair<int, int>> default_degrees;
};

Manifest parse_manifest(const std::string& text);
nlohmann::json manifest_to_json(const Manifest& m);
std::string serialize_manifest(const Manifest& m);

} // namespace mgce
