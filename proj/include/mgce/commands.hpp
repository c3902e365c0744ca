#pragma once

#include "mgce/chevalley_eilenberg.hpp"
#include "mgce/manifest.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mgce {

// Exit codes shared by the library entry point and the executable:
//   0 ok, 1 violation found, 2 input error, 3 window unfaithful and
//   --allow-truncated not given.
struct CommandOptions {
    std::string command;
    std::optional<int> max_weight;
    std::optional<int> pbw_degree;
    std::optional<std::pair<int, int>> degrees;
    std::optional<std::string> coeff;
    std::string side = "cohom";
    std::string out = "json";
    bool allow_truncated = false;
};

struct CommandResult {
    nlohmann::json report;
    int exit_code = 0;
};

CommandResult run_command(const CommandOptions& opt, const std::vector<Manifest>& manifests);
std::string render_report(const nlohmann::json& report, const std::string& out_format);

DgLieAlgebra builtin_nonabelian2(); // e1, e2 in degree 0 with [e1,e2] = e1

} // namespace mgce
