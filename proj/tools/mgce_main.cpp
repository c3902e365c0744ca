#include "mgce/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CommonFlags {
    std::optional<int> max_weight;
    std::optional<int> pbw_degree;
    std::string degrees;
    std::string coeff;
    std::string side = "cohom";
    std::string out = "json";
    bool allow_truncated = false;
    std::vector<std::string> manifests;
};

void add_common(CLI::App* cmd, CommonFlags& flags, int min_manifests, int max_manifests)
{
    cmd->add_option("--max-weight", flags.max_weight, "weight window (default: dim of the algebra)");
    cmd->add_option("--pbw-degree", flags.pbw_degree, "enveloping word cap (default: dim + 2)");
    cmd->add_option("--degrees", flags.degrees, "degree window a..b");
    cmd->add_option("--coeff", flags.coeff, "representation name (or 'trivial')");
    cmd->add_option("--side", flags.side, "hom or cohom")->check(CLI::IsMember({"hom", "cohom"}));
    cmd->add_option("--out", flags.out, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_flag("--allow-truncated", flags.allow_truncated,
                  "accept a possibly unfaithful weight window");
    if (max_manifests > 0)
        cmd->add_option("manifest", flags.manifests, "manifest file(s)")
            ->expected(min_manifests, max_manifests);
}

int run(const std::string& command, const CommonFlags& flags)
{
    mgce::CommandOptions opt;
    opt.command = command;
    opt.max_weight = flags.max_weight;
    opt.pbw_degree = flags.pbw_degree;
    opt.side = flags.side;
    opt.out = flags.out;
    opt.allow_truncated = flags.allow_truncated;
    if (!flags.coeff.empty())
        opt.coeff = flags.coeff;
    if (!flags.degrees.empty()) {
        const auto pos = flags.degrees.find("..");
        if (pos == std::string::npos) {
            std::cerr << "--degrees expects a..b\n";
            return 2;
        }
        try {
            opt.degrees = std::make_pair(std::stoi(flags.degrees.substr(0, pos)),
                                         std::stoi(flags.degrees.substr(pos + 2)));
        } catch (const std::exception&) {
            std::cerr << "--degrees expects a..b\n";
            return 2;
        }
    }
    std::vector<mgce::Manifest> manifests;
    for (const auto& path : flags.manifests) {
        try {
            manifests.push_back(mgce::parse_manifest(read_file(path)));
        } catch (const mgce::ManifestError& e) {
            nlohmann::json report{{"checks", {{"error", e.what()}}},
                                  {"input", {path}},
                                  {"params", {{"command", command}}},
                                  {"tables", nlohmann::json::object()},
                                  {"warnings", nlohmann::json::array()}};
            std::cout << mgce::render_report(report, flags.out);
            return 2;
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
    mgce::CommandResult res = mgce::run_command(opt, manifests);
    std::cout << mgce::render_report(res.report, flags.out);
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mixed graded Chevalley-Eilenberg calculator over exact rationals"};
    app.require_subcommand(1);

    std::map<std::string, CommonFlags> flags;
    struct Subcommand {
        const char* name;
        const char* help;
        int min_manifests, max_manifests;
    };
    const std::vector<Subcommand> subcommands{
        {"validate", "check the algebra and representation axioms", 1, 1},
        {"ce", "weightwise dimensions of the mixed graded complex", 1, 1},
        {"betti", "homology of the stabilized total complex", 1, 1},
        {"tate", "the stabilized total complex and its homology", 1, 1},
        {"duality", "cohomological = dual of homological, cell-exact", 1, 1},
        {"monoidality", "CE of a product against the tensor of CEs", 1, 2},
        {"check-paper-example", "run the built-in worked example end to end", 0, 0},
    };
    for (const auto& sub : subcommands) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        add_common(cmd, flags[sub.name], sub.min_manifests, sub.max_manifests);
    }
    CLI11_PARSE(app, argc, argv);
    for (const auto& sub : subcommands)
        if (app.got_subcommand(sub.name))
            return run(sub.name, flags.at(sub.name));
    return 2;
}
