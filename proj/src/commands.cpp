#include "mgce/commands.hpp"

#include <sstream>

namespace mgce {

using nlohmann::json;

namespace {

json dims_table(const ChainComplex& c)
{
    json out = json::object();
    for (const auto& [n, d] : c.dims())
        out[std::to_string(n)] = d;
    return out;
}

json weight_dims_table(const MixedModule& m)
{
    json out = json::object();
    for (const auto& [p, c] : m.weights())
        out[std::to_string(p)] = dims_table(c);
    return out;
}

std::string violation_text(const LieViolation& v)
{
    std::string msg = v.identity + ": " + v.message;
    if (!v.witnesses.empty()) {
        msg += " (witnesses:";
        for (const auto& w : v.witnesses)
            msg += " " + w;
        msg += ")";
    }
    return msg;
}

std::string expansion_text(const DgLieAlgebra& cone, const Expansion& e)
{
    if (e.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e) {
        std::string coeff = rat_to_string(c);
        if (!first)
            os << (coeff[0] == '-' ? " - " : " + ");
        else if (coeff[0] == '-')
            os << "-";
        std::string mag = coeff[0] == '-' ? coeff.substr(1) : coeff;
        if (mag != "1" || w.empty())
            os << mag << (w.empty() ? "" : "*");
        for (size_t k = 0; k < w.size(); ++k)
            os << (k ? "." : "") << cone.generator(w[k]).name;
        first = false;
    }
    return os.str();
}

} // namespace

DgLieAlgebra builtin_nonabelian2()
{
    DgLieAlgebra g;
    g.add_generator("e1", 0);
    g.add_generator("e2", 0);
    g.set_bracket(0, 1, {{0, 1}});
    return g;
}

std::string render_report(const json& report, const std::string& out_format)
{
    if (out_format == "tsv") {
        std::ostringstream os;
        if (report.contains("tables"))
            for (const auto& [table, body] : report.at("tables").items()) {
                os << "# " << table << "\n";
                for (const auto& [key, value] : body.items()) {
                    if (value.is_object()) {
                        for (const auto& [k2, v2] : value.items())
                            os << key << "\t" << k2 << "\t"
                               << (v2.is_string() ? v2.get<std::string>() : v2.dump()) << "\n";
                    } else {
                        os << key << "\t"
                           << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
                    }
                }
            }
        return os.str();
    }
    return report.dump(2) + "\n";
}

CommandResult run_command(const CommandOptions& opt, const std::vector<Manifest>& manifests)
{
    CommandResult res;
    json& report = res.report;
    report["checks"] = json::object();
    report["input"] = json::array();
    for (const auto& m : manifests)
        report["input"].push_back(m.name);
    report["tables"] = json::object();
    report["warnings"] = json::array();

    auto fail_input = [&](const std::string& message) {
        if (!report.contains("params"))
            report["params"] = {{"command", opt.command}};
        report["checks"]["error"] = message;
        res.exit_code = 2;
        return res;
    };

    if (opt.command == "check-paper-example") {
        const DgLieAlgebra g = builtin_nonabelian2();
        report["params"] = {{"command", opt.command}, {"pbw_degree", 3}, {"max_weight", 2}};
        const UConeMixed uc = u_cone_mixed(g, 3, 2);
        const LieRewriter rw(uc.cone);
        const Word b1{2}, b2{3};
        bool all_ok = true;
        json rows = json::object();
        json expected_rows = json::object();
        // every enveloping monomial u of word length <= 2, applied to the
        // weight-2 generator b(e1)^b(e2), must follow the assignment
        //   u.b(e1).b(e2) -> (u.e1) b(e2) - (u.e2) b(e1) - u b([e1,e2])
        std::vector<Word> us{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 1}};
        for (const auto& u : us) {
            Word w = u;
            w.push_back(b1[0]);
            w.push_back(b2[0]);
            Expansion got = uc.epsilon_expansion(w);
            Expansion expected;
            auto times = [&](Word base, int letter) {
                base.push_back(letter);
                return base;
            };
            for (const auto& [nw, nc] : rw.normalize(times(u, 0)))
                expansion_add(expected, times(nw, b2[0]), nc);
            for (const auto& [nw, nc] : rw.normalize(times(u, 1)))
                expansion_add(expected, times(nw, b1[0]), -nc);
            expansion_add(expected, times(u, b1[0]), -1);
            std::string label = expansion_text(uc.cone, {{w, Rat(1)}});
            rows[label] = expansion_text(uc.cone, got);
            expected_rows[label] = expansion_text(uc.cone, expected);
            if (got != expected)
                all_ok = false;
        }
        report["tables"]["mixed_differential_weight2"] = rows;
        report["tables"]["expected_weight2"] = expected_rows;
        const CeHomological ce = ce_homological(g, 2);
        const RatMatrix eps2 = ce.module.mixed(2, -2);
        RatMatrix expected2(2, 1);
        expected2.set(0, 0, -1);
        report["tables"]["ce_epsilon_weight2"] = {{"e1~^e2~", expansion_text(
            ce.cone, {{Word{2}, Rat(-1)}})}};
        if (eps2 != expected2)
            all_ok = false;
        report["checks"]["example"] = all_ok ? "ok" : "mismatch";
        res.exit_code = all_ok ? 0 : 1;
        return res;
    }

    if (manifests.empty())
        return fail_input("a manifest is required");
    const Manifest& m = manifests.front();
    const DgLieAlgebra& g = m.algebra;
    const int dim = g.dim();
    const int maxweight = opt.max_weight ? *opt.max_weight
        : (m.default_maxweight ? *m.default_maxweight : dim);
    const int pbw_degree = opt.pbw_degree ? *opt.pbw_degree : dim + 2;
    std::pair<int, int> degrees = opt.degrees ? *opt.degrees
        : (m.default_degrees ? *m.default_degrees : std::make_pair(0, dim));
    report["params"] = {{"command", opt.command},
                        {"max_weight", maxweight},
                        {"pbw_degree", pbw_degree},
                        {"degrees", {degrees.first, degrees.second}},
                        {"side", opt.side},
                        {"allow_truncated", opt.allow_truncated}};
    if (opt.coeff)
        report["params"]["coeff"] = *opt.coeff;
    if (maxweight < 0)
        return fail_input("max_weight must be nonnegative");

    if (opt.command == "validate") {
        bool ok = true;
        if (auto v = g.validate()) {
            report["checks"]["algebra"] = violation_text(*v);
            ok = false;
        } else {
            report["checks"]["algebra"] = "ok";
        }
        for (const auto& [name, rep] : m.representations) {
            if (auto v = validate_rep(g, rep)) {
                report["checks"]["representation:" + name] = violation_text(*v);
                ok = false;
            } else {
                report["checks"]["representation:" + name] = "ok";
            }
        }
        json gens = json::object();
        for (const auto& gen : g.generators())
            gens[gen.name] = gen.degree;
        report["tables"]["generators"] = gens;
        res.exit_code = ok ? 0 : 1;
        return res;
    }

    // everything below computes through a weight window
    const bool unfaithful = !g.is_discrete() || maxweight < dim;
    if (unfaithful)
        report["warnings"].push_back(g.is_discrete()
            ? "window may be unfaithful: max_weight < dim"
            : "window faithfulness is the caller's responsibility for non-discrete inputs");

    const Representation* coeff = nullptr;
    Representation trivial_storage;
    if (opt.coeff) {
        auto it = m.representations.find(*opt.coeff);
        if (it != m.representations.end()) {
            coeff = &it->second;
        } else if (*opt.coeff == "trivial") {
            trivial_storage = Representation::trivial();
            coeff = &trivial_storage;
        } else {
            return fail_input("unknown representation '" + *opt.coeff + "'");
        }
    }

    try {
        if (opt.command == "ce") {
            if (opt.side == "hom") {
                if (coeff)
                    return fail_input("coefficients are supported on the cohomological side only");
                const CeHomological ce = ce_homological(g, maxweight);
                report["tables"]["weight_dims"] = weight_dims_table(ce.module);
                report["checks"]["mixed_valid"] = ce.module.validate() ? "violation" : "ok";
            } else if (opt.side == "cohom") {
                MixedModule module = coeff
                    ? ce_coefficients(g, *coeff, maxweight).module
                    : ce_cohomological(g, maxweight).module;
                report["tables"]["weight_dims"] = weight_dims_table(module);
                report["checks"]["mixed_valid"] = module.validate() ? "violation" : "ok";
            } else {
                return fail_input("side must be hom or cohom");
            }
        } else if (opt.command == "betti") {
            const CeSide side = (opt.side == "hom") ? CeSide::homological : CeSide::cohomological;
            if (opt.side != "hom" && opt.side != "cohom")
                return fail_input("side must be hom or cohom");
            BettiResult b = betti(g, side, coeff, maxweight, degrees.first, degrees.second);
            json table = json::object();
            for (const auto& [deg, value] : b.by_degree)
                table[std::to_string(deg)] = value;
            report["tables"]["betti"] = table;
            for (const auto& w : b.warnings)
                report["warnings"].push_back(w);
        } else if (opt.command == "tate") {
            ChainComplex total;
            if (opt.side == "hom") {
                if (coeff)
                    return fail_input("coefficients are supported on the cohomological side only");
                total = tate_total(ce_homological(g, maxweight).module, -maxweight);
            } else if (opt.side == "cohom") {
                MixedModule module = coeff
                    ? ce_coefficients(g, *coeff, maxweight).module
                    : ce_cohomological(g, maxweight).module;
                total = tate_total(module, 0);
            } else {
                return fail_input("side must be hom or cohom");
            }
            report["tables"]["total_dims"] = dims_table(total);
            json hom = json::object();
            for (const auto& [n, h] : total.homology())
                hom[std::to_string(n)] = h;
            report["tables"]["homology"] = hom;
            report["checks"]["square_zero"] = total.validate() ? "violation" : "ok";
        } else if (opt.command == "duality") {
            auto mismatch = duality_check(g, maxweight);
            report["checks"]["duality"] = mismatch ? *mismatch : "ok";
            if (mismatch)
                res.exit_code = 1;
        } else if (opt.command == "monoidality") {
            const Manifest& second = manifests.size() > 1 ? manifests[1] : manifests[0];
            auto mismatch = monoidality_check(g, second.algebra, maxweight);
            report["checks"]["monoidality"] = mismatch ? *mismatch : "ok";
            if (mismatch)
                res.exit_code = 1;
        } else {
            return fail_input("unknown command '" + opt.command + "'");
        }
    } catch (const AxiomFailure& e) {
        report["checks"]["violation"] = e.what();
        res.exit_code = 1;
        return res;
    } catch (const RepInvalid& e) {
        report["checks"]["violation"] = e.what();
        res.exit_code = 1;
        return res;
    } catch (const NotDiscrete& e) {
        return fail_input(e.what());
    } catch (const std::invalid_argument& e) {
        return fail_input(e.what());
    }
    if (res.exit_code == 0 && unfaithful && !opt.allow_truncated)
        res.exit_code = 3;
    return res;
}

} // namespace mgce
