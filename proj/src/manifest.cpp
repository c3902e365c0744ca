#include "mgce/manifest.hpp"

#include <set>

namespace mgce {

using nlohmann::json;

namespace {

LieElement parse_element(const json& value, const DgLieAlgebra& g, const std::string& where)
{
    LieElement out;
    if (!value.is_object())
        throw ManifestError(ManifestError::Kind::parse, where + ": expected an object of coefficients");
    for (const auto& [key, coeff] : value.items()) {
        auto idx = g.index_of(key);
        if (!idx)
            throw ManifestError(ManifestError::Kind::unknown_name,
                                where + ": unknown generator '" + key + "'");
        if (!coeff.is_string())
            throw ManifestError(ManifestError::Kind::bad_rational,
                                where + ": coefficient of '" + key + "' must be a rational string");
        try {
            Rat q = rat_from_string(coeff.get<std::string>());
            if (q != 0)
                out[*idx] = q;
        } catch (const BadRational& e) {
            throw ManifestError(ManifestError::Kind::bad_rational, where + ": " + e.what());
        }
    }
    return out;
}

LieElement parse_rep_element(const json& value, const Representation& m, const std::string& where)
{
    LieElement out;
    if (!value.is_object())
        throw ManifestError(ManifestError::Kind::parse, where + ": expected an object of coefficients");
    for (const auto& [key, coeff] : value.items()) {
        auto idx = m.index_of(key);
        if (!idx)
            throw ManifestError(ManifestError::Kind::unknown_name,
                                where + ": unknown basis vector '" + key + "'");
        if (!coeff.is_string())
            throw ManifestError(ManifestError::Kind::bad_rational,
                                where + ": coefficient of '" + key + "' must be a rational string");
        try {
            Rat q = rat_from_string(coeff.get<std::string>());
            if (q != 0)
                out[*idx] = q;
        } catch (const BadRational& e) {
            throw ManifestError(ManifestError::Kind::bad_rational, where + ": " + e.what());
        }
    }
    return out;
}

} // namespace

Manifest parse_manifest(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ManifestError(ManifestError::Kind::parse,
                            "parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object())
        throw ManifestError(ManifestError::Kind::parse, "manifest must be a JSON object");
    Manifest m;
    m.name = doc.value("name", "");
    std::set<std::string> seen;
    const json generators = doc.value("generators", json::array());
    for (const auto& gen : generators) {
        const std::string name = gen.at("name").get<std::string>();
        if (!seen.insert(name).second)
            throw ManifestError(ManifestError::Kind::duplicate_name,
                                "duplicate generator '" + name + "'");
        m.algebra.add_generator(name, gen.value("degree", 0));
    }
    const json differential = doc.value("differential", json::array());
    for (const auto& entry : differential) {
        const std::string src = entry.at("src").get<std::string>();
        auto idx = m.algebra.index_of(src);
        if (!idx)
            throw ManifestError(ManifestError::Kind::unknown_name,
                                "differential: unknown generator '" + src + "'");
        m.algebra.set_differential(*idx, parse_element(entry.at("image"), m.algebra,
                                                       "differential of " + src));
    }
    const json bracket = doc.value("bracket", json::array());
    for (const auto& entry : bracket) {
        const std::string left = entry.at("left").get<std::string>();
        const std::string right = entry.at("right").get<std::string>();
        auto li = m.algebra.index_of(left);
        auto ri = m.algebra.index_of(right);
        if (!li || !ri)
            throw ManifestError(ManifestError::Kind::unknown_name,
                                "bracket [" + left + "," + right + "]: unknown generator");
        m.algebra.set_bracket(*li, *ri, parse_element(entry.at("value"), m.algebra,
                                                      "bracket [" + left + "," + right + "]"));
    }
    const json representations = doc.value("representations", json::object());
    for (const auto& [rep_name, body] : representations.items()) {
        Representation rep;
        std::set<std::string> rep_seen;
        const json basis = body.value("basis", json::array());
        for (const auto& vec : basis) {
            const std::string name = vec.at("name").get<std::string>();
            if (!rep_seen.insert(name).second)
                throw ManifestError(ManifestError::Kind::duplicate_name,
                                    "duplicate basis vector '" + name + "' in representation '"
                                    + rep_name + "'");
            rep.add_basis_vector(name, vec.value("degree", 0));
        }
        const json rep_differential = body.value("differential", json::array());
        for (const auto& entry : rep_differential) {
            const std::string src = entry.at("src").get<std::string>();
            auto idx = rep.index_of(src);
            if (!idx)
                throw ManifestError(ManifestError::Kind::unknown_name,
                                    "representation '" + rep_name + "': unknown basis vector '"
                                    + src + "'");
            rep.set_differential(*idx, parse_rep_element(entry.at("image"), rep,
                                                         rep_name + ": differential of " + src));
        }
        const json action = body.value("action", json::array());
        for (const auto& entry : action) {
            const std::string gen = entry.at("generator").get<std::string>();
            const std::string vec = entry.at("vector").get<std::string>();
            auto gi = m.algebra.index_of(gen);
            if (!gi)
                throw ManifestError(ManifestError::Kind::unknown_name,
                                    "representation '" + rep_name + "': unknown generator '"
                                    + gen + "'");
            auto vi = rep.index_of(vec);
            if (!vi)
                throw ManifestError(ManifestError::Kind::unknown_name,
                                    "representation '" + rep_name + "': unknown basis vector '"
                                    + vec + "'");
            rep.set_action(*gi, *vi, parse_rep_element(entry.at("value"), rep,
                                                       rep_name + ": action of " + gen + " on "
                                                       + vec));
        }
        m.representations.emplace(rep_name, std::move(rep));
    }
    if (doc.contains("requests")) {
        const auto& req = doc.at("requests");
        if (req.contains("maxweight"))
            m.default_maxweight = req.at("maxweight").get<int>();
        if (req.contains("degrees")) {
            const auto& d = req.at("degrees");
            m.default_degrees = std::make_pair(d.at(0).get<int>(), d.at(1).get<int>());
        }
    }
    return m;
}

json manifest_to_json(const Manifest& m)
{
    json doc;
    doc["name"] = m.name;
    json gens = json::array();
    for (const auto& g : m.algebra.generators())
        gens.push_back({{"degree", g.degree}, {"name", g.name}});
    doc["generators"] = gens;
    json diff = json::array();
    for (int i = 0; i < m.algebra.dim(); ++i) {
        const auto& img = m.algebra.differential_of(i);
        if (img.empty())
            continue;
        json coeffs;
        for (const auto& [k, c] : img)
            coeffs[m.algebra.generator(k).name] = rat_to_string(c);
        diff.push_back({{"image", coeffs}, {"src", m.algebra.generator(i).name}});
    }
    doc["differential"] = diff;
    json bracket = json::array();
    for (int i = 0; i < m.algebra.dim(); ++i)
        for (int j = i; j < m.algebra.dim(); ++j) {
            const LieElement value = m.algebra.bracket_of(i, j);
            if (value.empty())
                continue;
            json coeffs;
            for (const auto& [k, c] : value)
                coeffs[m.algebra.generator(k).name] = rat_to_string(c);
            bracket.push_back({{"left", m.algebra.generator(i).name},
                               {"right", m.algebra.generator(j).name},
                               {"value", coeffs}});
        }
    doc["bracket"] = bracket;
    json reps = json::object();
    for (const auto& [name, rep] : m.representations) {
        json body;
        json basis = json::array();
        for (int k = 0; k < rep.dim(); ++k)
            basis.push_back({{"degree", rep.degree(k)}, {"name", rep.basis_vector(k).name}});
        body["basis"] = basis;
        json rdiff = json::array();
        for (int k = 0; k < rep.dim(); ++k) {
            const auto& img = rep.differential_of(k);
            if (img.empty())
                continue;
            json coeffs;
            for (const auto& [t, c] : img)
                coeffs[rep.basis_vector(t).name] = rat_to_string(c);
            rdiff.push_back({{"image", coeffs}, {"src", rep.basis_vector(k).name}});
        }
        body["differential"] = rdiff;
        json action = json::array();
        for (int i = 0; i < m.algebra.dim(); ++i)
            for (int k = 0; k < rep.dim(); ++k) {
                const auto& value = rep.action_of(i, k);
                if (value.empty())
                    continue;
                json coeffs;
                for (const auto& [t, c] : value)
                    coeffs[rep.basis_vector(t).name] = rat_to_string(c);
                action.push_back({{"generator", m.algebra.generator(i).name},
                                  {"value", coeffs},
                                  {"vector", rep.basis_vector(k).name}});
            }
        body["action"] = action;
        reps[name] = body;
    }
    doc["representations"] = reps;
    if (m.default_maxweight || m.default_degrees) {
        json req;
        if (m.default_maxweight)
            req["maxweight"] = *m.default_maxweight;
        if (m.default_degrees)
            req["degrees"] = {m.default_degrees->first, m.default_degrees->second};
        doc["requests"] = req;
    }
    return doc;
}

std::string serialize_manifest(const Manifest& m)
{
    return manifest_to_json(m).dump(2) + "\n";
}

} // namespace mgce
