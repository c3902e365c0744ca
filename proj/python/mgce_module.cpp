#include "mgce/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mgce;

namespace {

Manifest manifest_from_text(const std::string& text)
{
    return parse_manifest(text);
}

std::map<int, long> betti_py(const Manifest& m, const std::string& side,
                             const std::optional<std::string>& coeff, int maxweight,
                             int degree_lo, int degree_hi)
{
    const Representation* rep = nullptr;
    Representation trivial_storage;
    if (coeff) {
        auto it = m.representations.find(*coeff);
        if (it != m.representations.end()) {
            rep = &it->second;
        } else if (*coeff == "trivial") {
            trivial_storage = Representation::trivial();
            rep = &trivial_storage;
        } else {
            throw std::invalid_argument("unknown representation '" + *coeff + "'");
        }
    }
    const CeSide s = (side == "hom") ? CeSide::homological : CeSide::cohomological;
    if (maxweight < 0)
        maxweight = m.algebra.dim();
    if (degree_hi < degree_lo)
        degree_hi = m.algebra.dim();
    return betti(m.algebra, s, rep, maxweight, degree_lo, degree_hi).by_degree;
}

std::map<int, std::map<int, int>> ce_weight_dims(const Manifest& m, const std::string& side,
                                                 int maxweight)
{
    if (maxweight < 0)
        maxweight = m.algebra.dim();
    MixedModule module = (side == "hom")
        ? ce_homological(m.algebra, maxweight).module
        : ce_cohomological(m.algebra, maxweight).module;
    std::map<int, std::map<int, int>> out;
    for (const auto& [p, c] : module.weights())
        for (const auto& [n, d] : c.dims())
            out[p][n] = d;
    return out;
}

std::string validate_py(const Manifest& m)
{
    if (auto v = m.algebra.validate())
        return v->identity + ": " + v->message;
    for (const auto& [name, rep] : m.representations)
        if (auto v = validate_rep(m.algebra, rep))
            return name + ": " + v->identity + ": " + v->message;
    return "ok";
}

py::object run_py(const std::string& command, const std::vector<std::string>& manifest_texts,
                  const py::kwargs& kwargs)
{
    CommandOptions opt;
    opt.command = command;
    if (kwargs.contains("max_weight"))
        opt.max_weight = kwargs["max_weight"].cast<int>();
    if (kwargs.contains("pbw_degree"))
        opt.pbw_degree = kwargs["pbw_degree"].cast<int>();
    if (kwargs.contains("degrees"))
        opt.degrees = kwargs["degrees"].cast<std::pair<int, int>>();
    if (kwargs.contains("coeff"))
        opt.coeff = kwargs["coeff"].cast<std::string>();
    if (kwargs.contains("side"))
        opt.side = kwargs["side"].cast<std::string>();
    if (kwargs.contains("allow_truncated"))
        opt.allow_truncated = kwargs["allow_truncated"].cast<bool>();
    std::vector<Manifest> manifests;
    for (const auto& text : manifest_texts)
        manifests.push_back(parse_manifest(text));
    CommandResult res = run_command(opt, manifests);
    py::module_ json = py::module_::import("json");
    py::dict out;
    out["exit_code"] = res.exit_code;
    out["report"] = json.attr("loads")(res.report.dump());
    return out;
}

} // namespace

PYBIND11_MODULE(_mgce, m)
{
    m.doc() = "exact mixed graded Chevalley-Eilenberg calculator";

    py::register_exception<ManifestError>(m, "ManifestError");
    py::register_exception<AxiomFailure>(m, "AxiomFailure");
    py::register_exception<RepInvalid>(m, "RepInvalid");

    py::class_<Manifest>(m, "Manifest")
        .def_static("from_text", &manifest_from_text, py::arg("text"))
        .def_property_readonly("name", [](const Manifest& man) { return man.name; })
        .def_property_readonly("dim", [](const Manifest& man) { return man.algebra.dim(); })
        .def("validate", &validate_py)
        .def("serialize", &serialize_manifest)
        .def("betti", &betti_py, py::arg("side") = "cohom",
             py::arg("coeff") = std::nullopt, py::arg("maxweight") = -1,
             py::arg("degree_lo") = 0, py::arg("degree_hi") = -1)
        .def("ce_weight_dims", &ce_weight_dims, py::arg("side") = "hom",
             py::arg("maxweight") = -1)
        .def("duality_check",
             [](const Manifest& man, int maxweight) {
                 auto r = duality_check(man.algebra,
                                        maxweight < 0 ? man.algebra.dim() : maxweight);
                 return r ? *r : std::string("ok");
             },
             py::arg("maxweight") = -1)
        .def("monoidality_check",
             [](const Manifest& man, const Manifest& other, int maxweight) {
                 auto r = monoidality_check(man.algebra, other.algebra,
                                            maxweight < 0 ? man.algebra.dim() : maxweight);
                 return r ? *r : std::string("ok");
             },
             py::arg("other"), py::arg("maxweight") = -1);

    m.def("run", &run_py, py::arg("command"), py::arg("manifests") = std::vector<std::string>{},
          "dispatch a command over parsed manifests; returns exit_code and the JSON report");

    m.def("rank", [](const std::vector<std::vector<std::string>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r ? static_cast<int>(rows[0].size()) : 0;
        RatMatrix mat(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                mat.set(i, j, rat_from_string(rows[i][j]));
        return rank(mat);
    }, "exact rank of a matrix of rational strings");
}
