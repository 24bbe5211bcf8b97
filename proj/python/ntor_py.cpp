// Python bindings: manifests, catalog, sweeps and a few direct entry points.
#include "ntor/frontend.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ntor;

namespace {

py::object to_py(const json& j)
{
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list l;
        for (const auto& x : j) l.append(to_py(x));
        return l;
    }
    default: {
        py::dict d;
        for (const auto& [k, v] : j.items()) d[py::str(k)] = to_py(v);
        return d;
    }
    }
}

// Precision is process-global in the core; scope it to one call.
struct PrecisionScope {
    double saved = numeric_precision();
    explicit PrecisionScope(std::optional<double> eps)
    {
        if (eps) set_numeric_precision(*eps);
    }
    ~PrecisionScope() { set_numeric_precision(saved); }
};

RunOptions options(const std::optional<std::string>& quotient)
{
    RunOptions o;
    o.quotient = quotient;
    return o;
}

CatalogArgs catalog_args(const std::string& family, const py::kwargs& kw)
{
    CatalogArgs a;
    a.family = family;
    for (auto [key, value] : kw) {
        std::string k = py::str(key);
        auto s = [&] { return py::str(value).cast<std::string>(); };
        if (k == "op") a.op = s();
        else if (k == "p") a.p = value.cast<long>();
        else if (k == "q") a.q = value.cast<long>();
        else if (k == "field") a.field = s();
        else if (k == "abk") a.abk = s();
        else if (k == "lmn") a.lmn = s();
        else if (k == "alpha") a.alpha = s();
        else if (k == "beta_root") a.beta_root = s();
        else if (k == "gamma") a.gamma = s();
        else if (k == "case") a.case_sign = value.cast<int>();
        else if (k == "beta") a.beta = value.cast<long>();
        else if (k == "monodromy") a.monodromy = s();
        else if (k == "u") a.u = s();
        else if (k == "v") a.v = s();
        else throw ValidationError("catalog: unknown argument '" + k + "'");
    }
    return a;
}

}  // namespace

PYBIND11_MODULE(_ntor, m)
{
    m.doc() = "Refined torsion of 3-manifolds";
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ArithmeticError);

    m.def(
        "run_manifest",
        [](const std::string& text, std::optional<std::string> quotient, std::optional<double> precision) {
            PrecisionScope scope(precision);
            return to_py(run_manifest(parse_manifest(text), options(quotient)));
        },
        py::arg("manifest"), py::arg("quotient") = py::none(), py::arg("precision") = py::none(),
        "Run a JSON manifest given as text; returns the report as a dict.");

    m.def(
        "catalog_manifest",
        [](const std::string& family, const py::kwargs& kw) {
            std::optional<Manifest> man = catalog_manifest(catalog_args(family, kw));
            if (!man) throw ValidationError("this operation has no manifest form");
            return man->to_json().dump(2);
        },
        py::arg("family"), "Manifest text of a catalog entry.");

    m.def(
        "catalog",
        [](const std::string& family, std::optional<std::string> quotient, std::optional<double> precision,
           const py::kwargs& kw) {
            PrecisionScope scope(precision);
            CatalogArgs a = catalog_args(family, kw);
            std::optional<Manifest> man = catalog_manifest(a);
            return to_py(man ? run_manifest(*man, options(quotient)) : torus_volume_report(a));
        },
        py::arg("family"), py::arg("quotient") = py::none(), py::arg("precision") = py::none(),
        "Report for a catalog entry; keyword arguments follow the CLI options.");

    m.def(
        "sweep",
        [](const std::string& family, long beta, long grid, std::string abk, std::string lmn, int case_sign,
           std::optional<double> precision) {
            PrecisionScope scope(precision);
            Table t = sweep_table({family, beta, grid, abk, lmn, case_sign});
            py::list rows;
            for (const auto& r : t.rows) rows.append(py::cast(r));
            return py::make_tuple(py::cast(t.columns), rows);
        },
        py::arg("family"), py::arg("beta") = 2, py::arg("grid") = 8, py::arg("abk") = "", py::arg("lmn") = "",
        py::arg("case") = 1, py::arg("precision") = py::none(), "Sweep table as (columns, rows).");

    m.def(
        "render",
        [](const std::string& family, const std::string& fmt, std::optional<std::string> quotient,
           std::optional<double> precision, const py::kwargs& kw) {
            PrecisionScope scope(precision);
            CatalogArgs a = catalog_args(family, kw);
            std::optional<Manifest> man = catalog_manifest(a);
            return render_report(man ? run_manifest(*man, options(quotient)) : torus_volume_report(a),
                                 parse_output_format(fmt));
        },
        py::arg("family"), py::arg("fmt") = "text", py::arg("quotient") = py::none(), py::arg("precision") = py::none(),
        "Catalog report rendered as text, json or csv.");

    m.def(
        "reduce_word",
        [](const std::string& text, const std::vector<std::string>& generators) {
            return parse_word(text, generators).str(generators);
        },
        py::arg("word"), py::arg("generators"), "Freely reduced form of a word.");

    m.def(
        "fox_derivative",
        [](const std::string& word, const std::vector<std::string>& generators, int i) {
            return fox_derivative(parse_word(word, generators), i).str(generators);
        },
        py::arg("word"), py::arg("generators"), py::arg("i"), "Fox derivative with respect to generator i.");

    m.def(
        "alexander_polynomial",
        [](const std::vector<std::string>& generators, const std::vector<std::string>& relators,
           const std::vector<std::vector<int>>& meridians) {
            Presentation p;
            p.generators = generators;
            for (const auto& r : relators) p.relators.push_back(parse_word(r, generators));
            return alexander_polynomial(p, meridians).str();
        },
        py::arg("generators"), py::arg("relators"), py::arg("meridians"));

    m.def(
        "canonical_class",
        [](const std::string& value, const std::string& field, const std::string& quotient) {
            FieldPtr f = parse_field(field);
            return canonical_class(parse_scalar(value, f), QuotientDescriptor::parse(quotient, f)).canonical.str();
        },
        py::arg("value"), py::arg("field"), py::arg("quotient"), "Canonical class of a scalar in a quotient group.");
}
