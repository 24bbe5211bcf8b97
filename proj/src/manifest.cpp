#include "ntor/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace ntor {

namespace {

const std::set<std::string> kOperations = {"torsion", "dual-refined", "admissible", "sigma",
                                           "pairing", "alexander",    "smith",      "volume-form"};

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ValidationError("manifest: " + where + ": " + what);
}

// Re-throws parse errors with the JSON path prepended.
template <class F>
auto at_path(const std::string& where, F&& f)
{
    try {
        return f();
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

Mat parse_matrix(const json& j, const FieldPtr& f, const std::string& where)
{
    if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != j[0].size() || j[r].empty())
            fail(where, "rows must be nonempty arrays of equal length");
        std::vector<Scalar> row;
        for (size_t c = 0; c < j[r].size(); ++c) {
            std::string w = where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            if (!j[r][c].is_string()) fail(w, "entries are scalar strings");
            row.push_back(at_path(w, [&] { return parse_scalar(j[r][c].get<std::string>(), f); }));
        }
        rows.push_back(std::move(row));
    }
    return Mat::from_rows(f, rows);
}

std::string get_string(const json& j, const char* key)
{
    if (!j.contains(key)) fail(key, "missing");
    if (!j[key].is_string()) fail(key, "expected a string");
    return j[key].get<std::string>();
}

json scalar_json(const Scalar& s) { return s.str(); }

json numeric_json(long double x) { return std::stod(format_number(x)); }

json pairing_json(const PairingMatrix& P)
{
    return json{{"degrees", {P.deg_left, P.deg_right}}, {"symmetry", P.symmetry}, {"matrix", matrix_json(P.M)}};
}

QuotientDescriptor pick_quotient(const Manifest& m, const RunOptions& opt, const QuotientDescriptor& fallback)
{
    const auto& q = opt.quotient ? opt.quotient : m.quotient;
    return q ? QuotientDescriptor::parse(*q, m.field) : fallback;
}

}  // namespace

// ---------------------------------------------------------------- manifest I/O

Manifest Manifest::from_json(const json& j)
{
    static const std::set<std::string> keys = {"field",  "generators", "relators",        "identity",  "representation",
                                               "form",   "sigma",      "sigma_generator", "meridians", "operation",
                                               "quotient", "output"};
    if (!j.is_object()) throw ValidationError("manifest: top level must be an object");
    for (const auto& [k, v] : j.items())
        if (!keys.count(k)) fail(k, "unknown key");
    Manifest m;
    try {
        m.operation = j.value("operation", std::string("dual-refined"));
        if (!kOperations.count(m.operation)) fail("operation", "unknown operation '" + m.operation + "'");
        m.field = at_path("field", [&] { return parse_field(j.value("field", std::string("Q"))); });
        if (!j.contains("generators") || !j["generators"].is_array()) fail("generators", "expected an array of names");
        std::set<std::string> seen;
        for (const auto& g : j["generators"]) {
            std::string name = g.get<std::string>();
            if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])) || !seen.insert(name).second)
                fail("generators", "names must be distinct identifiers");
            m.pres.generators.push_back(name);
        }
        const json rels = j.value("relators", json::array());
        for (size_t r = 0; r < rels.size(); ++r) {
            std::string w = "relators[" + std::to_string(r) + "]";
            m.pres.relators.push_back(at_path(w, [&] { return parse_word(rels[r].get<std::string>(), m.pres.generators); }));
        }
        if (m.operation != "alexander") {
            m.pres.validate(true);
            m.identity = at_path("identity", [&] { return parse_identity(get_string(j, "identity"), m.pres.generators); });
            if (!verify_identity(m.pres, m.identity)) fail("identity", "does not reduce to the trivial word");
        }
        if (j.contains("representation")) {
            const json& r = j["representation"];
            if (!r.is_object() || !r.contains("images")) fail("representation", "expected {\"images\": [...]}");
            if (r["images"].size() != m.pres.generators.size()) fail("representation", "one image per generator");
            std::vector<Mat> imgs;
            for (size_t i = 0; i < r["images"].size(); ++i)
                imgs.push_back(parse_matrix(r["images"][i], m.field, "representation.images[" + std::to_string(i) + "]"));
            m.images = imgs;
            m.unimodular = r.value("unimodular", false);
        }
        if (j.contains("form")) {
            const json& fj = j["form"];
            BilinearForm b;
            b.psi0 = parse_matrix(fj.at("matrix"), m.field, "form.matrix");
            std::string sym = fj.value("symmetry", std::string("hermitian"));
            if (sym == "hermitian") b.symmetry = Symmetry::Hermitian;
            else if (sym == "anti-hermitian") b.symmetry = Symmetry::AntiHermitian;
            else fail("form.symmetry", "expected hermitian or anti-hermitian");
            m.form = b;
        }
        if (j.contains("sigma")) m.sigma = TwoChain{j["sigma"].get<std::vector<long long>>()};
        if (j.contains("sigma_generator")) {
            json col = json::array();
            for (const auto& e : j["sigma_generator"]) col.push_back(json::array({e}));
            m.sigma_generator = parse_matrix(col, m.field, "sigma_generator");
        }
        if (j.contains("meridians")) m.meridians = j["meridians"].get<std::vector<std::vector<int>>>();
        if (j.contains("quotient")) m.quotient = j["quotient"].get<std::string>();
        if (j.contains("output")) m.output = j["output"].get<std::string>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("manifest: ") + e.what());
    }
    if (m.sigma && m.sigma->c.size() != m.pres.relators.size()) fail("sigma", "one coefficient per relator");
    if (m.operation == "alexander" && m.meridians.size() != m.pres.generators.size())
        fail("meridians", "one exponent vector per generator");
    // build once so that field and dimension errors surface before any computation
    if (m.operation != "alexander" && m.operation != "smith") m.bilinear_form().check(m.representation());
    return m;
}

json Manifest::to_json() const
{
    json j;
    j["field"] = field->describe();
    j["generators"] = pres.generators;
    json rels = json::array();
    for (const Word& w : pres.relators) rels.push_back(w.str(pres.generators));
    j["relators"] = rels;
    if (operation != "alexander") j["identity"] = identity.str(pres.generators);
    auto bare = [](const Mat& M) {
        json rows = json::array();
        for (int r = 0; r < M.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < M.cols(); ++c) row.push_back(M(r, c).value_str());
            rows.push_back(row);
        }
        return rows;
    };
    if (images) {
        json imgs = json::array();
        for (const Mat& M : *images) imgs.push_back(bare(M));
        j["representation"] = {{"images", imgs}, {"unimodular", unimodular}};
    }
    if (form)
        j["form"] = {{"matrix", bare(form->psi0)},
                     {"symmetry", form->symmetry == Symmetry::Hermitian ? "hermitian" : "anti-hermitian"}};
    if (sigma) j["sigma"] = sigma->c;
    if (sigma_generator) {
        json col = json::array();
        for (int r = 0; r < sigma_generator->rows(); ++r) col.push_back((*sigma_generator)(r, 0).value_str());
        j["sigma_generator"] = col;
    }
    if (!meridians.empty()) j["meridians"] = meridians;
    j["operation"] = operation;
    if (quotient) j["quotient"] = *quotient;
    if (output) j["output"] = *output;
    return j;
}

Representation Manifest::representation() const
{
    if (!images) return Representation::trivial(pres, field, 1);
    return Representation(pres, field, *images, unimodular);
}

BilinearForm Manifest::bilinear_form() const
{
    if (form) {
        int n = images ? (*images)[0].rows() : 1;
        if (form->psi0.rows() != n || !form->psi0.is_square())
            throw ValidationError("manifest: form: matrix size does not match the representation");
        return *form;
    }
    return BilinearForm::standard(field, images ? (*images)[0].rows() : 1);
}

Manifest parse_manifest(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("manifest is not valid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    return Manifest::from_json(j);
}

// ---------------------------------------------------------------- reports

std::string format_number(long double x)
{
    if (std::abs(x) < numeric_precision()) x = 0;
    std::ostringstream os;
    os << std::setprecision(precision_digits()) << static_cast<double>(x);
    return os.str();
}

json matrix_json(const Mat& m)
{
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).value_str());
        rows.push_back(row);
    }
    return rows;
}

json report_json(const TorsionReport& r)
{
    json j;
    j["kind"] = r.kind;
    j["dims"] = r.dims;
    j["raw"] = scalar_json(r.raw);
    j["quotient"] = r.cls.quotient.describe();
    j["class"] = r.cls.canonical.str();
    j["partial"] = r.cls.partial();
    if (r.cls.canonical.kind == PayloadKind::UnitCircle)
        j["unit"] = {numeric_json(r.cls.canonical.unit.real()), numeric_json(r.cls.canonical.unit.imag())};
    if (r.chain_torsion) j["chain_torsion"] = scalar_json(*r.chain_torsion);
    if (r.integral) {
        json div = json::array();
        for (const auto& d : r.integral->divisors) {
            json row = json::array();
            for (const auto& x : d) row.push_back(x.get_str());
            div.push_back(row);
        }
        j["integral"] = {{"divisors", div},
                         {"h1_order", r.integral->h1_order.get_str()},
                         {"magnitude", r.integral->magnitude.get_str()},
                         {"sign", r.integral->sign}};
    }
    j["provenance"] = r.provenance;
    json bases = json::array();
    for (const Mat& b : r.bases) bases.push_back(matrix_json(b));
    j["bases"] = bases;
    json pairs = json::array();
    for (const auto& P : r.pairings) pairs.push_back(pairing_json(P));
    j["pairings"] = pairs;
    json num = json::object();
    for (const auto& [k, v] : r.numeric) num[k] = numeric_json(v);
    if (!num.empty()) j["numeric"] = num;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

json run_manifest(const Manifest& m, const RunOptions& opt)
{
    json out;
    out["operation"] = m.operation;
    out["field"] = m.field->describe();
    const std::string& op = m.operation;
    if (op == "alexander") {
        AlexanderResult a = alexander_polynomial(m.pres, m.meridians);
        out["polynomial"] = a.str();
        out["variables"] = a.vars;
    } else if (op == "smith") {
        IntegralComplex ic = integral_complex(m.pres, m.identity);
        IntegralTorsion it = smith_and_integral_torsion(ic);
        json div = json::array();
        for (const auto& d : it.divisors) {
            json row = json::array();
            for (const auto& x : d) row.push_back(x.get_str());
            div.push_back(row);
        }
        out["divisors"] = div;
        out["h1_order"] = it.h1_order.get_str();
        out["magnitude"] = it.magnitude.get_str();
        out["sign"] = it.sign;
    } else {
        Representation rho = m.representation();
        BilinearForm psi = m.bilinear_form();
        auto need_sigma = [&]() -> const TwoChain& {
            if (!m.sigma) throw ValidationError("operation '" + op + "' needs a sigma 2-chain");
            return *m.sigma;
        };
        TorsionReport r;
        bool have_report = true;
        if (op == "torsion" && !m.images) {
            r = trivial_coefficient_torsion(m.pres, m.identity, m.field);
        } else if (op == "torsion") {
            BasedComplex c = BasedComplex::from(twisted_cochain_complex(m.pres, m.identity, rho));
            CohomologyData d = cohomology_bases(c);
            RealSide rs = real_side(m.pres, m.identity);
            r.kind = "torsion";
            r.dims = d.dims;
            r.bases = d.h;
            r.provenance = "deterministic cohomology bases";
            r.raw = refined_sign_torsion(c, d.h, rs.complex, rs.h, rho.dim());
            r.cls = canonical_class(r.raw, det_quotient(rho));
            if (std::all_of(d.dims.begin(), d.dims.end(), [](int x) { return x == 0; })) r.chain_torsion = chain_torsion(c);
        } else if (op == "dual-refined") {
            r = dual_refined_torsion(m.pres, m.identity, rho, psi);
        } else if (op == "admissible") {
            r = admissible_torsion(m.pres, m.identity, rho, psi, need_sigma());
        } else if (op == "sigma") {
            r = sigma_torsion(m.pres, m.identity, rho, psi, need_sigma(), m.sigma_generator);
        } else if (op == "volume-form") {
            VolumeFormValue v = volume_form(m.pres, m.identity, rho, psi);
            out["d"] = v.d;
            out["tau"] = scalar_json(v.tau);
            out["coefficient"] = {numeric_json(v.coefficient.real()), numeric_json(v.coefficient.imag())};
            out["branch"] = v.branch;
            have_report = false;
        } else {  // pairing
            BasedComplex c = BasedComplex::from(twisted_cochain_complex(m.pres, m.identity, rho));
            CohomologyData d = cohomology_bases(c);
            out["dims"] = d.dims;
            out["bases"] = json::array();
            for (const Mat& b : d.h) out["bases"].push_back(matrix_json(b));
            json pairs = json::array();
            pairs.push_back(pairing_json(pairing03(psi, d.h[0], d.h[3])));
            pairs.push_back(pairing_json(d_sharp_pairing(m.pres, m.identity, rho, psi, d.h[1], d.h[2])));
            if (m.sigma) {
                pairs.push_back(pairing_json(surface_matrix(m.pres, rho, psi, d.h[1], *m.sigma)));
                out["admissible"] = is_admissible(m.pres, m.identity, rho, psi, *m.sigma);
            }
            out["pairings"] = pairs;
            have_report = false;
        }
        if (have_report) {
            if (opt.quotient || m.quotient) r.cls = canonical_class(r.raw, pick_quotient(m, opt, r.cls.quotient));
            json rj = report_json(r);
            for (const auto& [k, v] : rj.items()) out[k] = v;
        }
    }
    out["precision"] = numeric_precision();
    return out;
}

// ---------------------------------------------------------------- rendering

OutputFormat parse_output_format(const std::string& s)
{
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw ValidationError("unknown output format '" + s + "' (text, json, csv)");
}

namespace {

std::string flat(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_number(v.get<double>());
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + flat(v[i]);
        return s;
    }
    return v.dump();
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

std::string render_report(const json& report, OutputFormat fmt)
{
    std::ostringstream os;
    switch (fmt) {
    case OutputFormat::Json: os << report.dump(2) << "\n"; break;
    case OutputFormat::Text:
        for (const auto& [k, v] : report.items()) {
            if (k == "bases" || k == "pairings") {
                for (size_t i = 0; i < v.size(); ++i) os << k << "[" << i << "]: " << flat(v[i]) << "\n";
            } else {
                os << k << ": " << flat(v) << "\n";
            }
        }
        break;
    case OutputFormat::Csv:
        os << "key,value\n";
        for (const auto& [k, v] : report.items()) os << csv_cell(k) << "," << csv_cell(flat(v)) << "\n";
        break;
    }
    return os.str();
}

std::string render_table(const Table& t, OutputFormat fmt)
{
    std::ostringstream os;
    switch (fmt) {
    case OutputFormat::Json: {
        json rows = json::array();
        for (const auto& r : t.rows) {
            json o;
            for (size_t c = 0; c < t.columns.size(); ++c) o[t.columns[c]] = c < r.size() ? r[c] : "";
            rows.push_back(o);
        }
        os << json{{"columns", t.columns}, {"rows", rows}, {"precision", numeric_precision()}}.dump(2) << "\n";
        break;
    }
    case OutputFormat::Csv:
        for (size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_cell(t.columns[c]);
        os << "\n";
        for (const auto& r : t.rows) {
            for (size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_cell(c < r.size() ? r[c] : "");
            os << "\n";
        }
        break;
    case OutputFormat::Text: {
        std::vector<size_t> w(t.columns.size());
        for (size_t c = 0; c < w.size(); ++c) {
            w[c] = t.columns[c].size();
            for (const auto& r : t.rows)
                if (c < r.size()) w[c] = std::max(w[c], r[c].size());
        }
        auto line = [&](const std::vector<std::string>& r) {
            for (size_t c = 0; c < w.size(); ++c) {
                std::string s = c < r.size() ? r[c] : "";
                os << s << std::string(c + 1 < w.size() ? w[c] - s.size() + 2 : 0, ' ');
            }
            os << "\n";
        };
        line(t.columns);
        for (const auto& r : t.rows) line(r);
        break;
    }
    }
    return os.str();
}

}  // namespace ntor
