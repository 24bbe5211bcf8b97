#include "ntor/frontend.hpp"

#include <sstream>

namespace ntor {

namespace {

RootOfUnity parse_root(const std::string& s, const char* what)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) throw std::invalid_argument(s);
        RootOfUnity r{std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1))};
        if (r.den <= 0) throw std::invalid_argument(s);
        return r;
    } catch (const std::logic_error&) {
        throw ValidationError(std::string(what) + ": expected a root of unity 'k/d', got '" + s + "'");
    }
}

std::vector<long> parse_longs(const std::string& s, size_t count, const char* what)
{
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    try {
        while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
    } catch (const std::logic_error&) {
        throw ValidationError(std::string(what) + ": expected integers separated by commas");
    }
    if (out.size() != count)
        throw ValidationError(std::string(what) + ": expected " + std::to_string(count) + " integers");
    return out;
}

Manifest manifest_of(const Presentation& p, const IdentityWord& W, const Representation* rho, const BilinearForm* psi,
                     const std::string& op)
{
    Manifest m;
    m.pres = p;
    m.identity = W;
    m.operation = op;
    m.field = rho ? rho->field() : Field::rationals();
    if (rho) {
        std::vector<Mat> imgs;
        for (int i = 0; i < rho->generators(); ++i) imgs.push_back(rho->image(i));
        m.images = imgs;
        m.unimodular = rho->unimodular();
    }
    if (psi) m.form = *psi;
    return m;
}

}  // namespace


namespace {

Seifert seifert_of(const CatalogArgs& a)
{
    if (!a.abk.empty() == !a.lmn.empty()) throw ValidationError("seifert: give exactly one of --abk or --lmn");
    if (!a.abk.empty()) {
        auto v = parse_longs(a.abk, 3, "--abk");
        return seifert(SeifertSpec::from_abk(v[0], v[1], v[2]));
    }
    auto v = parse_longs(a.lmn, 3, "--lmn");
    return seifert({v[0], v[1], v[2], {}});
}

TorusBundle torus_of(const CatalogArgs& a)
{
    TorusBundleSpec s;
    if (!a.monodromy.empty()) {
        auto v = parse_longs(a.monodromy, 4, "--monodromy");
        s = {v[0], v[1], v[2], v[3], {}};
    } else {
        s.beta = a.beta;
    }
    return torus_bundle(s);
}

}  // namespace

std::optional<Manifest> catalog_manifest(const CatalogArgs& a)
{
    if (a.family == "lens") {
        if (a.p < 2) throw ValidationError("lens: --p must be at least 2");
        LensSpace L = lens_space(a.p, a.q);
        Manifest m = manifest_of(L.pres, L.identity, nullptr, nullptr, a.op.empty() ? "torsion" : a.op);
        m.field = parse_field(a.field.empty() ? "F_" + std::to_string(a.p) : a.field);
        return m;
    }
    if (a.family == "t3") {
        NamedPresentation t = t3();
        Manifest m = manifest_of(t.pres, t.identity, nullptr, nullptr, a.op.empty() ? "torsion" : a.op);
        if (!a.field.empty()) m.field = parse_field(a.field);
        return m;
    }
    if (a.family == "trefoil") {
        Manifest m;
        m.pres = trefoil();
        m.field = Field::rationals();
        m.operation = a.op.empty() ? "alexander" : a.op;
        if (m.operation != "alexander") throw ValidationError("trefoil: only --op alexander is available");
        m.meridians = {{1}, {1}};
        return m;
    }
    if (a.family == "seifert") {
        Seifert s = seifert_of(a);
        SL2SpectraSpec sp;
        if (a.alpha.empty() && a.beta_root.empty() && a.gamma.empty()) {
            auto all = s.spectra(a.case_sign);
            if (all.empty()) throw PreconditionError("seifert: no spectra for this case");
            sp = all.front();
        } else {
            if (a.alpha.empty() || a.beta_root.empty() || a.gamma.empty())
                throw ValidationError("seifert: give all of --alpha, --beta-root, --gamma");
            sp = {parse_root(a.alpha, "--alpha"), parse_root(a.beta_root, "--beta-root"), parse_root(a.gamma, "--gamma")};
        }
        SU2Pair P = s.su2(sp);
        Manifest m = manifest_of(s.pres, s.identity, &P.rho, &P.psi, a.op.empty() ? "dual-refined" : a.op);
        m.sigma = s.sigma;
        return m;
    }
    if (a.family == "torus-bundle") {
        TorusBundle tb = torus_of(a);
        std::string op = a.op.empty() ? "dual-refined" : a.op;
        if (op == "volume") return std::nullopt;
        Representation ad = tb.adjoint({parse_root(a.u, "--u"), parse_root(a.v, "--v")});
        BilinearForm psi = BilinearForm::standard(ad.field(), 3);
        Manifest m = manifest_of(tb.pres, tb.identity, &ad, &psi, op);
        // the Sigma refinement uses the fiber; admissibility is tested against Sigma_{alpha+}
        m.sigma = op == "sigma" ? tb.fiber : tb.sigma_plus;
        return m;
    }
    throw ValidationError("unknown family '" + a.family + "' (lens, seifert, torus-bundle, t3, trefoil)");
}

json torus_volume_report(const CatalogArgs& a)
{
    TorusBundle tb = torus_of(a);
    VolumeFamily fam = tb.volume_family();
    json j;
    j["operation"] = "volume";
    j["family"] = fam.name;
    json comps = json::array();
    for (const auto& c : fam.components)
        comps.push_back({{"label", c.label},
                         {"length", std::stod(format_number(c.length))},
                         {"tau", c.form.tau.str()},
                         {"coefficient", {std::stod(format_number(c.form.coefficient.real())),
                                          std::stod(format_number(c.form.coefficient.imag()))}}});
    j["components"] = comps;
    j["volume"] = std::stod(format_number(volume(fam)));
    j["precision"] = numeric_precision();
    return j;
}


Table sweep_table(const SweepArgs& a)
{
    Table t;
    if (a.grid < 1) throw ValidationError("sweep: --grid must be positive");
    if (a.family == "torus-bundle") {
        TorusBundle tb = torus_bundle({-1, a.beta, 0, -1, {}});
        t.columns = {"u", "v", "dims", "torsion", "class", "volume_form", "status"};
        auto pts = tb.solve(a.grid);
        for (const TorusPoint& pt : pts) {
            std::vector<std::string> row = {pt.u.str(), pt.v.str()};
            try {
                Representation ad = tb.adjoint(pt);
                BilinearForm psi = BilinearForm::standard(ad.field(), 3);
                TorsionReport r = dual_refined_torsion(tb.pres, tb.identity, ad, psi);
                std::string dims;
                for (int d : r.dims) dims += std::to_string(d);
                row.insert(row.end(), {dims, r.raw.str(), r.cls.canonical.str()});
                VolumeFormValue v = volume_form(tb.pres, tb.identity, ad, psi);
                row.push_back(format_number(v.coefficient.real()) + (v.coefficient.imag() < 0 ? " - " : " + ") +
                              format_number(std::abs(v.coefficient.imag())) + "i");
                row.push_back("ok");
            } catch (const PreconditionError& e) {
                row.resize(6);
                row.push_back(std::string("precondition: ") + e.what());
            }
            t.rows.push_back(row);
        }
        if (!pts.empty()) t.rows.push_back({"volume", "", "", "", "", format_number(volume(tb.volume_family())), "integrated"});
        return t;
    }
    if (a.family == "seifert") {
        CatalogArgs c;
        c.abk = a.abk;
        c.lmn = a.lmn;
        Seifert s = seifert_of(c);
        t.columns = {"alpha", "beta", "gamma", "completion", "dims", "torsion", "class", "status"};
        for (const SL2SpectraSpec& sp : s.spectra(a.case_sign)) {
            std::vector<std::string> row = {sp.alpha.str(), sp.beta.str(), sp.gamma.str()};
            try {
                SU2Pair P = s.su2(sp);
                row.push_back(P.completion);
                TorsionReport r = dual_refined_torsion(s.pres, s.identity, P.rho, P.psi);
                std::string dims;
                for (int d : r.dims) dims += std::to_string(d);
                row.insert(row.end(), {dims, r.raw.str(), r.cls.canonical.str(), "ok"});
            } catch (const PreconditionError& e) {
                row.resize(7);
                row.push_back(std::string("precondition: ") + e.what());
            }
            t.rows.push_back(row);
        }
        return t;
    }
    throw ValidationError("sweep: unsupported family '" + a.family + "' (torus-bundle, seifert)");
}

}  // namespace ntor
