// ntor: batch front-end over manifests and the built-in catalog.
#include "ntor/frontend.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ntor;

namespace {

struct Globals {
    std::string output;
    double precision = 1e-12;
    std::string quotient;
};

std::string read_input(const std::string& path)
{
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot read manifest '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Refined torsion of 3-manifolds from presentations, identities and representations"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--output", g.output, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--precision", g.precision, "tolerance for numeric payloads")->check(CLI::Range(1e-18, 0.5));
    app.add_option("--quotient", g.quotient, "quotient descriptor, e.g. norms+sign");

    std::string manifest_path;
    auto* run = app.add_subcommand("run", "run a JSON manifest ('-' reads stdin)");
    run->add_option("manifest", manifest_path)->required();

    CatalogArgs ca;
    auto* cat = app.add_subcommand("catalog", "compute on a built-in family");
    cat->add_option("family", ca.family, "lens, seifert, torus-bundle, t3, trefoil")->required();
    cat->add_option("--op", ca.op, "torsion, dual-refined, admissible, sigma, pairing, alexander, smith, volume-form, volume");
    cat->add_option("--p", ca.p, "lens: order");
    cat->add_option("--q", ca.q, "lens: twist");
    cat->add_option("--field", ca.field, "coefficient field for trivial coefficients");
    cat->add_option("--abk", ca.abk, "seifert: a,b,k");
    cat->add_option("--lmn", ca.lmn, "seifert: l,m,n");
    cat->add_option("--alpha", ca.alpha, "seifert: eigenvalue k/d");
    cat->add_option("--beta-root", ca.beta_root, "seifert: eigenvalue k/d");
    cat->add_option("--gamma", ca.gamma, "seifert: eigenvalue k/d");
    cat->add_option("--case", ca.case_sign, "seifert: +1 or -1 when choosing spectra")->check(CLI::IsMember({-1, 1}));
    cat->add_option("--beta", ca.beta, "torus bundle: monodromy entry beta");
    cat->add_option("--monodromy", ca.monodromy, "torus bundle: alpha,beta,gamma,delta");
    cat->add_option("--u", ca.u, "torus bundle: u = exp(2 pi i k/d)");
    cat->add_option("--v", ca.v, "torus bundle: v = exp(2 pi i k/d)");
    bool emit = false;
    cat->add_flag("--emit-manifest", emit, "print the equivalent manifest instead of running it");

    SweepArgs sa;
    auto* sw = app.add_subcommand("sweep", "tabulate a family over its variety points");
    sw->add_option("family", sa.family, "torus-bundle or seifert")->required();
    sw->add_option("--beta", sa.beta, "torus bundle: beta");
    sw->add_option("--grid", sa.grid, "torus bundle: roots of unity of this order");
    sw->add_option("--abk", sa.abk, "seifert: a,b,k");
    sw->add_option("--lmn", sa.lmn, "seifert: l,m,n");
    sw->add_option("--case", sa.case_sign, "seifert: +1 or -1")->check(CLI::IsMember({-1, 1}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        set_numeric_precision(g.precision);
        RunOptions opt;
        if (!g.quotient.empty()) opt.quotient = g.quotient;
        std::string out;
        if (run->parsed()) {
            Manifest m = parse_manifest(read_input(manifest_path));
            OutputFormat fmt = parse_output_format(!g.output.empty() ? g.output : m.output.value_or("text"));
            out = render_report(run_manifest(m, opt), fmt);
        } else if (cat->parsed()) {
            OutputFormat fmt = parse_output_format(g.output.empty() ? "text" : g.output);
            std::optional<Manifest> m = catalog_manifest(ca);
            if (emit) {
                if (!m) throw ValidationError("operation '" + ca.op + "' has no manifest form");
                if (!g.quotient.empty()) m->quotient = g.quotient;
                out = m->to_json().dump(2) + "\n";
            } else if (m) {
                out = render_report(run_manifest(*m, opt), fmt);
            } else {
                out = render_report(torus_volume_report(ca), fmt);
            }
        } else {
            out = render_table(sweep_table(sa), parse_output_format(g.output.empty() ? "csv" : g.output));
        }
        std::cout << out;
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
