#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gencliff/dg.hpp"
#include "gencliff/io.hpp"

namespace {

using namespace gencliff;

struct CommonOpts {
    std::string input;
    std::string mode;
    std::string out;
    std::string construction = "psi";
    std::string poly;
    int bound = 6;
    int d = 2;
    std::string ring_spec = "QQ";
    int hmax = 2;
    int wmax = 6;
};

std::optional<XMode> mode_override(const CommonOpts& o)
{
    if (o.mode.empty())
        return std::nullopt;
    if (o.mode == "ordered")
        return XMode::Ordered;
    if (o.mode == "commuting")
        return XMode::Commuting;
    fail(Errc::ParseError, "mode must be ordered or commuting");
}

Presentation build_presentation(const CommonOpts& o)
{
    InputFile file = read_input_file(o.input);
    if (o.construction == "kl")
        return kl_presentation(to_clifford_input(file, mode_override(o)));
    if (o.construction == "psi")
        return psi_presentation(to_clifford_input(file, mode_override(o)));
    if (o.construction == "quadratic") {
        CliffordInput input = to_clifford_input(file, mode_override(o));
        if (input.d != 2 || input.m != 1)
            fail(Errc::InvalidInput, "quadratic construction needs m = 1, d = 2");
        if (!input.forms[0].is_zero())
            fail(Errc::InvalidInput, "quadratic construction needs f[1] = 0");
        return quadratic_presentation(gram_from_quadratic(input.forms[1]));
    }
    if (o.construction == "weyl") {
        if (!file.forms.empty())
            fail(Errc::InvalidInput, "weyl construction takes psi[i][j] entries, not forms");
        return weyl_presentation(to_bilinear_matrix(file), file.ring);
    }
    fail(Errc::ParseError, "construction must be one of kl, psi, quadratic, weyl");
}

void emit(const CommonOpts& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out);
    if (!out)
        fail(Errc::InvalidInput, "cannot write '" + o.out + "'");
    out << text;
}

GBState completed_system(const Presentation& p, int bound)
{
    GBState gb = buchberger_bounded(p.relations, bound);
    if (gb.lifted_from_integers())
        std::cerr << "warning: integer relations lifted to QQ for completion\n";
    return gb;
}

int run(int argc, char** argv)
{
    CLI::App app{"Generalized Clifford algebra presentations, rewriting and homology"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_input = [&o](CLI::App* cmd, bool with_mode = true) {
        cmd->add_option("--input,-i", o.input, "input file")->required();
        if (with_mode)
            cmd->add_option("--mode", o.mode, "override the x-mode: ordered|commuting");
    };
    auto add_construction = [&o](CLI::App* cmd) {
        cmd->add_option("--construction", o.construction, "presentation to use: kl|psi|quadratic|weyl");
        cmd->add_option("--bound", o.bound, "completion degree bound");
    };

    CLI::App* kl = app.add_subcommand("kl", "coefficient-extraction presentation");
    add_input(kl);
    kl->add_option("--out", o.out, "write the presentation to a file");

    CLI::App* psi = app.add_subcommand("psi", "divided-power presentation");
    add_input(psi);
    psi->add_option("--out", o.out, "write the presentation to a file");

    CLI::App* quad = app.add_subcommand("quadratic", "quadratic-form presentation");
    add_input(quad);
    quad->add_option("--out", o.out, "write the presentation to a file");

    CLI::App* weyl = app.add_subcommand("weyl", "bilinear-form presentation");
    add_input(weyl, false);
    weyl->add_option("--out", o.out, "write the presentation to a file");

    CLI::App* compare = app.add_subcommand("compare", "mutual membership of the kl and psi ideals");
    add_input(compare);
    compare->add_option("--bound", o.bound, "completion degree bound");

    CLI::App* hyper = app.add_subcommand("hypersurface", "weighted hypersurface equation");
    add_input(hyper, false);

    CLI::App* gb = app.add_subcommand("gb", "completed rewriting system");
    add_input(gb);
    add_construction(gb);

    CLI::App* nf = app.add_subcommand("nf", "normal form of a polynomial");
    add_input(nf);
    add_construction(nf);
    nf->add_option("--poly", o.poly, "polynomial in the presentation generators")->required();

    CLI::App* member = app.add_subcommand("member", "ideal membership verdict");
    add_input(member);
    add_construction(member);
    member->add_option("--poly", o.poly, "polynomial in the presentation generators")->required();

    CLI::App* dim = app.add_subcommand("dim", "quotient dimension counts");
    add_input(dim);
    add_construction(dim);

    CLI::App* homology = app.add_subcommand("homology", "bigraded homology table of the derived algebra");
    homology->add_option("--d", o.d, "form degree (>= 2)")->required();
    homology->add_option("--ring", o.ring_spec, "coefficient field (default QQ)");
    homology->add_option("--hmax", o.hmax, "largest homological degree")->required();
    homology->add_option("--wmax", o.wmax, "largest weight")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (kl->parsed() || psi->parsed() || quad->parsed() || weyl->parsed()) {
        if (kl->parsed())
            o.construction = "kl";
        else if (psi->parsed())
            o.construction = "psi";
        else if (quad->parsed())
            o.construction = "quadratic";
        else
            o.construction = "weyl";
        emit(o, format_presentation(build_presentation(o)));
    }
    else if (compare->parsed()) {
        InputFile file = read_input_file(o.input);
        ComparisonReport report = comparison_check(to_clifford_input(file, mode_override(o)), o.bound);
        std::cout << format_comparison(report);
    }
    else if (hyper->parsed()) {
        InputFile file = read_input_file(o.input);
        std::cout << format_poly(hypersurface_equation(to_clifford_input(file))) << "\n";
    }
    else if (gb->parsed()) {
        std::cout << export_gb(completed_system(build_presentation(o), o.bound));
    }
    else if (nf->parsed()) {
        Presentation p = build_presentation(o);
        GBState system = completed_system(p, o.bound);
        NcPoly q = parse_poly(o.poly, p.relation_context());
        std::cout << format_poly(normal_form(q, system)) << "\n";
    }
    else if (member->parsed()) {
        Presentation p = build_presentation(o);
        GBState system = completed_system(p, o.bound);
        NcPoly q = parse_poly(o.poly, p.relation_context());
        std::cout << is_member(q, system).str() << "\n";
    }
    else if (dim->parsed()) {
        Presentation p = build_presentation(o);
        GBState system = completed_system(p, o.bound);
        std::cout << format_dimensions(quotient_dimension(system, o.bound));
    }
    else if (homology->parsed()) {
        DgAlgebra alg = derived_clifford_zero(o.d, make_ring(o.ring_spec));
        for (int h = 0; h <= o.hmax; ++h)
            for (int w = 0; w <= o.wmax; ++w)
                std::cout << h << " " << w << " " << homology_rank(alg, h, w) << "\n";
    }
    return 0;
}

int exit_class(Errc code)
{
    switch (code) {
        case Errc::ParseError:
        case Errc::MalformedRingSpec:
        case Errc::NotPrime:
        case Errc::UnknownGenerator:
            return 2;
        default:
            return 1;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    }
    catch (const gencliff::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_class(e.code());
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
