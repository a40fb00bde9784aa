#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gencliff/dg.hpp"
#include "gencliff/io.hpp"

namespace py = pybind11;
using namespace gencliff;

namespace {

XMode mode_of(const std::string& mode)
{
    if (mode == "ordered")
        return XMode::Ordered;
    if (mode == "commuting")
        return XMode::Commuting;
    fail(Errc::ParseError, "mode must be 'ordered' or 'commuting'");
}

CliffordInput input_of(const std::string& ring, const std::vector<std::string>& vars, int m, int d,
                       const std::map<int, std::string>& forms, const std::string& mode)
{
    std::vector<std::string> texts(static_cast<size_t>(d));
    for (const auto& [l, text] : forms) {
        if (l < 1 || l > d)
            fail(Errc::InvalidInput, "form index out of range");
        texts[size_t(l) - 1] = text;
    }
    return make_clifford_input(make_ring(ring), Alphabet(vars), m, d, mode_of(mode), texts);
}

std::vector<std::string> relation_strings(const Presentation& p)
{
    std::vector<std::string> out;
    out.reserve(p.relations.size());
    for (const auto& rel : p.relations)
        out.push_back(format_poly(rel));
    return out;
}

GBState system_of(const Presentation& p, int bound)
{
    return buchberger_bounded(p.relations, bound);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Generalized Clifford algebra presentations, bounded noncommutative rewriting, dg homology";

    py::register_exception<Error>(m, "GencliffError");

    py::class_<Presentation>(m, "Presentation")
        .def_property_readonly("ring", [](const Presentation& p) { return p.ring.spec(); })
        .def_property_readonly("generators", [](const Presentation& p) { return p.generators.names; })
        .def_property_readonly("relations", &relation_strings)
        .def_property_readonly("provenance", [](const Presentation& p) { return p.provenance; })
        .def("format", &format_presentation)
        .def("__repr__", [](const Presentation& p) {
            return "<Presentation " + p.provenance + " over " + p.ring.spec() + ", " +
                   std::to_string(p.relations.size()) + " relations>";
        });

    m.def(
        "kl_presentation",
        [](const std::string& ring, const std::vector<std::string>& vars, int m_, int d,
           const std::map<int, std::string>& forms, const std::string& mode) {
            return kl_presentation(input_of(ring, vars, m_, d, forms, mode));
        },
        py::arg("ring"), py::arg("vars"), py::arg("m"), py::arg("d"), py::arg("forms"),
        py::arg("mode") = "ordered");

    m.def(
        "psi_presentation",
        [](const std::string& ring, const std::vector<std::string>& vars, int m_, int d,
           const std::map<int, std::string>& forms, const std::string& mode) {
            return psi_presentation(input_of(ring, vars, m_, d, forms, mode));
        },
        py::arg("ring"), py::arg("vars"), py::arg("m"), py::arg("d"), py::arg("forms"),
        py::arg("mode") = "ordered");

    m.def(
        "quadratic_presentation",
        [](const std::string& ring, const std::vector<std::string>& vars, const std::string& form) {
            RingHandle r = make_ring(ring);
            CtxPtr ctx = make_context(r, XMode::Commuting, Alphabet{}, Alphabet(vars));
            return quadratic_presentation(gram_from_quadratic(parse_poly(form, ctx)));
        },
        py::arg("ring"), py::arg("vars"), py::arg("form"));

    m.def(
        "weyl_presentation",
        [](const std::string& ring, const std::vector<std::vector<std::string>>& matrix) {
            RingHandle r = make_ring(ring);
            CtxPtr ctx = make_context(r, XMode::Commuting, Alphabet{}, Alphabet{});
            std::vector<std::vector<Scalar>> psi;
            for (const auto& row : matrix) {
                std::vector<Scalar> out_row;
                for (const auto& entry : row)
                    out_row.push_back(parse_poly(entry, ctx).coeff(MixedMonomial{}));
                psi.push_back(std::move(out_row));
            }
            return weyl_presentation(psi, r);
        },
        py::arg("ring"), py::arg("matrix"));

    m.def(
        "normal_form",
        [](const Presentation& p, const std::string& poly, int bound) {
            GBState gb = system_of(p, bound);
            return format_poly(normal_form(parse_poly(poly, p.relation_context()), gb));
        },
        py::arg("presentation"), py::arg("poly"), py::arg("bound") = 6);

    m.def(
        "member",
        [](const Presentation& p, const std::string& poly, int bound) {
            GBState gb = system_of(p, bound);
            return is_member(parse_poly(poly, p.relation_context()), gb).str();
        },
        py::arg("presentation"), py::arg("poly"), py::arg("bound") = 6);

    m.def(
        "quotient_dimension",
        [](const Presentation& p, int bound) {
            GBState gb = system_of(p, bound);
            DimensionCounts counts = quotient_dimension(gb, bound);
            py::dict out;
            out["per_degree"] = counts.per_degree;
            out["total"] = counts.total();
            out["exact"] = counts.exact;
            return out;
        },
        py::arg("presentation"), py::arg("bound") = 6);

    m.def(
        "groebner_basis",
        [](const Presentation& p, int bound) { return export_gb(system_of(p, bound)); },
        py::arg("presentation"), py::arg("bound") = 6);

    m.def(
        "compare",
        [](const std::string& ring, const std::vector<std::string>& vars, int m_, int d,
           const std::map<int, std::string>& forms, const std::string& mode, int bound) {
            ComparisonReport report = comparison_check(input_of(ring, vars, m_, d, forms, mode), bound);
            py::dict out;
            out["verdict"] = report.tag_str();
            out["psi_inside_kl"] = report.psi_inside_kl;
            out["kl_inside_psi"] = report.kl_inside_psi;
            return out;
        },
        py::arg("ring"), py::arg("vars"), py::arg("m"), py::arg("d"), py::arg("forms"),
        py::arg("mode") = "ordered", py::arg("bound") = 6);

    m.def(
        "hypersurface",
        [](const std::string& ring, const std::vector<std::string>& vars, int m_, int d,
           const std::map<int, std::string>& forms) {
            return format_poly(hypersurface_equation(input_of(ring, vars, m_, d, forms, "ordered")));
        },
        py::arg("ring"), py::arg("vars"), py::arg("m"), py::arg("d"), py::arg("forms"));

    m.def(
        "homology_rank",
        [](int d, const std::string& ring, int h, int w) {
            return homology_rank(derived_clifford_zero(d, make_ring(ring)), h, w);
        },
        py::arg("d"), py::arg("ring"), py::arg("h"), py::arg("w"));

    m.def(
        "homology_table",
        [](int d, const std::string& ring, int hmax, int wmax) {
            DgAlgebra alg = derived_clifford_zero(d, make_ring(ring));
            std::vector<std::tuple<int, int, long long>> out;
            for (int h = 0; h <= hmax; ++h)
                for (int w = 0; w <= wmax; ++w)
                    out.emplace_back(h, w, homology_rank(alg, h, w));
            return out;
        },
        py::arg("d"), py::arg("ring"), py::arg("hmax"), py::arg("wmax"));

    m.def(
        "canonical_form",
        [](const std::string& poly, const std::vector<std::string>& gens, const std::vector<std::string>& vars,
           const std::string& ring, const std::string& mode) {
            CtxPtr ctx = make_context(make_ring(ring), mode_of(mode), Alphabet(gens), Alphabet(vars));
            return format_poly(parse_poly(poly, ctx));
        },
        py::arg("poly"), py::arg("gens"), py::arg("vars"), py::arg("ring"), py::arg("mode") = "ordered");
}
