#include "gencliff/clifford.hpp"

#include <algorithm>

namespace gencliff {

namespace {

void canonicalize_relations(std::vector<NcPoly>& rels)
{
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const NcPoly& p) { return p.is_zero(); }), rels.end());
    std::sort(rels.begin(), rels.end(), [](const NcPoly& a, const NcPoly& b) { return cmp_polys(a, b) < 0; });
    rels.erase(std::unique(rels.begin(), rels.end(), [](const NcPoly& a, const NcPoly& b) { return a == b; }),
               rels.end());
}

/// Generic point sum_J a_J x^J over the degree-m multidegrees J.
NcPoly generic_point(const CtxPtr& ctx, int n, int m)
{
    NcPoly s(ctx);
    auto basis = gamma_basis(n, m);
    for (uint32_t i = 0; i < basis.size(); ++i)
        s.add_term(MixedMonomial{{i}, exponents_to_word(basis[i])}, Scalar::one(ctx->ring));
    return s;
}

/// The mixed polynomial whose x-part coefficients generate the ideal.
NcPoly kl_polynomial(const CliffordInput& input, const CtxPtr& ctx)
{
    NcPoly s = generic_point(ctx, input.n(), input.m);
    NcPoly p = s.pow(uint32_t(input.d));
    for (int l = 1; l <= input.d; ++l) {
        const NcPoly& f = input.forms[size_t(l) - 1];
        if (f.is_zero())
            continue;
        p -= s.pow(uint32_t(input.d - l)) * f.in_context(ctx);
    }
    return p;
}

}  // namespace

std::vector<std::string> clifford_generator_names(int n, int m)
{
    auto basis = gamma_basis(n, m);
    std::vector<std::string> names;
    names.reserve(basis.size());
    if (basis.size() <= 26) {
        for (size_t i = 0; i < basis.size(); ++i)
            names.push_back(std::string(1, char('a' + i)));
        return names;
    }
    for (const auto& nu : basis) {
        std::string name = "a";
        for (uint32_t e : nu)
            name += "_" + std::to_string(e);
        names.push_back(std::move(name));
    }
    return names;
}

CliffordInput make_clifford_input(const RingHandle& ring, Alphabet xvars, int m, int d, XMode mode,
                                  const std::vector<std::string>& form_texts)
{
    CliffordInput input;
    input.ring = ring;
    input.xvars = std::move(xvars);
    input.m = m;
    input.d = d;
    input.mode = mode;
    if (int(form_texts.size()) != d)
        fail(Errc::InvalidInput, "expected " + std::to_string(d) + " forms");
    CtxPtr fctx = make_context(ring, XMode::Commuting, Alphabet{}, input.xvars);
    for (int l = 1; l <= d; ++l) {
        const std::string& text = form_texts[size_t(l) - 1];
        input.forms.push_back(text.empty() ? NcPoly::zero(fctx) : parse_poly(text, fctx));
    }
    validate_input(input);
    return input;
}

void validate_input(const CliffordInput& input)
{
    if (input.n() < 1 || input.m < 1 || input.d < 1)
        fail(Errc::InvalidInput, "need n, m, d >= 1");
    if (int(input.forms.size()) != input.d)
        fail(Errc::InvalidInput, "expected " + std::to_string(input.d) + " forms");
    for (int l = 1; l <= input.d; ++l) {
        const NcPoly& f = input.forms[size_t(l) - 1];
        if (f.context()->mode != XMode::Commuting || f.context()->agens.size() != 0 ||
            !(f.context()->xvars == input.xvars))
            fail(Errc::ContextMismatch, "forms must be commutative polynomials in the x-variables");
        for (const auto& [mon, c] : f.terms())
            if (mon.degree() != l * input.m)
                fail(Errc::NotHomogeneous, "f[" + std::to_string(l) + "] must be homogeneous of degree " +
                                               std::to_string(l * input.m));
    }
    // keep the word space enumerable
    double count = 1;
    for (int i = 1; i <= input.m; ++i)
        count *= double(input.n() + i - 1) / double(i);
    if (count > 10000)
        fail(Errc::TooLarge, "generator count exceeds the supported size");
}

CtxPtr Presentation::relation_context() const
{
    return make_algebra_context(ring, generators);
}

Presentation kl_presentation(const CliffordInput& input)
{
    validate_input(input);
    Presentation out;
    out.ring = input.ring;
    out.generators = Alphabet(clifford_generator_names(input.n(), input.m));
    out.provenance = "kl";
    CtxPtr ctx = make_context(input.ring, input.mode, out.generators, input.xvars);
    CtxPtr rctx = out.relation_context();
    for (auto& [xp, value] : kl_polynomial(input, ctx).extract_coefficients())
        out.relations.push_back(value.in_context(rctx));
    canonicalize_relations(out.relations);
    return out;
}

HomLaw clifford_delta_law(const CliffordInput& input)
{
    validate_input(input);
    Alphabet gens(clifford_generator_names(input.n(), input.m));
    // the degree-m law z -> z^[m] realized on the generator symbols
    HomLaw base = HomLaw::algebra_law(input.ring, input.n(), input.m, gens);
    auto basis_m = gamma_basis(input.n(), input.m);
    CtxPtr actx = make_algebra_context(input.ring, gens);
    for (uint32_t i = 0; i < basis_m.size(); ++i)
        base.set_entry(basis_m[i], NcPoly::generator(actx, i));

    HomLaw delta = law_power(base, input.d);
    for (int l = 1; l <= input.d; ++l) {
        const NcPoly& f = input.forms[size_t(l) - 1];
        if (f.is_zero())
            continue;
        HomLaw fl = law_to_algebra(law_from_commutative_poly(-f, l * input.m), gens);
        delta = delta + (l < input.d ? law_product(law_power(base, input.d - l), fl) : fl);
    }
    return delta;
}

Presentation psi_presentation(const CliffordInput& input)
{
    HomLaw delta = clifford_delta_law(input);
    Presentation out;
    out.ring = input.ring;
    out.generators = delta.target_alphabet();
    out.provenance = "psi";
    CtxPtr rctx = out.relation_context();
    for (const auto& mu : gamma_basis(input.n(), input.m * input.d)) {
        NcPoly rel = delta.entry(mu);
        if (!rel.is_zero())
            out.relations.push_back(rel.in_context(rctx));
    }
    canonicalize_relations(out.relations);
    return out;
}

GramForm gram_from_quadratic(const NcPoly& q)
{
    const CtxPtr& ctx = q.context();
    if (ctx->mode != XMode::Commuting || ctx->agens.size() != 0)
        fail(Errc::ContextMismatch, "quadratic form must be a commutative polynomial");
    int n = int(ctx->xvars.size());
    GramForm g;
    g.ring = ctx->ring;
    g.diagonal.assign(size_t(n), Scalar::zero(ctx->ring));
    g.polar.assign(size_t(n), {});
    for (int i = 0; i < n; ++i)
        g.polar[size_t(i)].assign(size_t(n - 1 - i), Scalar::zero(ctx->ring));
    for (const auto& [mon, c] : q.terms()) {
        if (mon.xpart.size() != 2)
            fail(Errc::NotHomogeneous, "quadratic form must be homogeneous of degree 2");
        uint32_t i = mon.xpart[0], j = mon.xpart[1];
        if (i == j)
            g.diagonal[i] = c;
        else
            g.polar[i][j - i - 1] = c;
    }
    return g;
}

Presentation quadratic_presentation(const GramForm& q)
{
    int n = q.n();
    if (n < 1)
        fail(Errc::InvalidInput, "need at least one basis vector");
    std::vector<std::string> var_names;
    for (int i = 0; i < n; ++i)
        var_names.push_back("x" + std::to_string(i + 1));
    Alphabet xvars(std::move(var_names));
    CtxPtr fctx = make_context(q.ring, XMode::Commuting, Alphabet{}, xvars);
    NcPoly form(fctx);
    for (int i = 0; i < n; ++i) {
        form.add_term(MixedMonomial{{}, {uint32_t(i), uint32_t(i)}}, q.diagonal[size_t(i)]);
        for (int j = i + 1; j < n; ++j)
            form.add_term(MixedMonomial{{}, {uint32_t(i), uint32_t(j)}}, q.polar[size_t(i)][size_t(j - i - 1)]);
    }
    CliffordInput input;
    input.ring = q.ring;
    input.xvars = xvars;
    input.m = 1;
    input.d = 2;
    input.mode = XMode::Ordered;
    input.forms = {NcPoly::zero(fctx), form};
    Presentation out = psi_presentation(input);
    out.provenance = "quadratic";
    return out;
}

Presentation weyl_presentation(const std::vector<std::vector<Scalar>>& psi, const RingHandle& ring)
{
    int n = int(psi.size());
    if (n < 1)
        fail(Errc::InvalidInput, "need at least one basis vector");
    for (const auto& row : psi)
        if (int(row.size()) != n)
            fail(Errc::InvalidInput, "form matrix must be square");
    for (int i = 0; i < n; ++i)
        if (!psi[size_t(i)][size_t(i)].is_zero())
            fail(Errc::InconsistentForm, "psi(e_" + std::to_string(i + 1) + ", e_" + std::to_string(i + 1) +
                                             ") is nonzero: the relations would contain a nonzero constant");
    Presentation out;
    out.ring = ring;
    out.generators = Alphabet(clifford_generator_names(n, 1));
    out.provenance = "weyl";
    CtxPtr ctx = out.relation_context();
    for (uint32_t i = 0; i < uint32_t(n); ++i)
        for (uint32_t j = i + 1; j < uint32_t(n); ++j) {
            NcPoly rel(ctx);
            rel.add_term(MixedMonomial{{i, j}, {}}, Scalar::one(ring));
            rel.add_term(MixedMonomial{{j, i}, {}}, -Scalar::one(ring));
            rel.add_term(MixedMonomial{}, -psi[i][j]);
            out.relations.push_back(std::move(rel));
        }
    canonicalize_relations(out.relations);
    return out;
}

std::string ComparisonReport::tag_str() const
{
    switch (tag) {
        case ComparisonTag::IsomorphicUpToBound: return "isomorphic-up-to-bound";
        case ComparisonTag::ProperInclusion: return "proper-inclusion";
        case ComparisonTag::Incomparable: return "incomparable";
    }
    return "?";
}

ComparisonReport comparison_check(const CliffordInput& input, int bound)
{
    Presentation kl = kl_presentation(input);
    Presentation psi = psi_presentation(input);
    GBState gb_kl = buchberger_bounded(kl.relations, bound);
    GBState gb_psi = buchberger_bounded(psi.relations, bound);

    ComparisonReport report;
    report.psi_inside_kl = true;
    report.kl_inside_psi = true;
    for (const auto& rel : psi.relations) {
        MembershipVerdict v = is_member(rel, gb_kl);
        report.psi_in_kl.push_back({format_poly(rel), v});
        report.psi_inside_kl = report.psi_inside_kl && v.is_member();
    }
    for (const auto& rel : kl.relations) {
        MembershipVerdict v = is_member(rel, gb_psi);
        report.kl_in_psi.push_back({format_poly(rel), v});
        report.kl_inside_psi = report.kl_inside_psi && v.is_member();
    }
    if (report.psi_inside_kl && report.kl_inside_psi)
        report.tag = ComparisonTag::IsomorphicUpToBound;
    else if (report.psi_inside_kl || report.kl_inside_psi)
        report.tag = ComparisonTag::ProperInclusion;
    else
        report.tag = ComparisonTag::Incomparable;
    return report;
}

NcPoly hypersurface_equation(const CliffordInput& input)
{
    validate_input(input);
    if (input.xvars.index_of("x0") >= 0)
        fail(Errc::InvalidInput, "variable name x0 is reserved for the extra coordinate");
    std::vector<std::string> names{"x0"};
    names.insert(names.end(), input.xvars.names.begin(), input.xvars.names.end());
    CtxPtr ctx = make_context(input.ring, XMode::Commuting, Alphabet{}, Alphabet(std::move(names)));

    auto x0_power = [&ctx](int k) {
        return NcPoly::monomial(ctx, MixedMonomial{{}, Letters(size_t(k), 0)}, Scalar::one(ctx->ring));
    };
    NcPoly eq = x0_power(input.d);
    for (int l = 1; l <= input.d; ++l) {
        const NcPoly& f = input.forms[size_t(l) - 1];
        if (f.is_zero())
            continue;
        NcPoly shifted(ctx);
        for (const auto& [mon, c] : f.terms()) {
            Letters xp;
            xp.reserve(mon.xpart.size());
            for (uint32_t v : mon.xpart)
                xp.push_back(v + 1);
            shifted.add_term(MixedMonomial{{}, xp}, c);
        }
        eq -= x0_power(input.d - l) * shifted;
    }
    return eq;
}

}  // namespace gencliff
