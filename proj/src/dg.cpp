#include "gencliff/dg.hpp"

#include <algorithm>

#include "gencliff/linalg.hpp"

namespace gencliff {

namespace {

NcPoly leibniz(const CtxPtr& ctx, const std::vector<DgGenerator>& gens, const std::vector<NcPoly>& diffs,
               const NcPoly& p)
{
    NcPoly out(ctx);
    Scalar minus_one = -Scalar::one(ctx->ring);
    for (const auto& [mon, c] : p.terms()) {
        Scalar sign = Scalar::one(ctx->ring);
        for (size_t i = 0; i < mon.aword.size(); ++i) {
            uint32_t letter = mon.aword[i];
            const NcPoly& dl = diffs[letter];
            if (!dl.is_zero()) {
                NcPoly left(ctx);
                left.add_term(MixedMonomial{Letters(mon.aword.begin(), mon.aword.begin() + long(i)), {}}, c * sign);
                NcPoly right(ctx);
                right.add_term(MixedMonomial{Letters(mon.aword.begin() + long(i) + 1, mon.aword.end()), {}},
                               Scalar::one(ctx->ring));
                out += left * dl * right;
            }
            if (gens[letter].hdeg % 2 != 0)
                sign *= minus_one;
        }
    }
    return out;
}

}  // namespace

DgAlgebra::DgAlgebra(const RingHandle& ring, std::vector<DgGenerator> generators, std::vector<NcPoly> diffs)
    : ring_(ring), gens_(std::move(generators))
{
    if (!ring.is_field())
        fail(Errc::NotAField, "dg algebras require field coefficients");
    std::vector<std::string> names;
    for (const auto& g : gens_) {
        if (g.hdeg < 0)
            fail(Errc::DegreeMismatch, "generator '" + g.name + "' has negative homological degree");
        if (g.weight < 1)
            fail(Errc::WeightMismatch, "generator '" + g.name + "' must have weight >= 1");
        names.push_back(g.name);
    }
    ctx_ = make_algebra_context(ring, Alphabet(std::move(names)));
    if (diffs.size() != gens_.size())
        fail(Errc::InvalidInput, "need one differential per generator");
    diffs_.reserve(diffs.size());
    for (auto& d : diffs)
        diffs_.push_back(d.in_context(ctx_));

    for (size_t i = 0; i < gens_.size(); ++i) {
        const NcPoly& d = diffs_[i];
        if (d.is_zero())
            continue;
        for (const auto& [mon, c] : d.terms()) {
            if (word_hdeg(mon.aword) != gens_[i].hdeg - 1)
                fail(Errc::DegreeMismatch, "d(" + gens_[i].name + ") must lower the homological degree by one");
            if (word_weight(mon.aword) != gens_[i].weight)
                fail(Errc::WeightMismatch, "d(" + gens_[i].name + ") must preserve the weight");
        }
        if (!leibniz(ctx_, gens_, diffs_, d).is_zero())
            fail(Errc::SquareNotZero, "d^2 is nonzero on generator '" + gens_[i].name + "'");
    }
}

int DgAlgebra::word_hdeg(const Letters& w) const
{
    int h = 0;
    for (uint32_t l : w)
        h += gens_[l].hdeg;
    return h;
}

int DgAlgebra::word_weight(const Letters& w) const
{
    int wt = 0;
    for (uint32_t l : w)
        wt += gens_[l].weight;
    return wt;
}

int DgAlgebra::poly_hdeg(const NcPoly& p) const
{
    int h = 0;
    bool first = true;
    for (const auto& [mon, c] : p.terms()) {
        int mh = word_hdeg(mon.aword);
        if (first) {
            h = mh;
            first = false;
        }
        else if (mh != h)
            fail(Errc::NotHomogeneous, "polynomial mixes homological degrees");
    }
    return h;
}

DgAlgebra dg_free(const RingHandle& ring, std::vector<DgGenerator> generators, std::vector<NcPoly> diffs)
{
    return DgAlgebra(ring, std::move(generators), std::move(diffs));
}

NcPoly dg_differential(const DgAlgebra& alg, const NcPoly& p)
{
    NcPoly q = p.in_context(alg.context());
    alg.poly_hdeg(q);  // NotHomogeneous on mixed input
    std::vector<NcPoly> diffs;
    for (uint32_t i = 0; i < alg.generators().size(); ++i)
        diffs.push_back(alg.diff_of(i));
    return leibniz(alg.context(), alg.generators(), diffs, q);
}

std::vector<Letters> bigraded_basis(const DgAlgebra& alg, int h, int w)
{
    std::vector<Letters> out;
    std::vector<Letters> layer{Letters{}};
    if (h == 0 && w == 0)
        out.push_back(Letters{});
    // every generator has weight >= 1, so words at weight w have length <= w
    for (int len = 1; len <= w; ++len) {
        std::vector<Letters> next;
        for (const auto& word : layer)
            for (uint32_t l = 0; l < alg.generators().size(); ++l) {
                Letters ext = word;
                ext.push_back(l);
                if (alg.word_weight(ext) > w)
                    continue;
                next.push_back(std::move(ext));
            }
        for (const auto& word : next)
            if (alg.word_weight(word) == w && alg.word_hdeg(word) == h)
                out.push_back(word);
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Letters& a, const Letters& b) { return cmp_words(a, b) < 0; });
    return out;
}

long long homology_rank(const DgAlgebra& alg, int h, int w)
{
    if (h < 0 || w < 0)
        fail(Errc::InvalidInput, "bigrading must be nonnegative");
    auto basis = bigraded_basis(alg, h, w);
    if (basis.empty())
        return 0;
    auto below = bigraded_basis(alg, h - 1, w);
    auto above = bigraded_basis(alg, h + 1, w);

    std::map<Letters, uint32_t> index_here, index_below;
    for (uint32_t i = 0; i < basis.size(); ++i)
        index_here.emplace(basis[i], i);
    for (uint32_t i = 0; i < below.size(); ++i)
        index_below.emplace(below[i], i);

    auto row_of = [&alg](const Letters& word, const std::map<Letters, uint32_t>& index) {
        NcPoly image = dg_differential(alg, NcPoly::monomial(alg.context(), MixedMonomial{word, {}},
                                                             Scalar::one(alg.ring())));
        SparseRow row;
        for (const auto& [mon, c] : image.terms())
            row.emplace(index.at(mon.aword), c);
        return row;
    };

    RowSpan d_here(alg.ring());
    for (const auto& word : basis)
        d_here.insert(row_of(word, index_below));
    long long kernel = (long long)basis.size() - (long long)d_here.rank();

    RowSpan d_above(alg.ring());
    for (const auto& word : above)
        d_above.insert(row_of(word, index_here));
    return kernel - (long long)d_above.rank();
}

DgAlgebra derived_clifford_zero(int d, const RingHandle& ring)
{
    if (d < 2)
        fail(Errc::InvalidInput, "need degree d >= 2");
    std::vector<DgGenerator> gens{{"x", 0, 1}, {"x1", 1, d}};
    CtxPtr ctx = make_algebra_context(ring, Alphabet({"x", "x1"}));
    NcPoly dx1 = NcPoly::monomial(ctx, MixedMonomial{Letters(size_t(d), 0), {}}, Scalar::one(ring));
    return DgAlgebra(ring, std::move(gens), {NcPoly::zero(ctx), std::move(dx1)});
}

}  // namespace gencliff
