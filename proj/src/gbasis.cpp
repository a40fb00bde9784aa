#include "gencliff/gbasis.hpp"

#include <algorithm>
#include <set>

#include "gencliff/linalg.hpp"

namespace gencliff {

namespace {

/// Leftmost position of `lead` as a contiguous factor of `word`, or -1.
int find_factor(const Letters& word, const Letters& lead)
{
    if (lead.size() > word.size())
        return -1;
    for (size_t pos = 0; pos + lead.size() <= word.size(); ++pos) {
        bool hit = true;
        for (size_t i = 0; i < lead.size(); ++i)
            if (word[pos + i] != lead[i]) {
                hit = false;
                break;
            }
        if (hit)
            return int(pos);
    }
    return -1;
}

NcPoly monic(const NcPoly& p)
{
    return p.scaled(p.leading_coefficient().inv());
}

NcPoly word_poly(const CtxPtr& ctx, const Letters& w)
{
    return NcPoly::monomial(ctx, MixedMonomial{w, {}}, Scalar::one(ctx->ring));
}

/// Deterministic full reduction of p against the (monic) polynomials in G:
/// rewrite the deglex-largest reducible term, choosing the largest
/// applicable leading word, at its leftmost occurrence.
NcPoly reduce_full(NcPoly p, const std::vector<NcPoly>& G, const std::vector<Letters>& leads,
                   ReductionInfo* info = nullptr)
{
    if (info)
        info->max_degree = std::max(info->max_degree, p.degree());
    bool progress = true;
    while (progress && !p.is_zero()) {
        progress = false;
        for (const auto& [mon, c] : p.sorted_terms()) {
            int best = -1, best_pos = -1;
            for (size_t i = 0; i < G.size(); ++i) {
                int pos = find_factor(mon.aword, leads[i]);
                if (pos < 0)
                    continue;
                if (best < 0 || cmp_words(leads[i], leads[size_t(best)]) > 0) {
                    best = int(i);
                    best_pos = pos;
                }
                else if (cmp_words(leads[i], leads[size_t(best)]) == 0 && pos < best_pos) {
                    best = int(i);
                    best_pos = pos;
                }
            }
            if (best < 0)
                continue;
            const Letters& lw = leads[size_t(best)];
            Letters u(mon.aword.begin(), mon.aword.begin() + best_pos);
            Letters v(mon.aword.begin() + best_pos + int(lw.size()), mon.aword.end());
            const CtxPtr& ctx = p.context();
            NcPoly replaced = word_poly(ctx, u) * G[size_t(best)] * word_poly(ctx, v);
            p -= replaced.scaled(c);
            if (info) {
                info->steps += 1;
                info->max_degree = std::max(info->max_degree, mon.degree());
            }
            progress = true;
            break;
        }
    }
    return p;
}

struct Ambiguity {
    Letters word;  // lw(g1) glued with lw(g2) over an overlap of length k
    size_t i, j;
    size_t k;

    bool operator<(const Ambiguity& o) const
    {
        if (int c = cmp_words(word, o.word))
            return c < 0;
        if (i != o.i)
            return i < o.i;
        if (j != o.j)
            return j < o.j;
        return k < o.k;
    }
};

std::vector<Ambiguity> enumerate_ambiguities(const std::vector<Letters>& leads)
{
    std::vector<Ambiguity> out;
    for (size_t i = 0; i < leads.size(); ++i) {
        for (size_t j = 0; j < leads.size(); ++j) {
            const Letters& a = leads[i];
            const Letters& b = leads[j];
            if (a.empty() || b.empty())
                continue;
            size_t kmax = std::min(a.size(), b.size()) - 1;
            for (size_t k = 1; k <= kmax; ++k) {
                bool match = true;
                for (size_t t = 0; t < k; ++t)
                    if (a[a.size() - k + t] != b[t]) {
                        match = false;
                        break;
                    }
                if (!match)
                    continue;
                Ambiguity amb;
                amb.word = a;
                amb.word.insert(amb.word.end(), b.begin() + long(k), b.end());
                amb.i = i;
                amb.j = j;
                amb.k = k;
                out.push_back(std::move(amb));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void sort_by_lead(std::vector<NcPoly>& G, std::vector<Letters>& leads)
{
    std::vector<size_t> order(G.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (int c = cmp_words(leads[a], leads[b]))
            return c < 0;
        return cmp_polys(G[a], G[b]) < 0;
    });
    std::vector<NcPoly> G2;
    std::vector<Letters> L2;
    for (size_t idx : order) {
        G2.push_back(std::move(G[idx]));
        L2.push_back(std::move(leads[idx]));
    }
    G = std::move(G2);
    leads = std::move(L2);
}

/// Reduce every element against the others until stable; zero elements drop
/// out and leading words stay pairwise factor-free.
void interreduce(std::vector<NcPoly>& G, std::vector<Letters>& leads)
{
    bool stable = false;
    while (!stable) {
        stable = true;
        for (size_t i = 0; i < G.size(); ++i) {
            std::vector<NcPoly> others;
            std::vector<Letters> other_leads;
            for (size_t j = 0; j < G.size(); ++j)
                if (j != i) {
                    others.push_back(G[j]);
                    other_leads.push_back(leads[j]);
                }
            NcPoly h = reduce_full(G[i], others, other_leads);
            if (h == G[i])
                continue;
            stable = false;
            if (h.is_zero()) {
                G.erase(G.begin() + long(i));
                leads.erase(leads.begin() + long(i));
            }
            else {
                G[i] = monic(h);
                leads[i] = G[i].leading_monomial().aword;
            }
            break;
        }
    }
    sort_by_lead(G, leads);
}

bool insert_reduced(std::vector<NcPoly>& G, std::vector<Letters>& leads, const NcPoly& h)
{
    NcPoly r = reduce_full(h, G, leads);
    if (r.is_zero())
        return false;
    r = monic(r);
    leads.push_back(r.leading_monomial().aword);
    G.push_back(std::move(r));
    interreduce(G, leads);
    return true;
}

NcPoly lift_to_rationals(const NcPoly& p)
{
    const PolyContext& c = *p.context();
    CtxPtr nctx = make_context(make_ring("QQ"), c.mode, c.agens, c.xvars);
    NcPoly out(nctx);
    for (const auto& [mon, coef] : p.terms())
        out.add_term(mon, Scalar::of(nctx->ring, coef.num()));
    return out;
}

void require_x_free(const NcPoly& p)
{
    if (!p.is_x_free())
        fail(Errc::InvalidInput, "polynomial must be free of x-variables");
}

/// Match a query polynomial to the engine's context, lifting ZZ
/// coefficients when the state was lifted.
NcPoly adapt_to_state(const NcPoly& p, const GBState& gb)
{
    require_x_free(p);
    const PolyContext& pc = *p.context();
    const PolyContext& gc = *gb.context();
    if (!(pc.agens == gc.agens))
        fail(Errc::ContextMismatch, "polynomial generators do not match the rewriting system");
    if (pc.ring == gc.ring)
        return p.in_context(gb.context());
    if (gb.lifted_from_integers() && pc.ring.kind == RingKind::Integers)
        return lift_to_rationals(p).in_context(gb.context());
    fail(Errc::ContextMismatch, "coefficient ring does not match the rewriting system");
}

}  // namespace

std::string MembershipVerdict::str() const
{
    switch (tag) {
        case Membership::Member: return "member";
        case Membership::CertifiedNonMember: return "certified-non-member";
        case Membership::NotDetectedUpTo: return "not-detected-up-to " + std::to_string(bound);
    }
    return "?";
}

GBState buchberger_bounded(const std::vector<NcPoly>& relations, int bound, bool allow_lift)
{
    GBState state;
    state.bound_ = bound;
    if (relations.empty())
        fail(Errc::InvalidInput, "no relations given");
    CtxPtr ctx = relations[0].context();
    for (const auto& r : relations) {
        require_x_free(r);
        if (!(*r.context() == *ctx))
            fail(Errc::ContextMismatch, "relations live in different contexts");
    }
    bool lift = false;
    if (!ctx->ring.is_field()) {
        if (!allow_lift)
            fail(Errc::NotAField, "completion requires field coefficients (lift to QQ disabled)");
        lift = true;
    }

    std::vector<NcPoly> input;
    for (const auto& r : relations) {
        if (r.is_zero())
            continue;
        NcPoly p = lift ? lift_to_rationals(r) : r;
        if (p.degree() > bound)
            fail(Errc::BoundTooSmall, "relation of degree " + std::to_string(p.degree()) +
                                          " exceeds bound " + std::to_string(bound));
        input.push_back(std::move(p));
    }
    state.lifted_ = lift;
    state.ctx_ = input.empty() ? (lift ? lift_to_rationals(relations[0]).context() : ctx) : input[0].context();
    std::sort(input.begin(), input.end(), [](const NcPoly& a, const NcPoly& b) { return cmp_polys(a, b) < 0; });

    std::vector<NcPoly> G;
    std::vector<Letters> leads;
    for (const auto& p : input)
        insert_reduced(G, leads, p);

    // Fixpoint: the final pass re-reduces every bounded overlap against the
    // final basis, so `complete` is a verified certificate.
    bool skipped = false;
    bool changed = true;
    while (changed) {
        changed = false;
        skipped = false;
        for (const auto& amb : enumerate_ambiguities(leads)) {
            if (int(amb.word.size()) > bound) {
                skipped = true;
                continue;
            }
            const Letters& lw1 = leads[amb.i];
            const Letters& lw2 = leads[amb.j];
            Letters right(lw2.begin() + long(amb.k), lw2.end());
            Letters left(lw1.begin(), lw1.end() - long(amb.k));
            NcPoly s = G[amb.i] * word_poly(state.ctx_, right) - word_poly(state.ctx_, left) * G[amb.j];
            NcPoly h = reduce_full(s, G, leads);
            if (!h.is_zero()) {
                insert_reduced(G, leads, h);
                changed = true;
                break;
            }
        }
    }

    state.complete_ = !skipped;
    state.basis_ = std::move(G);
    state.leads_ = std::move(leads);
    return state;
}

NcPoly normal_form(const NcPoly& p, const GBState& gb, ReductionInfo* info)
{
    NcPoly q = adapt_to_state(p, gb);
    return reduce_full(std::move(q), gb.basis(), gb.leads(), info);
}

MembershipVerdict is_member(const NcPoly& p, const GBState& gb)
{
    NcPoly nf = normal_form(p, gb);
    if (nf.is_zero())
        return {Membership::Member, gb.bound()};
    if (gb.complete())
        return {Membership::CertifiedNonMember, gb.bound()};
    return {Membership::NotDetectedUpTo, gb.bound()};
}

std::vector<Letters> normal_words(const GBState& gb, int degree)
{
    std::vector<Letters> out;
    std::vector<Letters> layer{Letters{}};
    auto reducible = [&gb](const Letters& w) {
        for (const auto& lw : gb.leads())
            if (find_factor(w, lw) >= 0)
                return true;
        return false;
    };
    if (!reducible(Letters{}))
        out.push_back(Letters{});
    else
        layer.clear();
    size_t n = gb.context()->agens.size();
    for (int d = 1; d <= degree; ++d) {
        std::vector<Letters> next;
        for (const auto& w : layer) {
            for (uint32_t l = 0; l < n; ++l) {
                Letters ext = w;
                ext.push_back(l);
                // w is already normal; only a lead ending at the new letter
                // can make ext reducible
                bool bad = false;
                for (const auto& lw : gb.leads()) {
                    if (lw.size() > ext.size())
                        continue;
                    bool hit = true;
                    for (size_t t = 0; t < lw.size(); ++t)
                        if (ext[ext.size() - lw.size() + t] != lw[t]) {
                            hit = false;
                            break;
                        }
                    if (hit) {
                        bad = true;
                        break;
                    }
                }
                if (!bad)
                    next.push_back(std::move(ext));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Letters& a, const Letters& b) { return cmp_words(a, b) < 0; });
    return out;
}

long long DimensionCounts::total() const
{
    long long t = 0;
    for (long long c : per_degree)
        t += c;
    return t;
}

DimensionCounts quotient_dimension(const GBState& gb, int degree)
{
    if (degree > gb.bound() && !gb.complete())
        fail(Errc::BoundExceeded, "requested degree " + std::to_string(degree) + " exceeds completion bound " +
                                      std::to_string(gb.bound()) + " on an uncertified basis");
    DimensionCounts out;
    out.per_degree.assign(size_t(degree) + 1, 0);
    for (const auto& w : normal_words(gb, degree))
        out.per_degree[w.size()] += 1;
    out.exact = gb.complete();
    return out;
}

bool span_membership_oracle(const NcPoly& p, const std::vector<NcPoly>& relations, int degree, size_t dimension_cap)
{
    const CtxPtr& ctx = p.context();
    require_x_free(p);
    if (!ctx->ring.is_field())
        fail(Errc::NotAField, "span oracle requires field coefficients");
    if (p.degree() > degree)
        fail(Errc::BoundExceeded, "query polynomial exceeds the degree window");
    for (const auto& g : relations) {
        require_x_free(g);
        if (!(*g.context() == *ctx))
            fail(Errc::ContextMismatch, "relations live in a different context");
        if (g.degree() > degree)
            fail(Errc::BoundExceeded, "relation exceeds the degree window");
    }

    size_t n = ctx->agens.size();
    std::vector<std::vector<Letters>> by_len(size_t(degree) + 1);
    by_len[0].push_back(Letters{});
    size_t total = 1;
    for (int d = 1; d <= degree; ++d) {
        for (const auto& w : by_len[size_t(d) - 1])
            for (uint32_t l = 0; l < n; ++l) {
                Letters ext = w;
                ext.push_back(l);
                by_len[size_t(d)].push_back(std::move(ext));
            }
        total += by_len[size_t(d)].size();
        if (total > dimension_cap)
            fail(Errc::TooLarge, "degree-" + std::to_string(degree) + " word space exceeds the configured cap");
    }
    std::map<Letters, uint32_t> index;
    uint32_t next_id = 0;
    for (const auto& bucket : by_len)
        for (const auto& w : bucket)
            index.emplace(w, next_id++);

    auto row_of = [&index](const NcPoly& q) {
        SparseRow row;
        for (const auto& [mon, c] : q.terms())
            row.emplace(index.at(mon.aword), c);
        return row;
    };

    RowSpan span(ctx->ring);
    for (const auto& g : relations) {
        if (g.is_zero())
            continue;
        int dg = g.degree();
        for (int ulen = 0; ulen + dg <= degree; ++ulen)
            for (int vlen = 0; ulen + dg + vlen <= degree; ++vlen)
                for (const auto& u : by_len[size_t(ulen)])
                    for (const auto& v : by_len[size_t(vlen)])
                        span.insert(row_of(word_poly(ctx, u) * g * word_poly(ctx, v)));
    }
    return span.contains(row_of(p));
}

std::string export_gb(const GBState& gb)
{
    std::string out;
    for (size_t i = 0; i < gb.basis().size(); ++i) {
        out += "lead: " + format_word(gb.context()->agens, gb.leads()[i]);
        out += " rel: " + format_poly(gb.basis()[i]);
        out += "\n";
    }
    out += std::string("complete: ") + (gb.complete() ? "true" : "false") + "\n";
    return out;
}

}  // namespace gencliff
