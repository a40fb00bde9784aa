#include "gencliff/freealg.hpp"

#include <algorithm>

namespace gencliff {

namespace {

bool valid_name(const std::string& s)
{
    if (s.empty())
        return false;
    auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    if (!head(s[0]))
        return false;
    for (char c : s)
        if (!head(c) && !(c >= '0' && c <= '9'))
            return false;
    return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> n) : names(std::move(n))
{
    for (size_t i = 0; i < names.size(); ++i) {
        if (!valid_name(names[i]))
            fail(Errc::InvalidInput, "bad generator name '" + names[i] + "'");
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                fail(Errc::InvalidInput, "duplicate generator name '" + names[i] + "'");
    }
}

int Alphabet::index_of(std::string_view name) const
{
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return int(i);
    return -1;
}

int cmp_words(const Letters& a, const Letters& b)
{
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

int cmp_xparts(XMode mode, const Letters& a, const Letters& b)
{
    if (mode == XMode::Ordered)
        return cmp_words(a, b);
    // Commuting: deglex on multidegrees, earlier variable more significant.
    // On sorted multiset words of equal length that is the reversed word order.
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? 1 : -1;
    return 0;
}

int cmp_monomials(XMode mode, const MixedMonomial& a, const MixedMonomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    if (int c = cmp_words(a.aword, b.aword))
        return c;
    return cmp_xparts(mode, a.xpart, b.xpart);
}

size_t MixedMonomialHash::operator()(const MixedMonomial& m) const
{
    size_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(m.aword.size());
    for (uint32_t l : m.aword)
        mix(l);
    mix(0xffffffffULL);
    for (uint32_t l : m.xpart)
        mix(l);
    return h;
}

CtxPtr make_context(const RingHandle& ring, XMode mode, Alphabet agens, Alphabet xvars)
{
    for (const auto& n : agens.names)
        if (xvars.index_of(n) >= 0)
            fail(Errc::InvalidInput, "name '" + n + "' appears in both alphabets");
    auto ctx = std::make_shared<PolyContext>();
    ctx->ring = ring;
    ctx->mode = mode;
    ctx->agens = std::move(agens);
    ctx->xvars = std::move(xvars);
    return ctx;
}

CtxPtr make_algebra_context(const RingHandle& ring, Alphabet agens)
{
    return make_context(ring, XMode::Commuting, std::move(agens), Alphabet{});
}

void NcPoly::check_same_context(const NcPoly& a, const NcPoly& b)
{
    if (a.ctx_ == b.ctx_)
        return;
    if (!a.ctx_ || !b.ctx_ || !(*a.ctx_ == *b.ctx_))
        fail(Errc::ContextMismatch, "operands live in different contexts");
}

NcPoly NcPoly::unit(CtxPtr ctx)
{
    Scalar one = Scalar::one(ctx->ring);
    return constant(std::move(ctx), one);
}

NcPoly NcPoly::constant(CtxPtr ctx, const Scalar& c)
{
    NcPoly p(std::move(ctx));
    p.add_term(MixedMonomial{}, c);
    return p;
}

NcPoly NcPoly::monomial(CtxPtr ctx, MixedMonomial mon, const Scalar& c)
{
    NcPoly p(std::move(ctx));
    for (uint32_t l : mon.aword)
        if (l >= p.ctx_->agens.size())
            fail(Errc::UnknownGenerator, "a-letter index out of range");
    for (uint32_t l : mon.xpart)
        if (l >= p.ctx_->xvars.size())
            fail(Errc::UnknownGenerator, "x-letter index out of range");
    if (p.ctx_->mode == XMode::Commuting)
        std::sort(mon.xpart.begin(), mon.xpart.end());
    p.add_term(mon, c);
    return p;
}

NcPoly NcPoly::generator(CtxPtr ctx, uint32_t a_index)
{
    auto r = ctx->ring;
    return monomial(std::move(ctx), MixedMonomial{{a_index}, {}}, Scalar::one(r));
}

NcPoly NcPoly::xvar(CtxPtr ctx, uint32_t x_index)
{
    auto r = ctx->ring;
    return monomial(std::move(ctx), MixedMonomial{{}, {x_index}}, Scalar::one(r));
}

int NcPoly::degree() const
{
    int d = -1;
    for (const auto& [mon, c] : terms_)
        d = std::max(d, mon.degree());
    return d;
}

bool NcPoly::is_x_free() const
{
    for (const auto& [mon, c] : terms_)
        if (!mon.xpart.empty())
            return false;
    return true;
}

Scalar NcPoly::coeff(const MixedMonomial& mon) const
{
    auto it = terms_.find(mon);
    return it == terms_.end() ? Scalar::zero(ctx_->ring) : it->second;
}

void NcPoly::add_term(const MixedMonomial& mon, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(mon, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NcPoly NcPoly::operator+(const NcPoly& o) const
{
    NcPoly r = *this;
    r += o;
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o)
{
    check_same_context(*this, o);
    for (const auto& [mon, c] : o.terms_)
        add_term(mon, c);
    return *this;
}

NcPoly NcPoly::operator-(const NcPoly& o) const
{
    NcPoly r = *this;
    r -= o;
    return r;
}

NcPoly& NcPoly::operator-=(const NcPoly& o)
{
    check_same_context(*this, o);
    for (const auto& [mon, c] : o.terms_)
        add_term(mon, -c);
    return *this;
}

NcPoly NcPoly::operator-() const
{
    NcPoly r(ctx_);
    for (const auto& [mon, c] : terms_)
        r.terms_.emplace(mon, -c);
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const
{
    check_same_context(*this, o);
    NcPoly r(ctx_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Scalar c = ca * cb;
            if (c.is_zero())
                continue;
            MixedMonomial m;
            m.aword.reserve(ma.aword.size() + mb.aword.size());
            m.aword.insert(m.aword.end(), ma.aword.begin(), ma.aword.end());
            m.aword.insert(m.aword.end(), mb.aword.begin(), mb.aword.end());
            m.xpart.reserve(ma.xpart.size() + mb.xpart.size());
            m.xpart.insert(m.xpart.end(), ma.xpart.begin(), ma.xpart.end());
            m.xpart.insert(m.xpart.end(), mb.xpart.begin(), mb.xpart.end());
            if (ctx_->mode == XMode::Commuting)
                std::inplace_merge(m.xpart.begin(), m.xpart.begin() + ma.xpart.size(), m.xpart.end());
            r.add_term(m, c);
        }
    }
    return r;
}

bool NcPoly::operator==(const NcPoly& o) const
{
    if (ctx_ != o.ctx_ && (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_)))
        return false;
    return terms_ == o.terms_;
}

NcPoly NcPoly::pow(uint32_t k) const
{
    NcPoly acc = unit(ctx_);
    for (uint32_t i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

NcPoly NcPoly::scaled(const Scalar& c) const
{
    NcPoly r(ctx_);
    for (const auto& [mon, cc] : terms_) {
        Scalar v = cc * c;
        if (!v.is_zero())
            r.terms_.emplace(mon, v);
    }
    return r;
}

std::vector<std::pair<MixedMonomial, Scalar>> NcPoly::sorted_terms() const
{
    std::vector<std::pair<MixedMonomial, Scalar>> out(terms_.begin(), terms_.end());
    XMode mode = ctx_ ? ctx_->mode : XMode::Ordered;
    std::sort(out.begin(), out.end(),
              [mode](const auto& a, const auto& b) { return cmp_monomials(mode, a.first, b.first) > 0; });
    return out;
}

const MixedMonomial& NcPoly::leading_monomial() const
{
    if (terms_.empty())
        fail(Errc::InvalidInput, "zero polynomial has no leading monomial");
    const MixedMonomial* best = nullptr;
    for (const auto& [mon, c] : terms_)
        if (!best || cmp_monomials(ctx_->mode, mon, *best) > 0)
            best = &mon;
    return *best;
}

Scalar NcPoly::leading_coefficient() const
{
    return terms_.at(leading_monomial());
}

std::vector<std::pair<Letters, NcPoly>> NcPoly::extract_coefficients() const
{
    std::vector<std::pair<Letters, NcPoly>> out;
    for (const auto& [mon, c] : terms_) {
        NcPoly* slot = nullptr;
        for (auto& [xp, poly] : out)
            if (xp == mon.xpart) {
                slot = &poly;
                break;
            }
        if (!slot) {
            out.emplace_back(mon.xpart, NcPoly(ctx_));
            slot = &out.back().second;
        }
        slot->add_term(MixedMonomial{mon.aword, {}}, c);
    }
    XMode mode = ctx_ ? ctx_->mode : XMode::Ordered;
    std::sort(out.begin(), out.end(),
              [mode](const auto& a, const auto& b) { return cmp_xparts(mode, a.first, b.first) < 0; });
    return out;
}

NcPoly NcPoly::in_context(const CtxPtr& nctx) const
{
    if (ctx_ && *ctx_ == *nctx) {
        NcPoly r = *this;
        r.ctx_ = nctx;
        return r;
    }
    if (ctx_ && !(ctx_->ring == nctx->ring))
        fail(Errc::ContextMismatch, "cannot move polynomial across rings");
    NcPoly r(nctx);
    for (const auto& [mon, c] : terms_) {
        MixedMonomial m;
        m.aword.reserve(mon.aword.size());
        for (uint32_t l : mon.aword) {
            int idx = nctx->agens.index_of(ctx_->agens[l]);
            if (idx < 0)
                fail(Errc::ContextMismatch, "generator '" + ctx_->agens[l] + "' missing from target context");
            m.aword.push_back(uint32_t(idx));
        }
        m.xpart.reserve(mon.xpart.size());
        for (uint32_t l : mon.xpart) {
            int idx = nctx->xvars.index_of(ctx_->xvars[l]);
            if (idx < 0)
                fail(Errc::ContextMismatch, "variable '" + ctx_->xvars[l] + "' missing from target context");
            m.xpart.push_back(uint32_t(idx));
        }
        if (nctx->mode == XMode::Commuting)
            std::sort(m.xpart.begin(), m.xpart.end());
        r.add_term(m, c);
    }
    return r;
}

int cmp_polys(const NcPoly& a, const NcPoly& b)
{
    auto ta = a.sorted_terms();
    auto tb = b.sorted_terms();
    XMode mode = a.context() ? a.context()->mode : XMode::Ordered;
    size_t n = std::min(ta.size(), tb.size());
    for (size_t i = 0; i < n; ++i) {
        if (int c = cmp_monomials(mode, ta[i].first, tb[i].first))
            return c;
        if (int c = ta[i].second.cmp(tb[i].second))
            return c;
    }
    if (ta.size() != tb.size())
        return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

Letters exponents_to_word(const std::vector<uint32_t>& exponents)
{
    Letters w;
    for (uint32_t i = 0; i < exponents.size(); ++i)
        for (uint32_t k = 0; k < exponents[i]; ++k)
            w.push_back(i);
    return w;
}

std::vector<uint32_t> word_to_exponents(const Letters& word, size_t nvars)
{
    std::vector<uint32_t> e(nvars, 0);
    for (uint32_t l : word)
        e.at(l) += 1;
    return e;
}

}  // namespace gencliff
