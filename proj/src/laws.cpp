#include "gencliff/laws.hpp"

#include <algorithm>

namespace gencliff {

namespace {

void gamma_rec(int rank, int degree, Exponents& prefix, std::vector<Exponents>& out)
{
    if (int(prefix.size()) == rank - 1) {
        prefix.push_back(uint32_t(degree));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int k = degree; k >= 0; --k) {
        prefix.push_back(uint32_t(k));
        gamma_rec(rank, degree - k, prefix, out);
        prefix.pop_back();
    }
}

Alphabet internal_xvars(int rank)
{
    std::vector<std::string> names;
    names.reserve(rank);
    for (int i = 0; i < rank; ++i)
        names.push_back("_x" + std::to_string(i + 1));
    return Alphabet(std::move(names));
}

}  // namespace

std::vector<Exponents> gamma_basis(int rank, int degree)
{
    if (rank < 1 || degree < 0)
        fail(Errc::InvalidInput, "gamma_basis needs rank >= 1 and degree >= 0");
    std::vector<Exponents> out;
    Exponents prefix;
    gamma_rec(rank, degree, prefix, out);
    return out;
}

std::vector<Scalar> divided_power(const std::vector<Scalar>& c, int degree)
{
    if (c.empty())
        fail(Errc::InvalidInput, "empty coefficient vector");
    const RingHandle ring = c[0].ring();
    for (const auto& s : c)
        if (!(s.ring() == ring))
            fail(Errc::RingMismatch, "mixed rings in coefficient vector");
    auto basis = gamma_basis(int(c.size()), degree);
    std::vector<Scalar> out;
    out.reserve(basis.size());
    for (const auto& nu : basis) {
        Scalar v = Scalar::one(ring);
        for (size_t i = 0; i < nu.size(); ++i)
            if (nu[i] > 0)
                v *= c[i].pow(nu[i]);
        out.push_back(v);
    }
    return out;
}

HomLaw HomLaw::scalar_law(const RingHandle& ring, int rank, int degree)
{
    return algebra_law(ring, rank, degree, Alphabet{});
}

HomLaw HomLaw::algebra_law(const RingHandle& ring, int rank, int degree, Alphabet target)
{
    if (rank < 1 || degree < 0)
        fail(Errc::InvalidInput, "law needs rank >= 1 and degree >= 0");
    HomLaw h;
    h.ring_ = ring;
    h.rank_ = rank;
    h.degree_ = degree;
    h.scalar_target_ = target.size() == 0;
    h.target_ctx_ = make_algebra_context(ring, std::move(target));
    return h;
}

void HomLaw::check_index(const Exponents& nu) const
{
    if (int(nu.size()) != rank_)
        fail(Errc::InvalidInput, "multidegree length does not match rank");
    uint32_t total = 0;
    for (uint32_t e : nu)
        total += e;
    if (int(total) != degree_)
        fail(Errc::InvalidInput, "multidegree weight does not match law degree");
}

void HomLaw::set_entry(const Exponents& nu, NcPoly value)
{
    check_index(nu);
    NcPoly v = value.in_context(target_ctx_);
    if (v.is_zero())
        table_.erase(nu);
    else
        table_[nu] = std::move(v);
}

void HomLaw::set_entry(const Exponents& nu, const Scalar& value)
{
    set_entry(nu, NcPoly::constant(target_ctx_, value));
}

NcPoly HomLaw::entry(const Exponents& nu) const
{
    check_index(nu);
    auto it = table_.find(nu);
    return it == table_.end() ? NcPoly::zero(target_ctx_) : it->second;
}

Scalar HomLaw::scalar_entry(const Exponents& nu) const
{
    return entry(nu).coeff(MixedMonomial{});
}

bool HomLaw::is_zero() const
{
    return table_.empty();
}

NcPoly HomLaw::eval(const std::vector<Scalar>& z) const
{
    if (int(z.size()) != rank_)
        fail(Errc::InvalidInput, "point length does not match rank");
    NcPoly out(target_ctx_);
    for (const auto& [nu, value] : table_) {
        Scalar c = Scalar::one(ring_);
        for (size_t i = 0; i < nu.size(); ++i)
            if (nu[i] > 0)
                c *= z[i].pow(nu[i]);
        out += value.scaled(c);
    }
    return out;
}

Scalar HomLaw::eval_scalar(const std::vector<Scalar>& z) const
{
    if (!scalar_target_)
        fail(Errc::ContextMismatch, "law has an algebra target");
    return eval(z).coeff(MixedMonomial{});
}

NcPoly HomLaw::generic(const Alphabet& xvars) const
{
    if (int(xvars.size()) != rank_)
        fail(Errc::InvalidInput, "variable count does not match rank");
    CtxPtr ctx = make_context(ring_, XMode::Commuting, target_ctx_->agens, xvars);
    NcPoly out(ctx);
    for (const auto& [nu, value] : table_) {
        Letters xw = exponents_to_word(nu);
        for (const auto& [mon, c] : value.terms())
            out.add_term(MixedMonomial{mon.aword, xw}, c);
    }
    return out;
}

HomLaw HomLaw::operator+(const HomLaw& o) const
{
    if (!(ring_ == o.ring_) || rank_ != o.rank_ || degree_ != o.degree_ ||
        !(target_ctx_->agens == o.target_ctx_->agens))
        fail(Errc::ContextMismatch, "laws have different shapes");
    HomLaw out = *this;
    for (const auto& [nu, value] : o.table_) {
        NcPoly v = out.entry(nu) + value.in_context(out.target_ctx_);
        out.set_entry(nu, std::move(v));
    }
    return out;
}

HomLaw HomLaw::operator-() const
{
    HomLaw out = *this;
    for (auto& [nu, value] : out.table_)
        value = -value;
    return out;
}

bool operator==(const HomLaw& a, const HomLaw& b)
{
    if (!(a.ring_ == b.ring_) || a.rank_ != b.rank_ || a.degree_ != b.degree_ ||
        !(a.target_ctx_->agens == b.target_ctx_->agens))
        return false;
    if (a.table_.size() != b.table_.size())
        return false;
    for (const auto& [nu, value] : a.table_) {
        auto it = b.table_.find(nu);
        if (it == b.table_.end() || !(value == it->second.in_context(a.target_ctx_)))
            return false;
    }
    return true;
}

HomLaw law_from_commutative_poly(const NcPoly& f, int degree)
{
    const CtxPtr& ctx = f.context();
    if (ctx->mode != XMode::Commuting)
        fail(Errc::ContextMismatch, "commutative polynomial expected (commuting mode)");
    int rank = int(ctx->xvars.size());
    HomLaw law = HomLaw::scalar_law(ctx->ring, rank, degree);
    for (const auto& [mon, c] : f.terms()) {
        if (!mon.aword.empty())
            fail(Errc::ContextMismatch, "commutative polynomial must not contain algebra generators");
        if (int(mon.xpart.size()) != degree)
            fail(Errc::NotHomogeneous, "term of degree " + std::to_string(mon.xpart.size()) +
                                           " in a declared degree-" + std::to_string(degree) + " form");
        law.set_entry(word_to_exponents(mon.xpart, size_t(rank)), c);
    }
    return law;
}

HomLaw law_from_generic(const NcPoly& generic_poly, int rank, int degree)
{
    const CtxPtr& ctx = generic_poly.context();
    if (ctx->mode != XMode::Commuting)
        fail(Errc::ContextMismatch, "generic expansion must have commuting x-part");
    HomLaw law = HomLaw::algebra_law(ctx->ring, rank, degree, ctx->agens);
    for (const auto& [xw, value] : generic_poly.extract_coefficients()) {
        if (int(xw.size()) != degree)
            fail(Errc::NotHomogeneous, "generic expansion is not x-homogeneous of the declared degree");
        law.set_entry(word_to_exponents(xw, size_t(rank)), value);
    }
    return law;
}

HomLaw law_product(const HomLaw& a, const HomLaw& b)
{
    if (!(a.ring() == b.ring()) || a.rank() != b.rank())
        fail(Errc::ContextMismatch, "laws have different base data");
    if (!a.scalar_target() && !b.scalar_target() && !(a.target_alphabet() == b.target_alphabet()))
        fail(Errc::ContextMismatch, "algebra targets differ");
    const Alphabet& target = a.scalar_target() ? b.target_alphabet() : a.target_alphabet();
    Alphabet xs = internal_xvars(a.rank());
    CtxPtr ctx = make_context(a.ring(), XMode::Commuting, target, xs);
    NcPoly prod = a.generic(xs).in_context(ctx) * b.generic(xs).in_context(ctx);
    return law_from_generic(prod, a.rank(), a.degree() + b.degree());
}

HomLaw law_power(const HomLaw& a, int k)
{
    if (k < 1)
        fail(Errc::InvalidInput, "law_power needs k >= 1");
    HomLaw acc = a;
    for (int i = 1; i < k; ++i)
        acc = law_product(acc, a);
    return acc;
}

HomLaw law_to_algebra(const HomLaw& scalar_law, const Alphabet& target)
{
    if (!scalar_law.scalar_target())
        fail(Errc::ContextMismatch, "law already has an algebra target");
    HomLaw out = HomLaw::algebra_law(scalar_law.ring(), scalar_law.rank(), scalar_law.degree(), target);
    for (const auto& nu : gamma_basis(scalar_law.rank(), scalar_law.degree())) {
        Scalar c = scalar_law.scalar_entry(nu);
        if (!c.is_zero())
            out.set_entry(nu, c);
    }
    return out;
}

HomLaw law_change_ring(const HomLaw& law, const RingHandle& target)
{
    if (law.ring().kind != RingKind::Integers)
        fail(Errc::RingMismatch, "base change supported from ZZ only");
    HomLaw out = law.scalar_target() ? HomLaw::scalar_law(target, law.rank(), law.degree())
                                     : HomLaw::algebra_law(target, law.rank(), law.degree(), law.target_alphabet());
    for (const auto& nu : gamma_basis(law.rank(), law.degree())) {
        NcPoly value = law.entry(nu);
        if (value.is_zero())
            continue;
        NcPoly moved(out.target_context());
        for (const auto& [mon, c] : value.terms())
            moved.add_term(mon, Scalar::of(target, c.num()));
        out.set_entry(nu, std::move(moved));
    }
    return out;
}

PolyLaw::PolyLaw(const RingHandle& ring, int rank, bool scalar_target, Alphabet target)
    : ring_(ring), rank_(rank), scalar_target_(scalar_target), target_(std::move(target))
{
}

PolyLaw PolyLaw::of(HomLaw component)
{
    PolyLaw p(component.ring(), component.rank(), component.scalar_target(), component.target_alphabet());
    p.add(component);
    return p;
}

void PolyLaw::check_shape(const HomLaw& h) const
{
    if (!(h.ring() == ring_) || h.rank() != rank_ || h.scalar_target() != scalar_target_ ||
        !(h.target_alphabet() == target_))
        fail(Errc::ContextMismatch, "component shape does not match the law family");
}

void PolyLaw::add(const HomLaw& component)
{
    check_shape(component);
    auto it = components_.find(component.degree());
    if (it == components_.end()) {
        if (!component.is_zero())
            components_.emplace(component.degree(), component);
        return;
    }
    HomLaw sum = it->second + component;
    if (sum.is_zero())
        components_.erase(it);
    else
        it->second = std::move(sum);
}

PolyLaw PolyLaw::operator+(const PolyLaw& o) const
{
    if (!(ring_ == o.ring_) || rank_ != o.rank_ || scalar_target_ != o.scalar_target_ || !(target_ == o.target_))
        fail(Errc::ContextMismatch, "law families have different shapes");
    PolyLaw out = *this;
    for (const auto& [deg, h] : o.components_)
        out.add(h);
    return out;
}

HomLaw PolyLaw::component(int degree) const
{
    auto it = components_.find(degree);
    if (it != components_.end())
        return it->second;
    return scalar_target_ ? HomLaw::scalar_law(ring_, rank_, degree)
                          : HomLaw::algebra_law(ring_, rank_, degree, target_);
}

}  // namespace gencliff
