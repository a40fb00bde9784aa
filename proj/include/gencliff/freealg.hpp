#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gencliff/coeffs.hpp"

namespace gencliff {

/// How the central x-variables combine: Commuting keeps multidegrees only,
/// Ordered keeps the x-letters as a word (central over the a-generators but
/// not over each other).
enum class XMode { Commuting, Ordered };

/// Ordered list of distinct generator names; the position is the precedence
/// (index 0 smallest in the monomial order).
struct Alphabet {
    std::vector<std::string> names;

    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> n);  // validates names
    size_t size() const { return names.size(); }
    const std::string& operator[](size_t i) const { return names[i]; }
    int index_of(std::string_view name) const;  // -1 when absent

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

using Letters = std::vector<uint32_t>;

/// Degree-lexicographic comparison of words: first by length, then position
/// by position with smaller letter index smaller. Returns -1/0/1.
int cmp_words(const Letters& a, const Letters& b);

/// Order on x-parts. Ordered mode compares as words; Commuting mode compares
/// the multidegrees deglex with earlier variables more significant.
int cmp_xparts(XMode mode, const Letters& a, const Letters& b);

/// One monomial a_{i1}...a_{ik} * x-part. Commuting x-parts are stored as
/// nondecreasing letter multisets.
struct MixedMonomial {
    Letters aword;
    Letters xpart;

    int degree() const { return int(aword.size() + xpart.size()); }
    bool is_unit() const { return aword.empty() && xpart.empty(); }

    friend bool operator==(const MixedMonomial&, const MixedMonomial&) = default;
};

int cmp_monomials(XMode mode, const MixedMonomial& a, const MixedMonomial& b);

struct MixedMonomialHash {
    size_t operator()(const MixedMonomial& m) const;
};

/// Shared ambient data of a polynomial: coefficient ring, x-convention and
/// the two alphabets. Polynomials from different contexts never mix.
struct PolyContext {
    RingHandle ring;
    XMode mode = XMode::Ordered;
    Alphabet agens;
    Alphabet xvars;

    friend bool operator==(const PolyContext&, const PolyContext&) = default;
};

using CtxPtr = std::shared_ptr<const PolyContext>;

/// Validates that the two alphabets are disjoint.
CtxPtr make_context(const RingHandle& ring, XMode mode, Alphabet agens, Alphabet xvars);

/// Context for x-free polynomials (relations, dg elements, law values).
CtxPtr make_algebra_context(const RingHandle& ring, Alphabet agens);

class NcPoly {
public:
    NcPoly() = default;
    explicit NcPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {}

    static NcPoly zero(CtxPtr ctx) { return NcPoly(std::move(ctx)); }
    static NcPoly unit(CtxPtr ctx);
    static NcPoly constant(CtxPtr ctx, const Scalar& c);
    static NcPoly monomial(CtxPtr ctx, MixedMonomial mon, const Scalar& c);
    static NcPoly generator(CtxPtr ctx, uint32_t a_index);
    static NcPoly xvar(CtxPtr ctx, uint32_t x_index);

    const CtxPtr& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    /// Maximum total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_x_free() const;
    Scalar coeff(const MixedMonomial& mon) const;
    const std::unordered_map<MixedMonomial, Scalar, MixedMonomialHash>& terms() const { return terms_; }

    void add_term(const MixedMonomial& mon, const Scalar& c);

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }
    bool operator==(const NcPoly& o) const;
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    NcPoly pow(uint32_t k) const;
    NcPoly scaled(const Scalar& c) const;

    /// Terms in descending monomial order.
    std::vector<std::pair<MixedMonomial, Scalar>> sorted_terms() const;
    /// The deglex-largest monomial; polynomial must be nonzero.
    const MixedMonomial& leading_monomial() const;
    Scalar leading_coefficient() const;

    /// Groups terms by x-part; values are a-alphabet-only polynomials in the
    /// same context, keys ascending in the x-part order. Reassembling
    /// sum(value * xpart) recovers the polynomial exactly.
    std::vector<std::pair<Letters, NcPoly>> extract_coefficients() const;

    /// Rebuilds the polynomial in another context, translating letters by
    /// name. Fails when a name is missing from the new context.
    NcPoly in_context(const CtxPtr& nctx) const;

private:
    CtxPtr ctx_;
    std::unordered_map<MixedMonomial, Scalar, MixedMonomialHash> terms_;

    static void check_same_context(const NcPoly& a, const NcPoly& b);
};

/// Compares two polynomials via their descending term sequences; a total
/// order used for the canonical ordering of relation lists.
int cmp_polys(const NcPoly& a, const NcPoly& b);

/// Parses the expression grammar: terms joined by +/-, factors joined by *,
/// ^ for positive integer powers, parentheses, integer and p/q literals,
/// names from either alphabet.
NcPoly parse_poly(std::string_view text, const CtxPtr& ctx);

std::string format_word(const Alphabet& alphabet, const Letters& word);
std::string format_monomial(const PolyContext& ctx, const MixedMonomial& mon);
/// Deterministic rendering, terms in descending monomial order;
/// parse_poly(format_poly(p)) == p.
std::string format_poly(const NcPoly& p);

Letters exponents_to_word(const std::vector<uint32_t>& exponents);
std::vector<uint32_t> word_to_exponents(const Letters& word, size_t nvars);

}  // namespace gencliff
