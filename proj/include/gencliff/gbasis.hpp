#pragma once

#include <string>
#include <vector>

#include "gencliff/freealg.hpp"

namespace gencliff {

/// Outcome of an ideal-membership query. CertifiedNonMember requires a
/// certified (complete) basis; otherwise a nonzero normal form only says the
/// element was not detected up to the completion bound.
enum class Membership { Member, CertifiedNonMember, NotDetectedUpTo };

struct MembershipVerdict {
    Membership tag;
    int bound = 0;  // meaningful for NotDetectedUpTo

    bool is_member() const { return tag == Membership::Member; }
    std::string str() const;
};

struct ReductionInfo {
    int steps = 0;
    int max_degree = -1;  // largest degree touched during reduction
};

/// Bounded-degree rewriting system for a two-sided ideal in the free
/// algebra, deglex order with the alphabet declaration precedence. The basis
/// is interreduced with monic leading words. `complete` certifies a full
/// Groebner-Shirshov basis: every overlap of basis leading words had degree
/// <= bound and reduced to zero.
class GBState {
public:
    const CtxPtr& context() const { return ctx_; }
    const std::vector<NcPoly>& basis() const { return basis_; }
    const std::vector<Letters>& leads() const { return leads_; }
    int bound() const { return bound_; }
    bool complete() const { return complete_; }
    bool lifted_from_integers() const { return lifted_; }

private:
    CtxPtr ctx_;
    std::vector<NcPoly> basis_;
    std::vector<Letters> leads_;
    int bound_ = 0;
    bool complete_ = false;
    bool lifted_ = false;

    friend GBState buchberger_bounded(const std::vector<NcPoly>&, int, bool);
};

/// Overlap completion through degree `bound`. Relations must be x-free over
/// a field; ZZ coefficients are lifted to QQ when allow_lift is set
/// (NotAField otherwise). BoundTooSmall when an input relation exceeds the
/// bound.
GBState buchberger_bounded(const std::vector<NcPoly>& relations, int bound, bool allow_lift = true);

/// Deterministic full reduction: always rewrites the deglex-largest
/// reducible term, with the largest applicable leading word at its leftmost
/// occurrence.
NcPoly normal_form(const NcPoly& p, const GBState& gb, ReductionInfo* info = nullptr);

MembershipVerdict is_member(const NcPoly& p, const GBState& gb);

/// Words containing no basis leading word as a factor, degree <= degree.
std::vector<Letters> normal_words(const GBState& gb, int degree);

struct DimensionCounts {
    std::vector<long long> per_degree;  // index = degree
    bool exact = true;

    long long total() const;
};

/// Normal-word counts per degree 0..degree; exact when the basis is
/// complete, otherwise an upper bound (BoundExceeded past the bound).
DimensionCounts quotient_dimension(const GBState& gb, int degree);

/// Independent membership check by exact linear algebra on the span of
/// u*g*v inside the degree-<=degree component. TooLarge when the word space
/// exceeds `dimension_cap`.
bool span_membership_oracle(const NcPoly& p, const std::vector<NcPoly>& relations, int degree,
                            size_t dimension_cap = 200000);

/// Text export: one "lead: <word> rel: <poly>" line per element in
/// ascending lead order, then "complete: true|false".
std::string export_gb(const GBState& gb);

}  // namespace gencliff
