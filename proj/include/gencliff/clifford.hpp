#pragma once

#include <string>
#include <vector>

#include "gencliff/gbasis.hpp"
#include "gencliff/laws.hpp"

namespace gencliff {

/// Data of a weighted form family f_m, f_2m, ..., f_dm: n central variables,
/// weight m, top index d. forms[l-1] holds f_{l*m}, a commutative polynomial
/// homogeneous of degree l*m (zero polynomials allowed).
struct CliffordInput {
    RingHandle ring;
    Alphabet xvars;
    int m = 1;
    int d = 1;
    XMode mode = XMode::Ordered;
    std::vector<NcPoly> forms;

    int n() const { return int(xvars.size()); }
};

/// Parses the form texts in a commuting x-context and validates degrees.
CliffordInput make_clifford_input(const RingHandle& ring, Alphabet xvars, int m, int d, XMode mode,
                                  const std::vector<std::string>& form_texts);
void validate_input(const CliffordInput& input);

/// Generator names for the degree-m monomial symbols, in gamma_basis(n, m)
/// order: single letters a, b, c, ... while they last, indexed names after.
std::vector<std::string> clifford_generator_names(int n, int m);

/// A quotient presentation of the free algebra: named generators and x-free
/// relations in a canonical order (zero and duplicate relations removed).
struct Presentation {
    RingHandle ring;
    Alphabet generators;
    std::vector<NcPoly> relations;
    std::string provenance;  // kl | psi | quadratic | weyl

    CtxPtr relation_context() const;
};

/// Coefficient-extraction presentation: relations are the x-part
/// coefficients of (sum_J a_J x^J)^d - sum_l (sum_J a_J x^J)^{d-l} f_{lm},
/// computed in the requested x-mode.
Presentation kl_presentation(const CliffordInput& input);

/// Divided-power presentation: relations are the values of the associated
/// algebra-valued law on the full weight-m*d divided-power basis; the law is
/// assembled from products of component laws through generic expansion with
/// commuting x-part.
Presentation psi_presentation(const CliffordInput& input);

/// The algebra-valued law behind psi_presentation; exposed so its values can
/// also be evaluated at module points.
HomLaw clifford_delta_law(const CliffordInput& input);

/// Quadratic form given by its values on the basis and the polarization of
/// the off-diagonal pairs: q(sum z_i e_i) = sum q_i z_i^2 + sum_{i<j} b_ij z_i z_j.
struct GramForm {
    RingHandle ring;
    std::vector<Scalar> diagonal;              // q(e_i)
    std::vector<std::vector<Scalar>> polar;    // b(e_i, e_j) for i < j, row i has n-1-i entries

    int n() const { return int(diagonal.size()); }
};

GramForm gram_from_quadratic(const NcPoly& q);

Presentation quadratic_presentation(const GramForm& q);

/// Presentation with relations e_i e_j - e_j e_i - psi(e_i, e_j) for i < j.
/// InconsistentForm when a diagonal entry is nonzero (it would impose a
/// nonzero constant relation).
Presentation weyl_presentation(const std::vector<std::vector<Scalar>>& psi, const RingHandle& ring);

enum class ComparisonTag { IsomorphicUpToBound, ProperInclusion, Incomparable };

struct ComparisonEntry {
    std::string relation;
    MembershipVerdict verdict;
};

struct ComparisonReport {
    ComparisonTag tag = ComparisonTag::Incomparable;
    bool psi_inside_kl = false;
    bool kl_inside_psi = false;
    std::vector<ComparisonEntry> psi_in_kl;
    std::vector<ComparisonEntry> kl_in_psi;

    std::string tag_str() const;
};

/// Builds both presentations, identifies generators positionwise, and tests
/// each relation of either side for membership in the other ideal up to the
/// bound.
ComparisonReport comparison_check(const CliffordInput& input, int bound);

/// The defining equation of the associated weighted hypersurface:
/// x0^d - x0^{d-1} f_m - x0^{d-2} f_2m - ... - f_dm, a commutative
/// polynomial in x0 (weight m) and the input variables (weight 1),
/// weighted-homogeneous of weight m*d.
NcPoly hypersurface_equation(const CliffordInput& input);

}  // namespace gencliff
