#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gencliff/freealg.hpp"

namespace gencliff {

/// Multidegree of weight d indexing the divided-power basis e^[nu].
using Exponents = std::vector<uint32_t>;

/// All weight-d multidegrees of length rank, lexicographically descending.
/// This ordering is part of the output format contract.
std::vector<Exponents> gamma_basis(int rank, int degree);

/// Coefficients of z^[d] for z = sum c_i e_i on gamma_basis(n, d): the entry
/// at nu is prod c_i^{nu_i}.
std::vector<Scalar> divided_power(const std::vector<Scalar>& c, int degree);

/// A homogeneous degree-d law out of a free rank-n module, stored as the
/// linear map on the divided-power basis of weight d. The target is either
/// the base ring (scalar law) or a free algebra; entries are kept as x-free
/// polynomials over the target algebra context (constants for scalar laws).
/// Absent table entries are zero.
class HomLaw {
public:
    static HomLaw scalar_law(const RingHandle& ring, int rank, int degree);
    static HomLaw algebra_law(const RingHandle& ring, int rank, int degree, Alphabet target);

    int degree() const { return degree_; }
    int rank() const { return rank_; }
    const RingHandle& ring() const { return ring_; }
    bool scalar_target() const { return scalar_target_; }
    const CtxPtr& target_context() const { return target_ctx_; }
    const Alphabet& target_alphabet() const { return target_ctx_->agens; }

    void set_entry(const Exponents& nu, NcPoly value);
    void set_entry(const Exponents& nu, const Scalar& value);
    NcPoly entry(const Exponents& nu) const;
    Scalar scalar_entry(const Exponents& nu) const;
    bool is_zero() const;

    /// Value at a point: sum over nu of entry(nu) * z^nu.
    NcPoly eval(const std::vector<Scalar>& z) const;
    Scalar eval_scalar(const std::vector<Scalar>& z) const;

    /// Expansion at the generic point sum e_i x_i: the mixed polynomial
    /// sum_nu entry(nu) x^nu with commuting x-part over `xvars`.
    NcPoly generic(const Alphabet& xvars) const;

    HomLaw operator+(const HomLaw& o) const;
    HomLaw operator-() const;

    friend bool operator==(const HomLaw&, const HomLaw&);

private:
    HomLaw() = default;
    RingHandle ring_;
    int rank_ = 0;
    int degree_ = 0;
    bool scalar_target_ = true;
    CtxPtr target_ctx_;  // algebra context (empty alphabet for scalar laws)
    std::map<Exponents, NcPoly> table_;

    void check_index(const Exponents& nu) const;
};

/// Law of a homogeneous commutative polynomial: table entry at nu is the
/// coefficient of x^nu. NotHomogeneous when f has a term of another degree.
HomLaw law_from_commutative_poly(const NcPoly& f, int degree);

/// Reads the table back off a generic expansion (commuting x-part, degree
/// homogeneous in x).
HomLaw law_from_generic(const NcPoly& generic_poly, int rank, int degree);

/// Product law of degree p+q: generic expansions multiply, algebra factors
/// in the written order; scalar factors compose with either side.
HomLaw law_product(const HomLaw& a, const HomLaw& b);
HomLaw law_power(const HomLaw& a, int k);

/// Re-targets a scalar law into a free-algebra target (constant entries).
HomLaw law_to_algebra(const HomLaw& scalar_law, const Alphabet& target);

/// Table-wise coefficient base change; source ring must be ZZ.
HomLaw law_change_ring(const HomLaw& law, const RingHandle& target);

/// Finitely supported sum of homogeneous laws keyed by degree; zero
/// components are never stored.
class PolyLaw {
public:
    PolyLaw(const RingHandle& ring, int rank, bool scalar_target, Alphabet target = {});
    static PolyLaw of(HomLaw component);

    const std::map<int, HomLaw>& components() const { return components_; }
    void add(const HomLaw& component);
    PolyLaw operator+(const PolyLaw& o) const;
    /// Component of the given degree; the zero law when absent.
    HomLaw component(int degree) const;

private:
    RingHandle ring_;
    int rank_;
    bool scalar_target_;
    Alphabet target_;
    std::map<int, HomLaw> components_;

    void check_shape(const HomLaw& h) const;
};

}  // namespace gencliff
