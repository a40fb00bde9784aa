#pragma once

#include <vector>

#include "gencliff/freealg.hpp"

namespace gencliff {

struct DgGenerator {
    std::string name;
    int hdeg = 0;    // homological degree >= 0
    int weight = 1;  // internal weight >= 1, keeps components finite
};

/// Free differential graded algebra on weighted generators over a field.
/// The differential is given on generators, preserves weight, lowers hdeg by
/// one, and squares to zero; all three are checked at construction.
class DgAlgebra {
public:
    DgAlgebra(const RingHandle& ring, std::vector<DgGenerator> generators, std::vector<NcPoly> diffs);

    const RingHandle& ring() const { return ring_; }
    const std::vector<DgGenerator>& generators() const { return gens_; }
    const CtxPtr& context() const { return ctx_; }
    const NcPoly& diff_of(uint32_t index) const { return diffs_.at(index); }

    int word_hdeg(const Letters& w) const;
    int word_weight(const Letters& w) const;
    /// hdeg of a homogeneous polynomial; NotHomogeneous on mixed input,
    /// 0 for the zero polynomial.
    int poly_hdeg(const NcPoly& p) const;

private:
    RingHandle ring_;
    std::vector<DgGenerator> gens_;
    CtxPtr ctx_;
    std::vector<NcPoly> diffs_;
};

DgAlgebra dg_free(const RingHandle& ring, std::vector<DgGenerator> generators, std::vector<NcPoly> diffs);

/// Leibniz extension d(uv) = d(u) v + (-1)^hdeg(u) u d(v); the input must be
/// hdeg-homogeneous.
NcPoly dg_differential(const DgAlgebra& alg, const NcPoly& p);

/// All words of homological degree h and weight w, deglex ascending.
std::vector<Letters> bigraded_basis(const DgAlgebra& alg, int h, int w);

/// dim ker(d: (h,w) -> (h-1,w)) - rank(d: (h+1,w) -> (h,w)) by exact
/// elimination.
long long homology_rank(const DgAlgebra& alg, int h, int w);

/// The dg algebra x (hdeg 0, weight 1), x1 (hdeg 1, weight d) with
/// d x1 = x^d: the derived Clifford algebra of the zero degree-d form on a
/// rank-1 module. Requires d >= 2.
DgAlgebra derived_clifford_zero(int d, const RingHandle& ring);

}  // namespace gencliff
