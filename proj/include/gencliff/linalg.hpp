#pragma once

#include <map>
#include <vector>

#include "gencliff/coeffs.hpp"

namespace gencliff {

/// Sparse row over a field, indexed by column.
using SparseRow = std::map<uint32_t, Scalar>;

/// Incremental row-echelon span with exact field arithmetic. Rows are kept
/// monic at their pivot column.
class RowSpan {
public:
    explicit RowSpan(const RingHandle& field);

    /// Reduces the row against the span in place; empty result means the row
    /// was already in the span.
    void reduce(SparseRow& row) const;
    /// Reduces and, when nonzero remains, absorbs the remainder. Returns
    /// true when the rank grew.
    bool insert(SparseRow row);
    bool contains(SparseRow row) const;
    size_t rank() const { return rows_.size(); }

private:
    RingHandle field_;
    std::map<uint32_t, SparseRow> rows_;  // pivot column -> monic row
};

}  // namespace gencliff
