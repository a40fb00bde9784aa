#include "gencliff/linalg.hpp"

namespace gencliff {

RowSpan::RowSpan(const RingHandle& field) : field_(field)
{
    if (!field.is_field())
        fail(Errc::NotAField, "linear algebra requires field coefficients");
}

void RowSpan::reduce(SparseRow& row) const
{
    while (!row.empty()) {
        uint32_t pivot = row.begin()->first;
        auto it = rows_.find(pivot);
        if (it == rows_.end())
            return;
        Scalar c = row.begin()->second;
        for (const auto& [col, v] : it->second) {
            Scalar delta = c * v;
            auto slot = row.find(col);
            if (slot == row.end())
                row.emplace(col, -delta);
            else {
                slot->second -= delta;
                if (slot->second.is_zero())
                    row.erase(slot);
            }
        }
    }
}

bool RowSpan::insert(SparseRow row)
{
    reduce(row);
    if (row.empty())
        return false;
    Scalar lead_inv = row.begin()->second.inv();
    for (auto& [col, v] : row)
        v *= lead_inv;
    uint32_t pivot = row.begin()->first;
    rows_.emplace(pivot, std::move(row));
    return true;
}

bool RowSpan::contains(SparseRow row) const
{
    reduce(row);
    return row.empty();
}

}  // namespace gencliff
