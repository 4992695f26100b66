#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "frobvol/errors.hpp"

namespace frobvol::gradedla {

// Sparse vector: (column, value) pairs sorted by column, values nonzero.
template <class C>
using SparseVec = std::vector<std::pair<uint32_t, C>>;

// Incremental row echelon form over a field. Rows are stored with pivot
// coefficient 1 at their first column; reduction leaves a residual supported
// on non-pivot columns, so it doubles as a normal-form projector.
template <class C>
class Echelon {
public:
    Echelon(uint32_t ncols, C zero) : ncols_(ncols), zero_(zero), pivot_row_(ncols, -1) {}

    uint32_t ncols() const { return ncols_; }
    size_t rank() const { return rows_.size(); }
    bool is_pivot(uint32_t col) const { return pivot_row_[col] >= 0; }
    const std::vector<SparseVec<C>>& rows() const { return rows_; }

    SparseVec<C> reduce(const SparseVec<C>& v) const {
        prepare();
        SparseVec<C> out;
        std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<uint32_t>> heap;
        for (const auto& [i, c] : v) {
            if (!mark_[i]) {
                mark_[i] = 1;
                work_[i] = c;
                heap.push(i);
            } else {
                work_[i] += c;
            }
        }
        while (!heap.empty()) {
            uint32_t col = heap.top();
            heap.pop();
            mark_[col] = 0;
            C val = work_[col];
            work_[col] = zero_;
            if (val.is_zero()) continue;
            int32_t r = pivot_row_[col];
            if (r < 0) {
                out.emplace_back(col, val);
                continue;
            }
            const auto& row = rows_[size_t(r)];
            for (size_t k = 1; k < row.size(); ++k) {
                uint32_t j = row[k].first;
                if (!mark_[j]) {
                    mark_[j] = 1;
                    work_[j] = -(val * row[k].second);
                    heap.push(j);
                } else {
                    work_[j] -= val * row[k].second;
                }
            }
        }
        return out;
    }

    // Adds v to the row space; returns true when v was independent.
    bool insert(const SparseVec<C>& v) {
        SparseVec<C> r = reduce(v);
        if (r.empty()) return false;
        C inv = r[0].second.inv();
        for (auto& e : r) e.second = e.second * inv;
        pivot_row_[r[0].first] = int32_t(rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    // Solution of the system whose rows were inserted with the right-hand side
    // stored in column `rhs_col` (the last column). Free unknowns take the
    // values given by `free_value` (zero by default). nullopt if inconsistent.
    std::optional<std::vector<C>> back_substitute(uint32_t rhs_col,
                                                  const std::vector<std::optional<C>>* free_values = nullptr) const {
        if (rhs_col < ncols_ && is_pivot(rhs_col)) return std::nullopt;
        std::vector<C> x(rhs_col, zero_);
        if (free_values)
            for (uint32_t j = 0; j < rhs_col; ++j)
                if (!is_pivot(j) && (*free_values)[j]) x[j] = *(*free_values)[j];
        for (uint32_t col = rhs_col; col-- > 0;) {
            int32_t r = pivot_row_[col];
            if (r < 0) continue;
            C s = zero_;
            for (const auto& [j, a] : rows_[size_t(r)]) {
                if (j == col) continue;
                if (j == rhs_col)
                    s += a;
                else
                    s -= a * x[j];
            }
            x[col] = s;
        }
        return x;
    }

    // Basis of the solution space of the homogeneous system in the first
    // `nunknowns` columns (rows are the equations).
    std::vector<std::vector<C>> kernel(uint32_t nunknowns) const {
        std::vector<std::vector<C>> out;
        for (uint32_t f = 0; f < nunknowns; ++f) {
            if (is_pivot(f)) continue;
            std::vector<std::optional<C>> fv(nunknowns);
            fv[f] = C(zero_).one_like();
            auto x = back_substitute_homogeneous(nunknowns, fv);
            out.push_back(std::move(x));
        }
        return out;
    }

private:
    std::vector<C> back_substitute_homogeneous(uint32_t n, const std::vector<std::optional<C>>& fv) const {
        std::vector<C> x(n, zero_);
        for (uint32_t j = 0; j < n; ++j)
            if (!is_pivot(j) && fv[j]) x[j] = *fv[j];
        for (uint32_t col = n; col-- > 0;) {
            int32_t r = pivot_row_[col];
            if (r < 0) continue;
            C s = zero_;
            for (const auto& [j, a] : rows_[size_t(r)])
                if (j != col && j < n) s -= a * x[j];
            x[col] = s;
        }
        return x;
    }

    void prepare() const {
        if (work_.size() != ncols_) {
            work_.assign(ncols_, zero_);
            mark_.assign(ncols_, 0);
        }
    }

    uint32_t ncols_;
    C zero_;
    std::vector<int32_t> pivot_row_;
    std::vector<SparseVec<C>> rows_;
    mutable std::vector<C> work_;
    mutable std::vector<char> mark_;
};

template <class C>
size_t rank_of(const std::vector<SparseVec<C>>& rows, uint32_t ncols, const C& zero) {
    Echelon<C> e(ncols, zero);
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

}  // namespace frobvol::gradedla
