#pragma once

#include <vector>

#include "frobvol/coeff/fraction.hpp"
#include "frobvol/gradedla/linalg.hpp"

namespace frobvol::gradedla {

// Fraction-free Gauss-Jordan elimination (Bareiss) over a rational function
// field. Rows are cleared of denominators, eliminated with exact polynomial
// division, and end in reduced echelon form with every pivot equal to the
// same polynomial delta().
class FractionFreeEchelon {
public:
    using P = poly::Poly<coeff::GF>;

    FractionFreeEchelon(uint32_t ncols, const coeff::FracField& field) : ncols_(ncols), field_(&field) {}

    void add_row(const SparseVec<coeff::Frac>& v);
    void finalize();

    uint32_t ncols() const { return ncols_; }
    size_t rank() const { return pivots_.size(); }
    bool is_pivot(uint32_t col) const;
    const P& delta() const { return delta_; }
    const std::vector<uint32_t>& pivot_columns() const { return pivots_; }
    // Row i of the final matrix (pivot entry delta at pivot_columns()[i]).
    const std::vector<P>& row(size_t i) const { return rows_[i]; }

    // Residual of v modulo the row space, supported on non-pivot columns.
    SparseVec<coeff::Frac> reduce(const SparseVec<coeff::Frac>& v) const;

private:
    uint32_t ncols_;
    const coeff::FracField* field_;
    std::vector<std::vector<P>> rows_;
    std::vector<uint32_t> pivots_;
    std::vector<int32_t> pivot_of_col_;
    P delta_;
    bool finalized_ = false;
};

}  // namespace frobvol::gradedla
