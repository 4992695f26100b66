#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "frobvol/coeff/finite_field.hpp"
#include "frobvol/errors.hpp"
#include "frobvol/gradedla/complex.hpp"
#include "frobvol/gradedla/report.hpp"
#include "frobvol/poly/polynomial.hpp"

namespace frobvol::pfaffcomb {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Pfaffian by cofactor expansion along the first remaining row, memoized on
// the subset of remaining indices. Size at most 32.
template <class T>
T pfaffian(const Matrix<T>& M, const T& one) {
    const size_t n = M.size();
    if (n % 2) throw InvalidMatrix("Pfaffian of an odd-sized matrix");
    if (n > 32) throw InvalidMatrix("Pfaffian size limit is 32");
    for (size_t i = 0; i < n; ++i) {
        if (M[i].size() != n) throw InvalidMatrix("matrix is not square");
        if (!M[i][i].is_zero()) throw InvalidMatrix("nonzero diagonal entry " + std::to_string(i));
        for (size_t j = i + 1; j < n; ++j)
            if (!(M[i][j] + M[j][i]).is_zero())
                throw InvalidMatrix("entries (" + std::to_string(i) + "," + std::to_string(j) + ") are not skew");
    }
    if (n == 0) return one;
    std::unordered_map<uint32_t, T> memo;
    auto rec = [&](auto&& self, uint32_t set) -> T {
        if (set == 0) return one;
        if (auto it = memo.find(set); it != memo.end()) return it->second;
        const uint32_t first = uint32_t(__builtin_ctz(set));
        const uint32_t rest = set & ~(1u << first);
        T acc = M[first][first];  // zero
        int pos = 0;
        for (uint32_t j = first + 1; j < n; ++j) {
            if (!(rest >> j & 1)) continue;
            if (!M[first][j].is_zero()) {
                T t = M[first][j] * self(self, rest & ~(1u << j));
                if (pos % 2)
                    acc = acc - t;
                else
                    acc = acc + t;
            }
            ++pos;
        }
        memo.emplace(set, acc);
        return acc;
    };
    return rec(rec, n == 32 ? 0xFFFFFFFFu : (1u << n) - 1);
}

using PolyGF = poly::Poly<coeff::GF>;

// Generic alternating matrix with (i,j) entry z_{i,j} under the ring's edge
// convention.
Matrix<PolyGF> generic_alternating(const poly::RingPtr& ring, const coeff::FiniteField* field);

// Signed submaximal Pfaffians P_1..P_m of the generic alternating matrix;
// P_i = (-1)^{i+1} Pf(A with row and column i deleted), so that A P = 0.
std::vector<PolyGF> submax_pfaffians(const poly::RingPtr& ring, const coeff::FiniteField* field);

// 0 -> R(-m) -> R(-(m+1)/2)^m -> R(-(m-1)/2)^m -> R with maps P, A, P^t.
gradedla::FreeComplex<coeff::GF> buchsbaum_eisenbud(const poly::RingPtr& ring, const coeff::FiniteField* field);

// sum_{i<j} z_{ij} P_i P_j.
PolyGF pfaffian_core(const std::vector<PolyGF>& P);

// Phi_0 = id, Phi_1 = diag(P_i), (Phi_2)_{ij} = D_j(P_i), Phi_3 = H_0 for
// the complex returned by buchsbaum_eisenbud in characteristic 2.
gradedla::ChainMap<coeff::GF> explicit_phi_char2(const gradedla::FreeComplex<coeff::GF>& cx);

// P_i z_{ik}^2 = sum_{j != i} z_{ij} D_k(P_j) for all i, k.
gradedla::CheckReport check_middle_square(const poly::RingPtr& ring, const std::vector<PolyGF>& P);
// sum_j D_j(P_i) P_j^2 = P_i H_0 for all i.
gradedla::CheckReport check_left_square(const std::vector<PolyGF>& P, const PolyGF& H0);
// sum_j z_{ij} P_j = 0 for all i.
gradedla::CheckReport check_pfaffian_syzygy(const poly::RingPtr& ring, const std::vector<PolyGF>& P);

}  // namespace frobvol::pfaffcomb
