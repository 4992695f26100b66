#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "frobvol/artinian/algebra.hpp"
#include "frobvol/artinian/parseval.hpp"
#include "frobvol/gradedla/linalg.hpp"

namespace frobvol::artinian {

struct LefschetzLevel {
    int i = 0;  // multiplication by ell^{s-2i}: A^i -> A^{s-i}
    size_t source_dim = 0;
    size_t target_dim = 0;
    size_t rank = 0;
    bool full() const { return rank == std::min(source_dim, target_dim); }
};

// Ranks of ell^{s-2i} for 0 <= i <= s/2; `ell` is a linear form of the ambient ring.
template <class C>
std::vector<LefschetzLevel> lefschetz_ranks(const ArtinianAlgebra<C>& A, const poly::Poly<C>& ell) {
    const int s = A.top_degree();
    const auto l = A.to_reduced(ell);
    std::vector<LefschetzLevel> out;
    for (int i = 0; 2 * i <= s; ++i) {
        LefschetzLevel lv;
        lv.i = i;
        lv.source_dim = A.dim(i);
        lv.target_dim = A.dim(s - i);
        const auto power = l.pow(uint32_t(s - 2 * i));
        std::vector<gradedla::SparseVec<C>> rows;
        for (const auto& b : A.basis(i)) {
            gradedla::SparseVec<C> v;
            const auto image = power * b;
            if (!image.is_zero()) {
                auto c = A.coordinates_reduced(image, s - i);
                for (uint32_t k = 0; k < c.size(); ++k)
                    if (!c[k].is_zero()) v.emplace_back(k, c[k]);
            }
            rows.push_back(std::move(v));
        }
        if constexpr (std::is_same_v<C, coeff::GF>) {
            lv.rank = gradedla::rank_of(rows, uint32_t(lv.target_dim), A.field()->zero());
        } else {
            gradedla::RowSpace<C> rs(uint32_t(lv.target_dim), A.field());
            for (const auto& r : rows)
                if (!r.empty()) rs.add_row(r);
            rs.finalize();
            lv.rank = rs.rank();
        }
        out.push_back(lv);
    }
    return out;
}

struct LefschetzTrial {
    uint64_t seed = 0;
    size_t redraws = 0;
    std::vector<size_t> hilbert;
    std::vector<LefschetzLevel> levels;
};

struct LefschetzReport {
    // CERTIFIED when every level reached full rank in some trial.
    std::string verdict;
    std::vector<bool> certified;  // per level
    std::vector<LefschetzTrial> trials;
};

struct LefschetzOptions {
    size_t nparams = 0;
    size_t trials = 1;
    uint64_t seed = 1;
    uint32_t ext_degree = 16;
    int degree_bound = 24;
};

LefschetzReport lefschetz_check(const pfaffcomb::Instance& inst, const LefschetzOptions& opt);
// Verdict for explicitly computed levels.
LefschetzReport lefschetz_report(std::vector<LefschetzTrial> trials);

// Vol(mu ell^k w^2) for each standard monomial mu of degree s - 2i - k; all
// inputs are in the reduced ring and w has degree i.
template <class C>
std::vector<C> quadratic_values(const ArtinianAlgebra<C>& A, const VolumeFunctional<C>& V, const poly::Poly<C>& ell,
                                uint32_t k, const poly::Poly<C>& w) {
    const int s = A.top_degree();
    const int i = w.is_zero() ? 0 : w.degree();
    const auto core = ell.pow(k) * w * w;
    std::vector<C> out;
    for (const auto& mu : A.basis(s - 2 * i - int(k))) {
        const auto x = mu * core;
        out.push_back(x.is_zero() ? A.field()->zero() : V.eval_reduced(x));
    }
    return out;
}

// f = sum over eps in {0,1}^r of t^eps f_eps^2, entry `eps` read as a bit mask.
std::vector<coeff::Frac> square_decomposition(const coeff::Frac& f);
// The same parts evaluated at a point of a finite field of characteristic 2.
std::vector<coeff::GF> square_decomposition_at(const coeff::Frac& f, const std::vector<coeff::GF>& point);

struct AnisotropyOptions {
    size_t nparams = 0;
    uint32_t i = 1;
    uint32_t k = 0;
    uint32_t r = 3;
    uint64_t seed = 1;
    uint32_t max_exponent = 3;
    int degree_bound = 24;
};

struct AnisotropyReport {
    std::string label;  // EVIDENCE when full row rank, else NO-EVIDENCE
    bool full_rank = false;
    size_t rank = 0;
    size_t rows = 0;  // dim A^i
    size_t cols = 0;  // complements times 2^r
    std::vector<size_t> hilbert;
    size_t redraws = 0;
    std::vector<std::string> plan;    // theta -> monomial in t
    std::vector<std::string> values;  // q(w_j) per complement
};

// Over F_2(t_1..t_r) after a random monomial specialization of every
// coefficient of the parameter forms and of ell.
AnisotropyReport anisotropy_semilinear_check(const pfaffcomb::Instance& inst, const AnisotropyOptions& opt);

}  // namespace frobvol::artinian
