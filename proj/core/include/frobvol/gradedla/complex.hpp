#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobvol/gradedla/grading.hpp"
#include "frobvol/poly/operators.hpp"
#include "frobvol/poly/polynomial.hpp"

namespace frobvol::gradedla {

// R(-a_1) + ... + R(-a_r).
struct FreeModule {
    std::vector<int> shifts;
    size_t rank() const { return shifts.size(); }
    bool operator==(const FreeModule& o) const { return shifts == o.shifts; }
};

template <class C>
struct GradedMatrix {
    FreeModule source;
    FreeModule target;
    // entries[r][c]: row indexes the target basis, column the source basis.
    std::vector<std::vector<poly::Poly<C>>> entries;

    size_t rows() const { return target.rank(); }
    size_t cols() const { return source.rank(); }
    const poly::Poly<C>& operator()(size_t r, size_t c) const { return entries[r][c]; }

    static GradedMatrix zero(const FreeModule& src, const FreeModule& tgt, const poly::Poly<C>& z) {
        GradedMatrix m{src, tgt, {}};
        m.entries.assign(tgt.rank(), std::vector<poly::Poly<C>>(src.rank(), z));
        return m;
    }
    static GradedMatrix identity(const FreeModule& src, const FreeModule& tgt, const poly::Poly<C>& z) {
        GradedMatrix m = zero(src, tgt, z);
        for (size_t i = 0; i < std::min(src.rank(), tgt.rank()); ++i) m.entries[i][i] = z.one();
        return m;
    }
};

template <class C>
struct FreeComplex {
    poly::RingPtr ring;
    const typename C::Field* field = nullptr;
    std::vector<FreeModule> modules;        // F_0 .. F_u
    std::vector<GradedMatrix<C>> d;         // d[i-1] = d_i : F_i -> F_{i-1}

    size_t length() const { return d.size(); }
    poly::Poly<C> zero_poly() const { return poly::Poly<C>(ring, field); }
};

// Level i maps phi^* F_i (shifts times p) to F_i.
template <class C>
struct ChainMap {
    std::vector<GradedMatrix<C>> levels;
};

template <class C>
GradedMatrix<C> multiply(const GradedMatrix<C>& a, const GradedMatrix<C>& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix dimensions do not match");
    poly::Poly<C> z = a.rows() && a.cols() ? a.entries[0][0].zero() : poly::Poly<C>();
    GradedMatrix<C> m{b.source, a.target, {}};
    m.entries.resize(a.rows());
    for (size_t r = 0; r < a.rows(); ++r) {
        m.entries[r].reserve(b.cols());
        for (size_t c = 0; c < b.cols(); ++c) {
            poly::Poly<C> s = a.entries[r][0].zero();
            for (size_t k = 0; k < a.cols(); ++k) {
                if (a.entries[r][k].is_zero() || b.entries[k][c].is_zero()) continue;
                s += a.entries[r][k] * b.entries[k][c];
            }
            m.entries[r].push_back(std::move(s));
        }
    }
    return m;
}

template <class C>
GradedMatrix<C> frobenius_power(const GradedMatrix<C>& m) {
    const int p = int(m.entries.empty() || m.entries[0].empty() ? 0 : m.entries[0][0].field()->characteristic());
    GradedMatrix<C> r = m;
    if (p) {
        for (auto& s : r.source.shifts) s *= p;
        for (auto& s : r.target.shifts) s *= p;
    }
    for (auto& row : r.entries)
        for (auto& e : row) e = poly::frobenius_power(e);
    return r;
}

// Shifts multiplied by p, differentials raised entrywise to the p-th power.
template <class C>
FreeComplex<C> frobenius_twist(const FreeComplex<C>& c) {
    const int p = int(c.field->characteristic());
    FreeComplex<C> t = c;
    for (auto& m : t.modules)
        for (auto& s : m.shifts) s *= p;
    for (auto& d : t.d) {
        for (auto& s : d.source.shifts) s *= p;
        for (auto& s : d.target.shifts) s *= p;
        for (auto& row : d.entries)
            for (auto& e : row) e = poly::frobenius_power(e);
    }
    return t;
}

// Fine degree of every basis element at every level, derived from the
// differentials (F_0 generators keep their coarse shift). nullopt when some
// entry is not homogeneous for the grading or a column is zero.
template <class C>
std::optional<std::vector<std::vector<DegreeKey>>> derive_multishifts(const FreeComplex<C>& cx, const Grading& g) {
    std::vector<std::vector<DegreeKey>> out(cx.modules.size());
    for (int s : cx.modules[0].shifts) {
        DegreeKey k = g.zero_key();
        k[0] = s;
        out[0].push_back(k);
    }
    for (size_t i = 1; i < cx.modules.size(); ++i) {
        const auto& d = cx.d[i - 1];
        for (size_t c = 0; c < d.cols(); ++c) {
            std::optional<DegreeKey> col;
            for (size_t r = 0; r < d.rows(); ++r) {
                const auto& e = d.entries[r][c];
                if (e.is_zero()) continue;
                auto k = g.key_of(e);
                if (!k) return std::nullopt;
                DegreeKey kk = *k + out[i - 1][r];
                if (col && *col != kk) return std::nullopt;
                col = kk;
            }
            if (!col || (*col)[0] != cx.modules[i].shifts[c]) return std::nullopt;
            out[i].push_back(*col);
        }
    }
    return out;
}

}  // namespace frobvol::gradedla
