#include "frobvol/pfaffcomb/pfaffian.hpp"

#include "frobvol/poly/operators.hpp"
#include "frobvol/poly/text.hpp"

namespace frobvol::pfaffcomb {

using coeff::FiniteField;
using coeff::GF;
using gradedla::CheckReport;
using gradedla::FreeComplex;
using gradedla::FreeModule;
using gradedla::GradedMatrix;

namespace {

uint32_t edge_size(const poly::RingPtr& ring) {
    if (!ring->has_edges()) throw RingMismatch("ring has no edge variables");
    return ring->edge_convention()->m;
}

PolyGF z(const poly::RingPtr& ring, const FiniteField* field, uint32_t i, uint32_t j) {
    auto [idx, sign] = ring->edge(i, j);
    auto v = PolyGF::variable(ring, field, idx);
    return sign < 0 ? -v : v;
}

}  // namespace

Matrix<PolyGF> generic_alternating(const poly::RingPtr& ring, const FiniteField* field) {
    const uint32_t m = edge_size(ring);
    PolyGF zero(ring, field);
    Matrix<PolyGF> A(m, std::vector<PolyGF>(m, zero));
    for (uint32_t i = 1; i <= m; ++i)
        for (uint32_t j = 1; j <= m; ++j)
            if (i != j) A[i - 1][j - 1] = z(ring, field, i, j);
    return A;
}

std::vector<PolyGF> submax_pfaffians(const poly::RingPtr& ring, const FiniteField* field) {
    const uint32_t m = edge_size(ring);
    if (m % 2 == 0 || m < 3) throw InvalidInput("submaximal Pfaffians need odd m >= 3");
    auto A = generic_alternating(ring, field);
    const PolyGF one = PolyGF(ring, field).one();
    std::vector<PolyGF> P;
    for (uint32_t i = 0; i < m; ++i) {
        Matrix<PolyGF> minor;
        for (uint32_t r = 0; r < m; ++r) {
            if (r == i) continue;
            std::vector<PolyGF> row;
            for (uint32_t c = 0; c < m; ++c)
                if (c != i) row.push_back(A[r][c]);
            minor.push_back(std::move(row));
        }
        PolyGF pf = pfaffian(minor, one);
        P.push_back(i % 2 ? -pf : pf);
    }
    return P;
}

FreeComplex<GF> buchsbaum_eisenbud(const poly::RingPtr& ring, const FiniteField* field) {
    const uint32_t m = edge_size(ring);
    auto P = submax_pfaffians(ring, field);
    auto A = generic_alternating(ring, field);
    const int a = int(m - 1) / 2;
    FreeComplex<GF> cx;
    cx.ring = ring;
    cx.field = field;
    cx.modules = {FreeModule{{0}}, FreeModule{std::vector<int>(m, a)}, FreeModule{std::vector<int>(m, a + 1)},
                  FreeModule{{int(m)}}};
    GradedMatrix<GF> d1{cx.modules[1], cx.modules[0], {P}};
    GradedMatrix<GF> d2{cx.modules[2], cx.modules[1], A};
    GradedMatrix<GF> d3{cx.modules[3], cx.modules[2], {}};
    for (const auto& p : P) d3.entries.push_back({p});
    cx.d = {std::move(d1), std::move(d2), std::move(d3)};
    return cx;
}

PolyGF pfaffian_core(const std::vector<PolyGF>& P) {
    const auto& ring = P.at(0).ring();
    const auto* field = P[0].field();
    PolyGF h(ring, field);
    for (uint32_t i = 0; i < P.size(); ++i)
        for (uint32_t j = i + 1; j < P.size(); ++j) h += z(ring, field, i + 1, j + 1) * P[i] * P[j];
    return h;
}

gradedla::ChainMap<GF> explicit_phi_char2(const FreeComplex<GF>& cx) {
    if (cx.field->characteristic() != 2) throw InvalidInput("the explicit chain map is for characteristic 2");
    if (cx.length() != 3) throw InvalidInput("expected a length-3 complex");
    const auto& P = cx.d[0].entries[0];
    const size_t m = P.size();
    const PolyGF zero = cx.zero_poly();
    auto scaled = [](FreeModule f) {
        for (auto& s : f.shifts) s *= 2;
        return f;
    };
    gradedla::ChainMap<GF> phi;
    phi.levels.push_back(GradedMatrix<GF>::identity(scaled(cx.modules[0]), cx.modules[0], zero));
    auto l1 = GradedMatrix<GF>::zero(scaled(cx.modules[1]), cx.modules[1], zero);
    for (size_t i = 0; i < m; ++i) l1.entries[i][i] = P[i];
    phi.levels.push_back(std::move(l1));
    auto l2 = GradedMatrix<GF>::zero(scaled(cx.modules[2]), cx.modules[2], zero);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) l2.entries[i][j] = poly::dk_operator(P[i], uint32_t(j + 1));
    phi.levels.push_back(std::move(l2));
    auto l3 = GradedMatrix<GF>::zero(scaled(cx.modules[3]), cx.modules[3], zero);
    l3.entries[0][0] = pfaffian_core(P);
    phi.levels.push_back(std::move(l3));
    return phi;
}

CheckReport check_middle_square(const poly::RingPtr& ring, const std::vector<PolyGF>& P) {
    CheckReport rep;
    const uint32_t m = uint32_t(P.size());
    const auto* field = P.at(0).field();
    std::vector<std::vector<PolyGF>> D(m);
    for (uint32_t j = 0; j < m; ++j)
        for (uint32_t k = 1; k <= m; ++k) D[j].push_back(poly::dk_operator(P[j], k));
    for (uint32_t i = 1; i <= m; ++i)
        for (uint32_t k = 1; k <= m; ++k) {
            PolyGF lhs(ring, field), rhs(ring, field);
            if (i != k) lhs = P[i - 1] * z(ring, field, i, k).pow(2);
            for (uint32_t j = 1; j <= m; ++j)
                if (j != i) rhs += z(ring, field, i, j) * D[j - 1][k - 1];
            if (!(lhs - rhs).is_zero())
                rep.fail("middle square (i,k)=(" + std::to_string(i) + "," + std::to_string(k) +
                         "): difference " + poly::to_string(lhs - rhs));
        }
    return rep;
}

CheckReport check_left_square(const std::vector<PolyGF>& P, const PolyGF& H0) {
    CheckReport rep;
    const uint32_t m = uint32_t(P.size());
    std::vector<PolyGF> sq;
    for (const auto& p : P) sq.push_back(poly::frobenius_power(p));
    for (uint32_t i = 0; i < m; ++i) {
        PolyGF lhs = P[i].zero();
        for (uint32_t j = 0; j < m; ++j) lhs += poly::dk_operator(P[i], j + 1) * sq[j];
        PolyGF diff = lhs - P[i] * H0;
        if (!diff.is_zero())
            rep.fail("left square i=" + std::to_string(i + 1) + ": difference " + poly::to_string(diff));
    }
    return rep;
}

CheckReport check_pfaffian_syzygy(const poly::RingPtr& ring, const std::vector<PolyGF>& P) {
    CheckReport rep;
    const uint32_t m = uint32_t(P.size());
    const auto* field = P.at(0).field();
    for (uint32_t i = 1; i <= m; ++i) {
        PolyGF s(ring, field);
        for (uint32_t j = 1; j <= m; ++j)
            if (j != i) s += z(ring, field, i, j) * P[j - 1];
        if (!s.is_zero()) rep.fail("row " + std::to_string(i) + ": sum_j z_ij P_j = " + poly::to_string(s));
    }
    return rep;
}

}  // namespace frobvol::pfaffcomb
