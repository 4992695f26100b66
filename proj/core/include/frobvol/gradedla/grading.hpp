#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "frobvol/poly/polynomial.hpp"

namespace frobvol::gradedla {

using DegreeKey = std::vector<int64_t>;

DegreeKey operator+(const DegreeKey& a, const DegreeKey& b);
DegreeKey operator-(const DegreeKey& a, const DegreeKey& b);
DegreeKey scale(const DegreeKey& a, int64_t s);

// A Z^r-grading of the polynomial ring given by integer weight vectors.
// Weight 0 is always the all-ones vector, so key[0] is the total degree.
class Grading {
public:
    static Grading standard(size_t nvars);
    // Finest grading (over Q) for which every given polynomial is homogeneous:
    // weights orthogonal to all exponent differences within each polynomial.
    template <class C>
    static Grading fine(size_t nvars, const std::vector<poly::Poly<C>>& gens) {
        std::vector<std::vector<int64_t>> diffs;
        for (const auto& g : gens) {
            if (g.size() < 2) continue;
            const auto& base = g.terms()[0].first;
            for (size_t t = 1; t < g.size(); ++t) {
                std::vector<int64_t> d(nvars);
                for (size_t i = 0; i < nvars; ++i) d[i] = int64_t(g.terms()[t].first[i]) - int64_t(base[i]);
                diffs.push_back(std::move(d));
            }
        }
        return from_relations(nvars, diffs);
    }
    // Weights orthogonal to the given relation vectors.
    static Grading from_relations(size_t nvars, const std::vector<std::vector<int64_t>>& relations);

    size_t nvars() const { return nvars_; }
    size_t rank() const { return weights_.size(); }
    const std::vector<std::vector<int64_t>>& weights() const { return weights_; }
    bool is_standard() const { return weights_.size() == 1; }

    DegreeKey key(const poly::Monomial& m) const;
    DegreeKey zero_key() const { return DegreeKey(weights_.size(), 0); }
    // Key of a polynomial that is homogeneous for this grading, else nullopt.
    template <class C>
    std::optional<DegreeKey> key_of(const poly::Poly<C>& f) const {
        if (f.is_zero()) return std::nullopt;
        DegreeKey k = key(f.terms()[0].first);
        for (size_t t = 1; t < f.size(); ++t)
            if (key(f.terms()[t].first) != k) return std::nullopt;
        return k;
    }
    template <class C>
    bool is_homogeneous(const poly::Poly<C>& f) const {
        if (f.is_zero()) return true;
        return key_of(f).has_value();
    }

    // All monomials of total degree key[0] with the given key (cached).
    const std::vector<poly::Monomial>& monomials(const DegreeKey& k) const;
    // Monomials of total degree d grouped by key.
    const std::map<DegreeKey, std::vector<poly::Monomial>>& monomials_by_key(uint32_t d) const;

private:
    size_t nvars_ = 0;
    std::vector<std::vector<int64_t>> weights_;
    mutable std::map<uint32_t, std::map<DegreeKey, std::vector<poly::Monomial>>> cache_;
};

}  // namespace frobvol::gradedla
