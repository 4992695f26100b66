#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobvol/poly/polynomial.hpp"

namespace frobvol::poly {

// Variable i maps to sign[i] * variable image[i].
struct SignedPermutation {
    std::vector<uint32_t> image;
    std::vector<int8_t> sign;

    SignedPermutation compose(const SignedPermutation& inner) const;  // this after inner
    bool operator<(const SignedPermutation& o) const {
        return image != o.image ? image < o.image : sign < o.sign;
    }
    bool operator==(const SignedPermutation& o) const { return image == o.image && sign == o.sign; }
};

class GroupAction {
public:
    GroupAction(RingPtr ring, std::vector<SignedPermutation> generators);

    // Generators given as permutations of the vertices 1..m of an edge ring:
    // perm[v-1] = image of v. Signs follow the ring's convention.
    static GroupAction from_vertex_permutations(RingPtr ring, const std::vector<std::vector<uint32_t>>& perms);
    // Generators given as the image name of each variable, in ring order.
    static GroupAction from_variable_images(RingPtr ring, const std::vector<std::vector<std::string>>& images);
    // Cycle notation on vertices, e.g. {{1,2,3,4,5}} or {{2,3},{4,5}}.
    static std::vector<uint32_t> vertex_permutation_from_cycles(uint32_t m,
                                                                const std::vector<std::vector<uint32_t>>& cycles);

    const RingPtr& ring() const { return ring_; }
    const std::vector<SignedPermutation>& generators() const { return gens_; }
    // All group elements (closure under composition).
    const std::vector<SignedPermutation>& elements() const;
    size_t order() const { return elements().size(); }

    template <class C>
    Poly<C> apply(const SignedPermutation& g, const Poly<C>& f) const {
        std::vector<typename Poly<C>::Term> ts;
        ts.reserve(f.size());
        const size_t n = f.nvars();
        std::vector<Exponent> e(n);
        for (const auto& [m, c] : f.terms()) {
            int sign = 1;
            for (size_t i = 0; i < n; ++i) {
                e[g.image[i]] = m[i];
                if (g.sign[i] < 0 && (m[i] & 1)) sign = -sign;
            }
            ts.emplace_back(Monomial(e), sign > 0 ? c : -c);
        }
        return Poly<C>::from_terms(f.ring(), f.field(), std::move(ts));
    }

    // Distinct images of f under the group, by closure under the generators.
    template <class C>
    std::vector<Poly<C>> orbit(const Poly<C>& f) const {
        std::vector<Poly<C>> out{f};
        for (size_t i = 0; i < out.size(); ++i)
            for (const auto& g : gens_) {
                Poly<C> h = apply(g, out[i]);
                bool seen = false;
                for (const auto& x : out)
                    if (x == h) {
                        seen = true;
                        break;
                    }
                if (!seen) out.push_back(std::move(h));
            }
        return out;
    }

    template <class C>
    Poly<C> orbit_sum(const Poly<C>& f) const {
        Poly<C> s = f.zero();
        for (const auto& x : orbit(f)) s += x;
        return s;
    }

    template <class C>
    size_t orbit_size(const Poly<C>& f) const {
        return orbit(f).size();
    }

    template <class C>
    size_t stabilizer_order(const Poly<C>& f) const {
        return order() / orbit_size(f);
    }

private:
    RingPtr ring_;
    std::vector<SignedPermutation> gens_;
    mutable std::vector<SignedPermutation> elements_;
};

}  // namespace frobvol::poly
