#include "frobvol/poly/group_action.hpp"

#include <set>

namespace frobvol::poly {

SignedPermutation SignedPermutation::compose(const SignedPermutation& inner) const {
    SignedPermutation r;
    const size_t n = image.size();
    r.image.resize(n);
    r.sign.resize(n);
    for (size_t i = 0; i < n; ++i) {
        r.image[i] = image[inner.image[i]];
        r.sign[i] = int8_t(inner.sign[i] * sign[inner.image[i]]);
    }
    return r;
}

GroupAction::GroupAction(RingPtr ring, std::vector<SignedPermutation> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
    const size_t n = ring_->nvars();
    for (const auto& g : gens_) {
        if (g.image.size() != n || g.sign.size() != n) throw InvalidInput("generator length mismatch");
        std::vector<bool> hit(n, false);
        for (auto i : g.image) {
            if (i >= n || hit[i]) throw InvalidInput("generator is not a bijection of variables");
            hit[i] = true;
        }
    }
}

GroupAction GroupAction::from_vertex_permutations(RingPtr ring, const std::vector<std::vector<uint32_t>>& perms) {
    if (!ring->has_edges()) throw RingMismatch("vertex permutations need edge variables");
    const uint32_t m = ring->edge_convention()->m;
    std::vector<SignedPermutation> gens;
    for (const auto& perm : perms) {
        if (perm.size() != m) throw InvalidInput("vertex permutation has wrong length");
        SignedPermutation g;
        g.image.resize(ring->nvars());
        g.sign.resize(ring->nvars());
        for (size_t v = 0; v < ring->nvars(); ++v) {
            auto [i, j] = ring->edge_ends(v);
            auto [w, s] = ring->edge(perm[i - 1], perm[j - 1]);
            g.image[v] = uint32_t(w);
            g.sign[v] = int8_t(s);
        }
        gens.push_back(std::move(g));
    }
    return GroupAction(std::move(ring), std::move(gens));
}

GroupAction GroupAction::from_variable_images(RingPtr ring, const std::vector<std::vector<std::string>>& images) {
    std::vector<SignedPermutation> gens;
    for (const auto& im : images) {
        if (im.size() != ring->nvars()) throw InvalidInput("variable image list has wrong length");
        SignedPermutation g;
        for (const auto& name : im) {
            bool neg = !name.empty() && name[0] == '-';
            g.image.push_back(uint32_t(ring->require_index(neg ? name.substr(1) : name)));
            g.sign.push_back(neg ? -1 : 1);
        }
        gens.push_back(std::move(g));
    }
    return GroupAction(std::move(ring), std::move(gens));
}

std::vector<uint32_t> GroupAction::vertex_permutation_from_cycles(uint32_t m,
                                                                 const std::vector<std::vector<uint32_t>>& cycles) {
    std::vector<uint32_t> perm(m);
    for (uint32_t v = 0; v < m; ++v) perm[v] = v + 1;
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 1 || c[i] > m) throw InvalidInput("cycle entry out of range");
            perm[c[i] - 1] = c[(i + 1) % c.size()];
        }
    return perm;
}

const std::vector<SignedPermutation>& GroupAction::elements() const {
    if (!elements_.empty()) return elements_;
    SignedPermutation id;
    const size_t n = ring_->nvars();
    for (size_t i = 0; i < n; ++i) {
        id.image.push_back(uint32_t(i));
        id.sign.push_back(1);
    }
    std::set<SignedPermutation> seen{id};
    std::vector<SignedPermutation> out{id};
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens_) {
            SignedPermutation h = g.compose(out[i]);
            if (seen.insert(h).second) out.push_back(std::move(h));
        }
    elements_ = std::move(out);
    return elements_;
}

}  // namespace frobvol::poly
