#include "frobvol/poly/ring.hpp"

#include <functional>

#include "frobvol/errors.hpp"
#include "frobvol/poly/monomial.hpp"

namespace frobvol::poly {

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names) {
    auto r = std::make_shared<Ring>();
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw InvalidInput("empty variable name");
        if (!r->index_.emplace(names[i], i).second)
            throw InvalidInput("duplicate variable name '" + names[i] + "'");
    }
    r->names_ = std::move(names);
    return r;
}

std::shared_ptr<const Ring> Ring::edges(const std::string& prefix, uint32_t m, bool antisymmetric) {
    if (m < 2) throw InvalidInput("edge ring needs m >= 2");
    std::vector<std::string> names;
    std::vector<std::pair<uint32_t, uint32_t>> ends;
    for (uint32_t i = 1; i <= m; ++i)
        for (uint32_t j = i + 1; j <= m; ++j) {
            names.push_back(prefix + std::to_string(i) + "_" + std::to_string(j));
            ends.emplace_back(i, j);
        }
    auto base = make(names);
    auto r = std::make_shared<Ring>(*base);
    r->edges_ = EdgeConvention{prefix, m, antisymmetric};
    r->ends_ = std::move(ends);
    return r;
}

std::optional<size_t> Ring::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

size_t Ring::require_index(const std::string& name) const {
    auto i = index(name);
    if (!i) throw InvalidInput("unknown variable '" + name + "'");
    return *i;
}

std::pair<size_t, int> Ring::edge(uint32_t i, uint32_t j) const {
    if (!edges_) throw RingMismatch("ring has no edge variables");
    const uint32_t m = edges_->m;
    if (i == j || i < 1 || j < 1 || i > m || j > m)
        throw InvalidInput("bad edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        if (edges_->antisymmetric) sign = -1;
    }
    // Position of (i,j) in the row-major list of pairs i<j.
    size_t idx = 0;
    for (uint32_t a = 1; a < i; ++a) idx += m - a;
    idx += j - i - 1;
    return {idx, sign};
}

std::pair<uint32_t, uint32_t> Ring::edge_ends(size_t var) const {
    if (!edges_) throw RingMismatch("ring has no edge variables");
    return ends_.at(var);
}

bool Ring::same_edges(const Ring& o) const {
    if (edges_.has_value() != o.edges_.has_value()) return false;
    if (!edges_) return true;
    return edges_->m == o.edges_->m && edges_->antisymmetric == o.edges_->antisymmetric;
}

std::vector<Monomial> monomials_of_degree(size_t nvars, uint32_t d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    std::vector<Exponent> e(nvars, 0);
    // Enumerate compositions of d in descending lex order.
    std::function<void(size_t, uint32_t)> rec = [&](size_t i, uint32_t left) {
        if (i + 1 == nvars) {
            e[i] = Exponent(left);
            out.emplace_back(e);
            return;
        }
        for (int64_t v = left; v >= 0; --v) {
            e[i] = Exponent(v);
            rec(i + 1, left - uint32_t(v));
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

}  // namespace frobvol::poly
