#include "frobvol/pfaffcomb/multigraph.hpp"

#include <algorithm>
#include <functional>

#include "frobvol/errors.hpp"

namespace frobvol::pfaffcomb {

size_t WeightFunction::edge_index(uint32_t m, uint32_t i, uint32_t j) {
    if (i > j) std::swap(i, j);
    if (i == j || i < 1 || j > m) throw InvalidInput("bad edge");
    size_t idx = 0;
    for (uint32_t a = 1; a < i; ++a) idx += m - a;
    return idx + (j - i - 1);
}

uint32_t WeightFunction::degree(uint32_t v) const {
    uint32_t d = 0;
    for (uint32_t u = 1; u <= m; ++u)
        if (u != v) d += at(u, v);
    return d;
}

namespace {

// Perfect matchings of the given vertex list, adding `mult` to w.
void matchings_of(std::vector<uint32_t>& free, WeightFunction& w, uint16_t mult,
                  const std::function<void()>& emit) {
    if (free.empty()) {
        emit();
        return;
    }
    uint32_t a = free[0];
    for (size_t k = 1; k < free.size(); ++k) {
        uint32_t b = free[k];
        std::vector<uint32_t> rest;
        for (size_t t = 1; t < free.size(); ++t)
            if (t != k) rest.push_back(free[t]);
        size_t e = WeightFunction::edge_index(w.m, a, b);
        w.w[e] += mult;
        matchings_of(rest, w, mult, emit);
        w.w[e] -= mult;
    }
}

}  // namespace

std::vector<WeightFunction> enumerate_matchings(uint32_t m, uint32_t excluded) {
    if (m % 2 == 0) throw InvalidInput("matchings are enumerated for odd m");
    std::vector<uint32_t> free;
    for (uint32_t v = 1; v <= m; ++v)
        if (v != excluded) free.push_back(v);
    WeightFunction w{m, std::vector<uint16_t>(m * (m - 1) / 2, 0)};
    std::vector<WeightFunction> out;
    matchings_of(free, w, 1, [&] { out.push_back(w); });
    return out;
}

std::vector<WeightFunction> enumerate_oc(uint32_t m) {
    if (m % 2 == 0) throw InvalidInput("odd-cycle covers are enumerated for odd m");
    std::vector<WeightFunction> out;
    WeightFunction w{m, std::vector<uint16_t>(m * (m - 1) / 2, 0)};
    // Cycle vertex sets of odd size, then cycles on them with the smallest
    // vertex first and second vertex smaller than the last, then doubled
    // matchings on the remainder.
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        const int len = __builtin_popcount(mask);
        if (len < 3 || len % 2 == 0) continue;
        std::vector<uint32_t> cyc, rest;
        for (uint32_t v = 1; v <= m; ++v) (mask >> (v - 1) & 1 ? cyc : rest).push_back(v);
        std::vector<uint32_t> tail(cyc.begin() + 1, cyc.end());
        do {
            if (tail.front() > tail.back()) continue;
            std::vector<size_t> es;
            uint32_t prev = cyc[0];
            for (uint32_t v : tail) {
                es.push_back(WeightFunction::edge_index(m, prev, v));
                prev = v;
            }
            es.push_back(WeightFunction::edge_index(m, prev, cyc[0]));
            for (size_t e : es) ++w.w[e];
            matchings_of(rest, w, 2, [&] { out.push_back(w); });
            for (size_t e : es) --w.w[e];
        } while (std::next_permutation(tail.begin(), tail.end()));
    }
    return out;
}

poly::Poly<coeff::GF> generating_function(const std::vector<WeightFunction>& T, const poly::RingPtr& ring,
                                          const coeff::FiniteField* field) {
    std::vector<poly::Poly<coeff::GF>::Term> ts;
    ts.reserve(T.size());
    for (const auto& w : T) {
        if (w.w.size() != ring->nvars()) throw RingMismatch("weight function does not match the ring");
        std::vector<poly::Exponent> e(w.w.begin(), w.w.end());
        ts.emplace_back(poly::Monomial(e), field->one());
    }
    return poly::Poly<coeff::GF>::from_terms(ring, field, std::move(ts));
}

std::vector<std::vector<uint32_t>> Graph::adjacency() const {
    std::vector<std::vector<uint32_t>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

bool Graph::is_cubic() const {
    for (const auto& a : adjacency())
        if (a.size() != 3) return false;
    return true;
}

Graph complete_graph(uint32_t n) {
    Graph g{n, {}};
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

Graph petersen_graph() {
    Graph g{10, {}};
    for (uint32_t i = 0; i < 5; ++i) {
        g.edges.emplace_back(i, (i + 1) % 5);
        g.edges.emplace_back(i, i + 5);
        g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph complete_bipartite(uint32_t a, uint32_t b) {
    Graph g{a + b, {}};
    for (uint32_t i = 0; i < a; ++i)
        for (uint32_t j = 0; j < b; ++j) g.edges.emplace_back(i, a + j);
    return g;
}

uint64_t hamiltonian_parity(const Graph& g, std::pair<uint32_t, uint32_t> e) {
    if (!g.is_cubic()) throw InvalidInput("graph is not cubic");
    auto adj = g.adjacency();
    auto [s, t] = e;
    if (s >= g.n || t >= g.n || std::find(adj[s].begin(), adj[s].end(), t) == adj[s].end())
        throw InvalidInput("edge is not in the graph");
    // Paths s -> t -> ... -> back to s covering every vertex; each cycle
    // through e is traversed once in this orientation.
    std::vector<char> used(g.n, 0);
    used[s] = used[t] = 1;
    uint64_t count = 0;
    std::function<void(uint32_t, uint32_t)> dfs = [&](uint32_t v, uint32_t depth) {
        if (depth == g.n) {
            if (std::find(adj[v].begin(), adj[v].end(), s) != adj[v].end()) ++count;
            return;
        }
        for (uint32_t x : adj[v])
            if (!used[x]) {
                used[x] = 1;
                dfs(x, depth + 1);
                used[x] = 0;
            }
    };
    if (g.n == 2) return 0;
    dfs(t, 2);
    return count;
}

std::vector<Graph> all_cubic_graphs(uint32_t n) {
    if (n % 2) throw InvalidInput("cubic graphs need an even vertex count");
    std::vector<Graph> out;
    std::vector<uint32_t> deg(n, 0);
    Graph g{n, {}};
    std::function<void(uint32_t)> rec = [&](uint32_t v) {
        if (v == n) {
            out.push_back(g);
            return;
        }
        if (deg[v] == 3) {
            rec(v + 1);
            return;
        }
        const uint32_t need = 3 - deg[v];
        std::vector<uint32_t> cand;
        for (uint32_t u = v + 1; u < n; ++u)
            if (deg[u] < 3) cand.push_back(u);
        if (cand.size() < need) return;
        std::vector<char> pick(cand.size(), 0);
        std::fill(pick.begin(), pick.begin() + need, 1);
        do {
            std::vector<uint32_t> chosen;
            for (size_t k = 0; k < cand.size(); ++k)
                if (pick[k]) chosen.push_back(cand[k]);
            for (uint32_t u : chosen) {
                g.edges.emplace_back(v, u);
                ++deg[u];
            }
            deg[v] = 3;
            rec(v + 1);
            deg[v] = 3 - need;
            for (uint32_t u : chosen) {
                g.edges.pop_back();
                --deg[u];
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    };
    rec(0);
    return out;
}

}  // namespace frobvol::pfaffcomb
