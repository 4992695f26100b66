#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frobvol/coeff/finite_field.hpp"
#include "frobvol/poly/polynomial.hpp"

namespace frobvol::pfaffcomb {

// Edge weights w: E(K_m) -> Z_{>=0}, edges in the order (1,2),(1,3),...,(m-1,m),
// which is the variable order of an edge ring.
struct WeightFunction {
    uint32_t m = 0;
    std::vector<uint16_t> w;

    static size_t edge_index(uint32_t m, uint32_t i, uint32_t j);  // 1-based, i != j
    uint16_t at(uint32_t i, uint32_t j) const { return w[edge_index(m, i, j)]; }
    uint32_t degree(uint32_t v) const;
    bool operator==(const WeightFunction& o) const { return m == o.m && w == o.w; }
    bool operator<(const WeightFunction& o) const { return w < o.w; }
};

// Perfect matchings of [m] \ {excluded} (1-based vertex).
std::vector<WeightFunction> enumerate_matchings(uint32_t m, uint32_t excluded);
// 2-regular weight functions whose support is one odd cycle plus doubled edges.
std::vector<WeightFunction> enumerate_oc(uint32_t m);

// sum of z^w with coefficient 1 each, in the given edge ring.
poly::Poly<coeff::GF> generating_function(const std::vector<WeightFunction>& T, const poly::RingPtr& ring,
                                          const coeff::FiniteField* field);

// Simple undirected graph on vertices 0..n-1.
struct Graph {
    uint32_t n = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges;

    std::vector<std::vector<uint32_t>> adjacency() const;
    bool is_cubic() const;
};

Graph complete_graph(uint32_t n);
Graph petersen_graph();
Graph complete_bipartite(uint32_t a, uint32_t b);

// Number of Hamiltonian cycles through edge e of a cubic graph.
uint64_t hamiltonian_parity(const Graph& g, std::pair<uint32_t, uint32_t> e);

// Every labeled simple cubic graph on n vertices (n even).
std::vector<Graph> all_cubic_graphs(uint32_t n);

}  // namespace frobvol::pfaffcomb
