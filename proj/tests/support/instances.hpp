#pragma once

// Shared fixtures and brute-force oracles for the test suites. Nothing here
// calls the library code paths it is used to check.

#include "hcolor/coloring.hpp"
#include "hcolor/hypergraph.hpp"
#include "hcolor/rational.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <vector>

namespace hcolor::testing {

/// {0,1,2},{2,3,4}: the 2-edge / 5-vertex instance.
inline Hypergraph two_edge() { return Hypergraph::from_edges(5, 3, {{0, 1, 2}, {2, 3, 4}}); }

inline Hypergraph single_edge() { return Hypergraph::from_edges(3, 3, {{0, 1, 2}}); }

inline Hypergraph empty_graph(std::size_t n, std::size_t k = 3) { return Hypergraph::from_edges(n, k, {}); }

/// Every enumerable instance the oracle sweeps run over.
struct CorpusEntry {
    std::string name;
    Hypergraph graph;
};

inline std::vector<CorpusEntry> corpus() {
    return {
        {"single_edge_k3", single_edge()},
        {"two_edge_path", two_edge()},
        {"three_edge_path", Hypergraph::from_edges(7, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}})},
        {"triangle", Hypergraph::from_edges(6, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}})},
        {"star3", Hypergraph::from_edges(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}})},
        {"disjoint_pair", Hypergraph::from_edges(6, 3, {{0, 1, 2}, {3, 4, 5}})},
        {"single_edge_k4", Hypergraph::from_edges(4, 4, {{0, 1, 2, 3}})},
        {"two_edge_k4", Hypergraph::from_edges(7, 4, {{0, 1, 2, 3}, {3, 4, 5, 6}})},
        {"empty5", empty_graph(5)},
    };
}

/// Pairwise intersection test over all edge pairs.
inline bool brute_simple(const std::vector<std::vector<Vertex>>& edges) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            std::size_t shared = 0;
            for (Vertex a : edges[i])
                shared += std::count(edges[j].begin(), edges[j].end(), a);
            if (shared > 1) return false;
        }
    return true;
}

/// y_{v,i} by materializing the color multiset of every edge through v,
/// scanning the raw edge list rather than the incidence index.
inline std::vector<std::size_t> brute_profile(const std::vector<std::vector<Vertex>>& edges, std::size_t k,
                                              const std::vector<Color>& x, Vertex v) {
    std::vector<std::size_t> y(k - 1, 0);
    for (const auto& e : edges) {
        if (std::find(e.begin(), e.end(), v) == e.end()) continue;
        std::multiset<Color> colors;
        for (Vertex w : e)
            if (w != v) colors.insert(x[w]);
        std::set<Color> distinct(colors.begin(), colors.end());
        ++y[distinct.size() - 1];
    }
    return y;
}

inline std::set<Color> brute_blocked(const std::vector<std::vector<Vertex>>& edges, const std::vector<Color>& x,
                                     Vertex v) {
    std::set<Color> out;
    for (const auto& e : edges) {
        if (std::find(e.begin(), e.end(), v) == e.end()) continue;
        std::set<Color> distinct;
        for (Vertex w : e)
            if (w != v) distinct.insert(x[w]);
        if (distinct.size() == 1) out.insert(*distinct.begin());
    }
    return out;
}

/// |Q| by inclusion–exclusion over subsets S of edges: Σ (-1)^{|S|} q^{components(S)},
/// where components counts connected pieces of the vertex set after merging each
/// edge in S into one class (each class must be monochromatic).
inline BigInt inclusion_exclusion_count(std::size_t n, const std::vector<std::vector<Vertex>>& edges, unsigned q) {
    BigInt total = 0;
    const std::size_t m = edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a];
            return a;
        };
        for (std::size_t j = 0; j < m; ++j) {
            if (!(mask >> j & 1)) continue;
            for (std::size_t t = 1; t < edges[j].size(); ++t) {
                auto a = find(edges[j][0]), b = find(edges[j][t]);
                if (a != b) parent[a] = b;
            }
        }
        std::size_t classes = 0;
        for (std::size_t i = 0; i < n; ++i) classes += find(i) == i;
        BigInt term = pow_int(q, classes);
        if (std::popcount(mask) % 2) total -= term;
        else total += term;
    }
    return total;
}

} // namespace hcolor::testing
