#pragma once

// Test-only oracles and generators. These deliberately avoid the library's
// solver code paths: alpha by full subset enumeration, triangles by triple
// loops, sparse subsets by popcount scans.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ramsey/graph.hpp"

namespace oracle {

inline std::vector<std::uint32_t> adjacency_words(const ramsey::Graph& g)
{
    if (g.order() > 24)
        throw std::invalid_argument("oracle is for small graphs only");
    std::vector<std::uint32_t> adj(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            adj[u] |= 1u << v;
    return adj;
}

// Exhaustive maximum independent set over all 2^n subsets.
inline int alpha_brute(const ramsey::Graph& g)
{
    std::vector<std::uint32_t> adj = adjacency_words(g);
    int n = g.order(), best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (std::uint32_t rest = mask; independent && rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            independent = (adj[v] & mask) == 0;
        }
        if (independent)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

// Does some s-subset induce at most one edge? Full scan over subsets.
inline bool sparse_subset_brute(const ramsey::Graph& g, int s)
{
    std::vector<std::uint32_t> adj = adjacency_words(g);
    int n = g.order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != s)
            continue;
        int twice_edges = 0;
        for (std::uint32_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            twice_edges += std::popcount(adj[v] & mask);
        }
        if (twice_edges <= 2)
            return true;
    }
    return false;
}

// Triple-loop triangle test, independent of the bitset row intersections.
inline bool triangle_free_brute(const ramsey::Graph& g)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            for (int w = v + 1; w < g.order(); ++w)
                if (g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w))
                    return false;
    return true;
}

inline ramsey::Graph random_graph(std::mt19937& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<ramsey::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return ramsey::Graph::from_edges(n, edges);
}

// Random pair order, keep an edge iff it closes no triangle so far.
inline ramsey::Graph random_triangle_free(std::mt19937& rng, int n, double p)
{
    std::vector<ramsey::Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution coin(p);
    std::vector<ramsey::VertexSet> adj(n);
    std::vector<ramsey::Edge> edges;
    for (const auto& [u, v] : pairs) {
        if (!coin(rng))
            continue;
        if ((adj[u] & adj[v]).any())
            continue;
        adj[u].set(v);
        adj[v].set(u);
        edges.emplace_back(u, v);
    }
    return ramsey::Graph::from_edges(n, edges);
}

} // namespace oracle
