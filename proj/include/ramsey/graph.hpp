#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ramsey/vertex_set.hpp"

namespace ramsey {

using Edge = std::pair<int, int>;

// Simple undirected graph, immutable after construction. Adjacency is one
// VertexSet per vertex; everything downstream (the independence solver, the
// triangle checks, the constructions) works on row intersections.
class Graph {
public:
    static constexpr int max_vertices = VertexSet::capacity;

    Graph() = default; // the empty graph on zero vertices

    // Builds from an edge list. Symmetric closure applied, duplicates
    // collapsed. Throws std::invalid_argument on out-of-range endpoints or
    // self-loops.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    // Copy with one edge removed. Throws if uv is not an edge.
    Graph without_edge(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph(int n, std::vector<VertexSet> adj, int m)
        : n_(n), adj_(std::move(adj)), edge_count_(m)
    {
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
    int edge_count_ = 0;
};

bool is_triangle_free(const Graph& g);

// Lexicographically first triangle {u,v,w}, u<v, w = lowest common neighbor.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

// N(u) ∩ N(v). Throws std::invalid_argument when u == v.
VertexSet common_neighbors(const Graph& g, int u, int v);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new; // -1 for dropped vertices
    std::vector<int> new_to_old;
};

// G[keep], vertices relabeled 0..|keep|-1 in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// FNV-1a over (order, sorted edge list). Stable across runs; used to tag
// input graphs in certificate provenance.
std::uint64_t graph_content_hash(const Graph& g);

} // namespace ramsey
