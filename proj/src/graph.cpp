#include "ramsey/graph.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " out of range 0.." +
                                    std::to_string(max_vertices));
    std::vector<VertexSet> adj(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                        std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj[u].set(v);
        adj[v].set(u);
    }
    int m = 0;
    for (int v = 0; v < n; ++v)
        m += adj[v].count();
    return Graph(n, std::move(adj), m / 2);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next_after(u); v >= 0; v = adj_[u].next_after(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::without_edge(int u, int v) const
{
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || !adjacent(u, v))
        throw std::invalid_argument("not an edge: " + std::to_string(u) + "-" + std::to_string(v));
    std::vector<VertexSet> adj = adj_;
    adj[u].reset(v);
    adj[v].reset(u);
    return Graph(n_, std::move(adj), edge_count_ - 1);
}

bool is_triangle_free(const Graph& g)
{
    return !find_triangle(g).has_value();
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g)
{
    for (int u = 0; u < g.order(); ++u) {
        const VertexSet& nu = g.neighbors(u);
        for (int v = nu.next_after(u); v >= 0; v = nu.next_after(v)) {
            VertexSet common = nu & g.neighbors(v);
            if (common.any())
                return std::array<int, 3>{u, v, common.lowest()};
        }
    }
    return std::nullopt;
}

VertexSet common_neighbors(const Graph& g, int u, int v)
{
    if (u == v)
        throw std::invalid_argument("common_neighbors needs two distinct vertices");
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw std::invalid_argument("vertex out of range");
    return g.neighbors(u) & g.neighbors(v);
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x)
{
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace

std::uint64_t graph_content_hash(const Graph& g)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(h, static_cast<std::uint64_t>(g.order()));
    for (const auto& [u, v] : g.edges())
        h = fnv1a(h, (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
    return h;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    if (!keep.is_subset_of(g.vertices()))
        throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> old_to_new(g.order(), -1);
    std::vector<int> new_to_old;
    new_to_old.reserve(keep.count());
    for (int v : keep) {
        old_to_new[v] = static_cast<int>(new_to_old.size());
        new_to_old.push_back(v);
    }
    std::vector<Edge> edges;
    for (int v : keep) {
        VertexSet kept_nbrs = g.neighbors(v) & keep;
        for (int w = kept_nbrs.next_after(v); w >= 0; w = kept_nbrs.next_after(w))
            edges.emplace_back(old_to_new[v], old_to_new[w]);
    }
    Graph sub = Graph::from_edges(static_cast<int>(new_to_old.size()), edges);
    return {std::move(sub), std::move(old_to_new), std::move(new_to_old)};
}

} // namespace ramsey
