#include "ramsey/catalog.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ramsey/independence.hpp"

namespace ramsey {

std::string CirculantSpec::to_string() const
{
    std::string out = "circulant(n=" + std::to_string(n) + ", d={";
    bool first = true;
    for (int d : distances) {
        if (!first)
            out += ',';
        out += std::to_string(d);
        first = false;
    }
    return out + "})";
}

Graph circulant(const CirculantSpec& spec)
{
    if (spec.n < 0 || spec.n > Graph::max_vertices)
        throw std::invalid_argument("circulant order out of range");
    for (int d : spec.distances)
        if (d < 1 || d > spec.n / 2)
            throw std::invalid_argument("circulant distance " + std::to_string(d) +
                                        " out of range 1.." + std::to_string(spec.n / 2));
    std::vector<Edge> edges;
    for (int i = 0; i < spec.n; ++i)
        for (int d : spec.distances) {
            int j = (i + d) % spec.n;
            if (i != j)
                edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    return Graph::from_edges(spec.n, edges);
}

Graph c5()
{
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

Graph h8()
{
    return Graph::from_edges(8, {{0, 1},
                                 {1, 2},
                                 {2, 3},
                                 {3, 4},
                                 {4, 5},
                                 {5, 6},
                                 {6, 7},
                                 {7, 0},
                                 {0, 4},
                                 {1, 5}});
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        edges.emplace_back(i, i + 5);
        int a = 5 + i, b = 5 + (i + 2) % 5;
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph::from_edges(10, edges);
}

const std::vector<CatalogEntry>& catalog_entries()
{
    static const std::vector<CatalogEntry> entries = {
        {"c5", c5},
        {"h8", h8},
        {"petersen", petersen},
    };
    return entries;
}

std::optional<Graph> catalog_get(const std::string& name)
{
    for (const auto& e : catalog_entries())
        if (e.name == name)
            return e.make();
    return std::nullopt;
}

// --- circulant search ------------------------------------------------------

namespace {

bool circulant_certifies(const Graph& g, int s, ClaimKind kind)
{
    if (kind == ClaimKind::ks)
        return !has_independent_set_of_size(g, s);
    return !has_s_subset_with_at_most_one_edge(g, s);
}

struct CirculantSearch {
    int n, s;
    ClaimKind kind;
    const ProgressFn& progress;
    std::uint64_t nodes = 0;

    std::optional<CirculantSpec> visit(CirculantSpec& spec)
    {
        ++nodes;
        if (progress)
            progress(nodes);
        Graph g = circulant(spec);
        if (!is_triangle_free(g))
            return std::nullopt; // supersets keep the triangle
        if (circulant_certifies(g, s, kind))
            return spec;
        int from = spec.distances.empty() ? 1 : *spec.distances.rbegin() + 1;
        for (int d = from; d <= n / 2; ++d) {
            spec.distances.insert(d);
            auto found = visit(spec);
            spec.distances.erase(d);
            if (found)
                return found;
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<CirculantSpec> search_circulant(int n, int s, ClaimKind kind,
                                              const ProgressFn& progress)
{
    if (n < 1 || s < 2)
        throw std::invalid_argument("search_circulant requires n >= 1 and s >= 2");
    CirculantSearch search{n, s, kind, progress};
    CirculantSpec spec{n, {}};
    return search.visit(spec);
}

// --- exhaustive nonexistence ------------------------------------------------

namespace {

// Partial graph under slot-by-slot decision. Vertices 0..last_decided are
// fully decided among themselves once their column is complete.
struct PartialGraph {
    int n = 0;
    std::array<VertexSet, Graph::max_vertices> adj{};
};

// Any independent k-set within `candidates`? Plain include/exclude; the
// prefixes here have at most 9 vertices.
bool exists_independent(const PartialGraph& g, VertexSet pool, VertexSet running, int k)
{
    int size = running.count();
    if (size >= k)
        return true;
    if (size + pool.count() < k)
        return false;
    int v = pool.lowest();
    pool.reset(v);
    VertexSet with = minus(pool, g.adj[v]);
    VertexSet chosen = running;
    chosen.set(v);
    return exists_independent(g, with, chosen, k) || exists_independent(g, pool, running, k);
}

// Column for vertex v just completed: the prefix 0..v is decided. Any new
// independent s-set must contain v, so only v's non-neighbors matter.
bool prefix_reaches_alpha(const PartialGraph& g, int v, int s)
{
    VertexSet candidates = minus(VertexSet::first_n(v), g.adj[v]);
    VertexSet seed;
    seed.set(v);
    return exists_independent(g, candidates, seed, s);
}

struct NonexistenceSearch {
    NonexistenceSearch(int n_, int s_, const ProgressFn& progress_, int boundary_,
                       std::vector<PartialGraph>* collect_ = nullptr)
        : n(n_), s(s_), progress(progress_), boundary(boundary_), collect(collect_)
    {
    }

    int n, s;
    const ProgressFn& progress;
    // boundary < n turns the search into a collector of root tasks
    int boundary;
    std::vector<PartialGraph>* collect;
    std::mutex progress_mutex;
    std::atomic<std::uint64_t> total_nodes{0};
    std::atomic<bool> witness_found{false};

    void bump(std::uint64_t& local)
    {
        if (++local >= (1u << 20)) {
            total_nodes += local;
            local = 0;
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(total_nodes.load());
            }
        }
    }

    // Decide slot (u,v); column v completes at u == v-1. Returns true as
    // soon as one full (3,K_s;n)-graph is assembled.
    bool dfs(PartialGraph& g, int u, int v, std::uint64_t& local)
    {
        if (v >= boundary) {
            if (collect) {
                collect->push_back(g);
                return false;
            }
            return true; // every column passed its alpha check
        }
        if (witness_found.load(std::memory_order_relaxed))
            return true;
        bump(local);
        int nu = u + 1 == v ? 0 : u + 1;
        int nv = u + 1 == v ? v + 1 : v;
        bool column_done = u + 1 == v;

        // no edge
        if (!column_done || !prefix_reaches_alpha(g, v, s))
            if (dfs(g, nu, nv, local))
                return true;
        // edge, unless it closes a triangle or pushes a degree to s
        // (a degree-s neighborhood is an independent s-set in any completion)
        if (!g.adj[u].intersects(g.adj[v]) && g.adj[u].count() < s - 1 &&
            g.adj[v].count() < s - 1) {
            g.adj[u].set(v);
            g.adj[v].set(u);
            bool hit = (!column_done || !prefix_reaches_alpha(g, v, s)) && dfs(g, nu, nv, local);
            g.adj[u].reset(v);
            g.adj[v].reset(u);
            if (hit)
                return true;
        }
        return false;
    }
};

} // namespace

int worker_count()
{
    if (const char* env = std::getenv("RAMSEY_WORKERS")) {
        int k = std::atoi(env);
        if (k > 0)
            return std::min(k, 128);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

bool exhaustive_nonexistence(int n, int s, const ProgressFn& progress)
{
    if (n < 1 || n > 9)
        throw std::invalid_argument("exhaustive_nonexistence is capped at n <= 9");
    if (s < 2)
        throw std::invalid_argument("exhaustive_nonexistence requires s >= 2");
    if (s > n)
        return false; // the edgeless graph is a witness

    // Root tasks: all valid decided prefixes on the first root_vertices
    // vertices, found by the same DFS run in collect mode.
    int root_vertices = std::min(n - 1, 5);
    std::vector<PartialGraph> tasks;
    {
        NonexistenceSearch collector{n, s, progress, root_vertices, &tasks};
        PartialGraph g;
        g.n = n;
        std::uint64_t local = 0;
        collector.dfs(g, 0, 1, local);
    }

    NonexistenceSearch search{n, s, progress, n};
    int workers = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
    if (workers <= 1) {
        std::uint64_t local = 0;
        for (auto& task : tasks)
            if (search.dfs(task, 0, root_vertices, local)) {
                search.witness_found = true;
                break;
            }
        search.total_nodes += local;
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                std::uint64_t local = 0;
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    if (search.witness_found.load())
                        break;
                    PartialGraph task = tasks[i];
                    if (search.dfs(task, 0, root_vertices, local))
                        search.witness_found = true;
                }
                search.total_nodes += local;
            });
        for (auto& t : pool)
            t.join();
    }
    if (progress)
        progress(search.total_nodes.load());
    return !search.witness_found.load();
}

} // namespace ramsey
