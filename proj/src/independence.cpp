#include "ramsey/independence.hpp"

#include <chrono>
#include <stdexcept>

namespace ramsey {

namespace {

class AlphaSolver {
public:
    AlphaSolver(const Graph& g, int target) : g_(g), target_(target) {}

    // Greedy clique cover of the candidate set; each clique contributes at
    // most one vertex to any independent set, so the cover size bounds what
    // the candidates can still add.
    int clique_cover_bound(VertexSet pool) const
    {
        int cliques = 0;
        while (pool.any()) {
            int u = pool.lowest();
            pool.reset(u);
            VertexSet frontier = pool & g_.neighbors(u);
            while (frontier.any()) {
                int w = frontier.lowest();
                pool.reset(w);
                frontier = frontier & g_.neighbors(w);
            }
            ++cliques;
        }
        return cliques;
    }

    void run(VertexSet pool, VertexSet chosen, int size)
    {
        ++nodes;
        if (size > best) {
            best = size;
            best_set = chosen;
            if (target_ > 0 && best >= target_)
                stop = true;
        }
        if (stop || pool.empty())
            return;
        int floor = target_ > 0 ? target_ - 1 : best;
        if (size + clique_cover_bound(pool) <= floor)
            return;

        int v = pick_branch_vertex(pool);
        VertexSet in_pool = minus(pool, g_.neighbors(v));
        in_pool.reset(v);
        VertexSet in_chosen = chosen;
        in_chosen.set(v);
        run(in_pool, in_chosen, size + 1);
        if (stop)
            return;
        pool.reset(v);
        run(pool, chosen, size);
    }

    int best = 0;
    VertexSet best_set;
    bool stop = false;
    std::uint64_t nodes = 0;

private:
    int pick_branch_vertex(const VertexSet& pool) const
    {
        int best_v = -1, best_deg = -1;
        for (int v : pool) {
            int deg = (g_.neighbors(v) & pool).count();
            if (deg > best_deg) {
                best_deg = deg;
                best_v = v;
            }
        }
        return best_v;
    }

    const Graph& g_;
    int target_;
};

VertexSet solve(const Graph& g, const VertexSet& candidates, int target, SolveStats* stats,
                bool* reached)
{
    auto t0 = std::chrono::steady_clock::now();
    AlphaSolver solver(g, target);
    solver.run(candidates, VertexSet{}, 0);
    if (stats) {
        stats->nodes += solver.nodes;
        stats->wall_ms +=
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
    }
    if (reached)
        *reached = target > 0 && solver.best >= target;
    return solver.best_set;
}

} // namespace

VertexSet max_independent_set(const Graph& g, SolveStats* stats)
{
    return solve(g, g.vertices(), 0, stats, nullptr);
}

int independence_number(const Graph& g, SolveStats* stats)
{
    return max_independent_set(g, stats).count();
}

std::optional<VertexSet> find_independent_set(const Graph& g, int k, SolveStats* stats)
{
    return find_independent_set_within(g, g.vertices(), k, stats);
}

std::optional<VertexSet> find_independent_set_within(const Graph& g, const VertexSet& candidates,
                                                     int k, SolveStats* stats)
{
    if (k < 0)
        throw std::invalid_argument("independent set size must be nonnegative");
    if (k == 0)
        return VertexSet{};
    bool reached = false;
    VertexSet found = solve(g, candidates, k, stats, &reached);
    if (!reached)
        return std::nullopt;
    return found;
}

bool has_independent_set_of_size(const Graph& g, int k, SolveStats* stats)
{
    return find_independent_set(g, k, stats).has_value();
}

} // namespace ramsey
