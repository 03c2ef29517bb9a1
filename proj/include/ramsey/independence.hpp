#pragma once

#include <cstdint>
#include <optional>

#include "ramsey/graph.hpp"

namespace ramsey {

struct SolveStats {
    std::uint64_t nodes = 0;
    double wall_ms = 0.0;
};

// Exact maximum independent set by branch and bound: branch on a vertex of
// maximum degree within the candidate set, bound by a greedy clique cover of
// the candidates. Deterministic (ties break to the lowest index), so the
// returned set is reproducible run to run.
VertexSet max_independent_set(const Graph& g, SolveStats* stats = nullptr);

int independence_number(const Graph& g, SolveStats* stats = nullptr);

// Early-exit search for an independent set of exactly k vertices, optionally
// restricted to a candidate subset. Returns the first one found.
std::optional<VertexSet> find_independent_set(const Graph& g, int k, SolveStats* stats = nullptr);
std::optional<VertexSet> find_independent_set_within(const Graph& g, const VertexSet& candidates,
                                                     int k, SolveStats* stats = nullptr);

bool has_independent_set_of_size(const Graph& g, int k, SolveStats* stats = nullptr);

} // namespace ramsey
