#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/witness.hpp"

namespace ramsey {

// Audit record for one construction application: how the output vertex set
// decomposes (in output labeling) and which vertices were chosen from the
// inputs (in input labeling).
struct ConstructionTrace {
    enum class Kind { c1, c4, c5 };
    Kind kind = Kind::c1;
    std::vector<std::pair<std::string, VertexSet>> parts;
    std::vector<int> chosen;
    int c_g = 0; // |N(u1) ∩ N(u2)| dropped from the first input (c5 only)
    int c_h = 0;

    const VertexSet* part(const std::string& name) const;
};

struct ConstructionResult {
    Graph graph;
    ConstructionTrace trace;
};

// Extends a triangle-free g by three vertices {v,x,y}: v duplicates u's
// neighborhood and u-x-y-v is a path. Output keeps g's labels, v=n, x=n+1,
// y=n+2; it is triangle-free with alpha(out) <= alpha(g)+1, so a (3,s;n)
// witness becomes a (3,s+1;n+3) witness.
ConstructionResult construct1(const Graph& g, int u);

// Glues g-u and h-v by the complete join between N_g(u) and N_h(v).
// Requires triangle-free inputs with alpha(g) <= s, alpha(h) <= t, s,t >= 3.
// Output: m+n-2 vertices, triangle-free, alpha <= s+t-1. G-part labels come
// first in ascending original order, then the H-part.
ConstructionResult construct4(const Graph& g, const Graph& h, int u, int v, int s, int t);

// The sharper gluing: picks nonadjacent u1,u2 in g and v1,v2 in h, drops
// both chosen pairs and their common neighborhoods (c_G, c_H vertices), and
// joins N(u1)-only with N(v1)-only and N(u2)-only with N(v2)-only. Output:
// m+n-c_G-c_H-4 vertices, triangle-free, alpha <= s+t-2.
ConstructionResult construct5(const Graph& g, const Graph& h, int u1, int u2, int v1, int v2,
                              int s, int t);

// g must certify as a (3,s;n)-witness. True iff deleting any edge raises
// alpha to s.
bool is_edge_minimal(const Graph& g, int s);

// g must be triangle-free. True iff every nonadjacent pair has a common
// neighbor, i.e. any added edge closes a triangle.
bool is_edge_maximal(const Graph& g);

bool is_bicritical(const Graph& g, int s);

// Lowest (u,v), u < v, nonadjacent with no common neighbor; absent iff g is
// edge maximal.
std::optional<std::pair<int, int>> find_zero_common_pair(const Graph& g);

struct PipelineResult {
    Graph graph;
    Certificate certificate;
    ConstructionTrace trace;
};

// From a certified (3,K_s-e;m)-witness (s >= 4, at least one edge): removes
// the lowest edge uv — leaving a (3,K_s;m)-graph in which u,v share no
// neighbors — and applies construct5 against h8 on its (v3,v7) pair.
// Output: a verified (3,s+1;m+4)-witness.
PipelineResult corollary7_pipeline(const Graph& g_jse, int s);

// From a certified (3,s+1;m)-witness: if not edge-maximal, uses its zero
// common pair directly; else if not edge-minimal, removes the first edge
// whose deletion keeps alpha <= s. Returns absent when g is bicritical.
// Output: a verified (3,s+2;m+4)-witness.
std::optional<PipelineResult> corollary6_pipeline(const Graph& g, int s);

// Certified (3,K_{s+1}-e;m) and (3,K_{t+1}-e;n) witnesses, s,t >= 3, each
// with an edge: removes the lowest edge from each and glues with construct5.
// Output: a verified (3,s+t-1;m+n-4)-witness.
PipelineResult corollary8_pipeline(const Graph& g_jse, int s, const Graph& h_jse, int t);

} // namespace ramsey
