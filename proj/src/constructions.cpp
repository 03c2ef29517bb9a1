#include "ramsey/constructions.hpp"

#include <stdexcept>

#include "ramsey/catalog.hpp"

namespace ramsey {

namespace {

void require(bool ok, const std::string& predicate)
{
    if (!ok)
        throw PreconditionError("precondition failed: " + predicate);
}

void require_vertex(const Graph& g, int v, const std::string& name)
{
    require(v >= 0 && v < g.order(), name + " in range");
}

// alpha(g) <= bound, reported under the given predicate name.
void require_alpha_at_most(const Graph& g, int bound, const std::string& predicate)
{
    require(!has_independent_set_of_size(g, bound + 1), predicate);
}

VertexSet remap(const VertexSet& s, const std::vector<int>& old_to_new)
{
    VertexSet out;
    for (int v : s)
        if (old_to_new[v] >= 0)
            out.set(old_to_new[v]);
    return out;
}

} // namespace

const VertexSet* ConstructionTrace::part(const std::string& name) const
{
    for (const auto& [n, set] : parts)
        if (n == name)
            return &set;
    return nullptr;
}

ConstructionResult construct1(const Graph& g, int u)
{
    require_vertex(g, u, "u");
    require(is_triangle_free(g), "g triangle-free");

    int n = g.order();
    std::vector<Edge> edges = g.edges();
    int v = n, x = n + 1, y = n + 2;
    for (int w : g.neighbors(u))
        edges.emplace_back(w, v);
    edges.emplace_back(u, x);
    edges.emplace_back(x, y);
    edges.emplace_back(y, v);

    ConstructionTrace trace;
    trace.kind = ConstructionTrace::Kind::c1;
    trace.parts = {{"original", VertexSet::first_n(n)},
                   {"v_copy", VertexSet::of({v})},
                   {"x", VertexSet::of({x})},
                   {"y", VertexSet::of({y})}};
    trace.chosen = {u};
    return {Graph::from_edges(n + 3, edges), std::move(trace)};
}

ConstructionResult construct4(const Graph& g, const Graph& h, int u, int v, int s, int t)
{
    require(s >= 3 && t >= 3, "s >= 3 and t >= 3");
    require_vertex(g, u, "u");
    require_vertex(h, v, "v");
    require(is_triangle_free(g), "g triangle-free");
    require(is_triangle_free(h), "h triangle-free");
    require_alpha_at_most(g, s, "alpha(g) <= s");
    require_alpha_at_most(h, t, "alpha(h) <= t");

    VertexSet keep_g = g.vertices();
    keep_g.reset(u);
    VertexSet keep_h = h.vertices();
    keep_h.reset(v);
    InducedSubgraph part_g = induced_subgraph(g, keep_g);
    InducedSubgraph part_h = induced_subgraph(h, keep_h);
    int offset = part_g.graph.order();

    std::vector<Edge> edges = part_g.graph.edges();
    for (const auto& [a, b] : part_h.graph.edges())
        edges.emplace_back(a + offset, b + offset);

    VertexSet x_g = remap(g.neighbors(u), part_g.old_to_new);
    VertexSet x_h_local = remap(h.neighbors(v), part_h.old_to_new);
    VertexSet x_h;
    for (int w : x_h_local)
        x_h.set(w + offset);
    for (int a : x_g)
        for (int b : x_h)
            edges.emplace_back(a, b);

    int out_n = g.order() + h.order() - 2;
    VertexSet h_block;
    for (int w = offset; w < out_n; ++w)
        h_block.set(w);

    ConstructionTrace trace;
    trace.kind = ConstructionTrace::Kind::c4;
    trace.parts = {{"X_G", x_g},
                   {"Y_G", minus(VertexSet::first_n(offset), x_g)},
                   {"X_H", x_h},
                   {"Y_H", minus(h_block, x_h)}};
    trace.chosen = {u, v};
    return {Graph::from_edges(out_n, edges), std::move(trace)};
}

ConstructionResult construct5(const Graph& g, const Graph& h, int u1, int u2, int v1, int v2,
                              int s, int t)
{
    require(s >= 3 && t >= 3, "s >= 3 and t >= 3");
    require_vertex(g, u1, "u1");
    require_vertex(g, u2, "u2");
    require_vertex(h, v1, "v1");
    require_vertex(h, v2, "v2");
    require(u1 != u2 && !g.adjacent(u1, u2), "u1,u2 nonadjacent");
    require(v1 != v2 && !h.adjacent(v1, v2), "v1,v2 nonadjacent");
    require(is_triangle_free(g), "g triangle-free");
    require(is_triangle_free(h), "h triangle-free");
    require_alpha_at_most(g, s, "alpha(g) <= s");
    require_alpha_at_most(h, t, "alpha(h) <= t");

    VertexSet xg12 = g.neighbors(u1) & g.neighbors(u2);
    VertexSet xg1 = minus(g.neighbors(u1), g.neighbors(u2));
    VertexSet xg2 = minus(g.neighbors(u2), g.neighbors(u1));
    VertexSet xh12 = h.neighbors(v1) & h.neighbors(v2);
    VertexSet xh1 = minus(h.neighbors(v1), h.neighbors(v2));
    VertexSet xh2 = minus(h.neighbors(v2), h.neighbors(v1));
    int c_g = xg12.count();
    int c_h = xh12.count();

    VertexSet keep_g = minus(g.vertices(), xg12);
    keep_g.reset(u1);
    keep_g.reset(u2);
    VertexSet keep_h = minus(h.vertices(), xh12);
    keep_h.reset(v1);
    keep_h.reset(v2);
    InducedSubgraph part_g = induced_subgraph(g, keep_g);
    InducedSubgraph part_h = induced_subgraph(h, keep_h);
    int offset = part_g.graph.order();
    int out_n = offset + part_h.graph.order();

    std::vector<Edge> edges = part_g.graph.edges();
    for (const auto& [a, b] : part_h.graph.edges())
        edges.emplace_back(a + offset, b + offset);

    auto shift = [offset](VertexSet set) {
        VertexSet out;
        for (int w : set)
            out.set(w + offset);
        return out;
    };
    VertexSet xg1_out = remap(xg1, part_g.old_to_new);
    VertexSet xg2_out = remap(xg2, part_g.old_to_new);
    VertexSet xh1_out = shift(remap(xh1, part_h.old_to_new));
    VertexSet xh2_out = shift(remap(xh2, part_h.old_to_new));
    for (int a : xg1_out)
        for (int b : xh1_out)
            edges.emplace_back(a, b);
    for (int a : xg2_out)
        for (int b : xh2_out)
            edges.emplace_back(a, b);

    VertexSet g_block = VertexSet::first_n(offset);
    VertexSet h_block = minus(VertexSet::first_n(out_n), g_block);

    ConstructionTrace trace;
    trace.kind = ConstructionTrace::Kind::c5;
    trace.parts = {{"X_G1", xg1_out},
                   {"X_G2", xg2_out},
                   {"Y_G", minus(g_block, xg1_out | xg2_out)},
                   {"X_H1", xh1_out},
                   {"X_H2", xh2_out},
                   {"Y_H", minus(h_block, xh1_out | xh2_out)}};
    trace.chosen = {u1, u2, v1, v2};
    trace.c_g = c_g;
    trace.c_h = c_h;
    return {Graph::from_edges(out_n, edges), std::move(trace)};
}

bool is_edge_minimal(const Graph& g, int s)
{
    certify_or_throw(g, {ClaimKind::ks, s, g.order()});
    for (const auto& [u, v] : g.edges())
        if (!has_independent_set_of_size(g.without_edge(u, v), s))
            return false;
    return true;
}

bool is_edge_maximal(const Graph& g)
{
    require(is_triangle_free(g), "g triangle-free");
    return !find_zero_common_pair(g).has_value();
}

bool is_bicritical(const Graph& g, int s)
{
    return is_edge_minimal(g, s) && is_edge_maximal(g);
}

std::optional<std::pair<int, int>> find_zero_common_pair(const Graph& g)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && !g.neighbors(u).intersects(g.neighbors(v)))
                return std::make_pair(u, v);
    return std::nullopt;
}

namespace {

// Shared tail of the corollary pipelines: g already has its zero-common
// pair; glue against h8 on (v3, v7) and re-verify the claimed witness.
PipelineResult glue_with_h8(const Graph& g, int u, int v, int s_param, int claim_s,
                            std::string provenance, std::vector<std::uint64_t> input_hashes)
{
    Graph h = h8();
    ConstructionResult built = construct5(g, h, u, v, 2, 6, s_param, 3);
    WitnessClaim claim{ClaimKind::ks, claim_s, built.graph.order()};
    CertifyResult res = certify(built.graph, claim, std::move(provenance));
    if (auto* fail = std::get_if<WitnessFailure>(&res))
        throw std::logic_error("construction postcondition failed: " + fail->describe());
    Certificate cert = std::get<Certificate>(std::move(res));
    cert.chosen = built.trace.chosen;
    cert.input_hashes = std::move(input_hashes);
    return {built.graph, std::move(cert), std::move(built.trace)};
}

} // namespace

PipelineResult corollary7_pipeline(const Graph& g_jse, int s)
{
    require(s >= 4, "s >= 4");
    require(g_jse.edge_count() >= 1, "input has an edge");
    certify_or_throw(g_jse, {ClaimKind::jse, s, g_jse.order()});

    Edge e = g_jse.edges().front();
    Graph g = g_jse.without_edge(e.first, e.second);
    std::string provenance = "corollary7(s=" + std::to_string(s) + ", removed_edge=" +
                             std::to_string(e.first) + "-" + std::to_string(e.second) + ")";
    return glue_with_h8(g, e.first, e.second, s - 1, s + 1, std::move(provenance),
                        {graph_content_hash(g_jse)});
}

std::optional<PipelineResult> corollary6_pipeline(const Graph& g, int s)
{
    certify_or_throw(g, {ClaimKind::ks, s + 1, g.order()});

    std::optional<std::pair<int, int>> pair = find_zero_common_pair(g);
    Graph base = g;
    std::string how;
    if (pair) {
        how = "pair=" + std::to_string(pair->first) + "-" + std::to_string(pair->second);
    } else {
        // edge maximal; look for a removable edge (deletion keeps alpha <= s)
        for (const auto& [u, v] : g.edges()) {
            Graph candidate = g.without_edge(u, v);
            if (!has_independent_set_of_size(candidate, s + 1)) {
                base = candidate;
                pair = {u, v};
                how = "removed_edge=" + std::to_string(u) + "-" + std::to_string(v);
                break;
            }
        }
        if (!pair)
            return std::nullopt; // bicritical
    }
    std::string provenance = "corollary6(s=" + std::to_string(s) + ", " + how + ")";
    return glue_with_h8(base, pair->first, pair->second, s, s + 2, std::move(provenance),
                        {graph_content_hash(g)});
}

PipelineResult corollary8_pipeline(const Graph& g_jse, int s, const Graph& h_jse, int t)
{
    require(s >= 3 && t >= 3, "s >= 3 and t >= 3");
    require(g_jse.edge_count() >= 1, "first input has an edge");
    require(h_jse.edge_count() >= 1, "second input has an edge");
    certify_or_throw(g_jse, {ClaimKind::jse, s + 1, g_jse.order()});
    certify_or_throw(h_jse, {ClaimKind::jse, t + 1, h_jse.order()});

    Edge eg = g_jse.edges().front();
    Edge eh = h_jse.edges().front();
    Graph g = g_jse.without_edge(eg.first, eg.second);
    Graph h = h_jse.without_edge(eh.first, eh.second);

    ConstructionResult built = construct5(g, h, eg.first, eg.second, eh.first, eh.second, s, t);
    WitnessClaim claim{ClaimKind::ks, s + t - 1, built.graph.order()};
    std::string provenance = "corollary8(s=" + std::to_string(s) + ", t=" + std::to_string(t) +
                             ", removed_edges=" + std::to_string(eg.first) + "-" +
                             std::to_string(eg.second) + "," + std::to_string(eh.first) + "-" +
                             std::to_string(eh.second) + ")";
    CertifyResult res = certify(built.graph, claim, std::move(provenance));
    if (auto* fail = std::get_if<WitnessFailure>(&res))
        throw std::logic_error("construction postcondition failed: " + fail->describe());
    Certificate cert = std::get<Certificate>(std::move(res));
    cert.chosen = built.trace.chosen;
    cert.input_hashes = {graph_content_hash(g_jse), graph_content_hash(h_jse)};
    return {built.graph, std::move(cert), std::move(built.trace)};
}

} // namespace ramsey
