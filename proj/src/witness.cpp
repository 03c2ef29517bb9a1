#include "ramsey/witness.hpp"

#include <stdexcept>

namespace ramsey {

std::string to_string(ClaimKind kind)
{
    return kind == ClaimKind::ks ? "ks" : "jse";
}

std::optional<ClaimKind> claim_kind_from_string(const std::string& s)
{
    if (s == "ks")
        return ClaimKind::ks;
    if (s == "jse")
        return ClaimKind::jse;
    return std::nullopt;
}

bool Certificate::valid() const
{
    if (!triangle_free)
        return false;
    if (claim.kind == ClaimKind::ks)
        return alpha <= claim.s - 1;
    return js_free.has_value() && *js_free;
}

std::string WitnessFailure::describe() const
{
    return predicate + " violated by {" + witness.to_string() + "}";
}

std::optional<VertexSet> find_s_subset_with_at_most_one_edge(const Graph& g, int s,
                                                             SolveStats* stats)
{
    if (s < 2)
        throw std::invalid_argument("subset size must be at least 2");
    // Zero inner edges: an independent s-set.
    if (auto ind = find_independent_set(g, s, stats))
        return ind;
    // Exactly one inner edge uv: the other s-2 vertices avoid u, v and all
    // their neighbors, and are pairwise nonadjacent.
    for (const auto& [u, v] : g.edges()) {
        VertexSet pool = minus(g.vertices(), g.neighbors(u) | g.neighbors(v));
        pool.reset(u);
        pool.reset(v);
        if (auto rest = find_independent_set_within(g, pool, s - 2, stats)) {
            VertexSet subset = *rest;
            subset.set(u);
            subset.set(v);
            return subset;
        }
    }
    return std::nullopt;
}

bool has_s_subset_with_at_most_one_edge(const Graph& g, int s, SolveStats* stats)
{
    return find_s_subset_with_at_most_one_edge(g, s, stats).has_value();
}

CertifyResult certify(const Graph& g, const WitnessClaim& claim, std::string provenance)
{
    if (claim.s < 2 || claim.n < 1)
        throw std::invalid_argument("claim requires s >= 2 and n >= 1");
    if (claim.n != g.order())
        throw std::invalid_argument("claim is for " + std::to_string(claim.n) +
                                    " vertices but graph has " + std::to_string(g.order()));

    SolveStats stats;
    if (auto tri = find_triangle(g))
        return WitnessFailure{"triangle_free", VertexSet::of({(*tri)[0], (*tri)[1], (*tri)[2]})};

    Certificate cert;
    cert.claim = claim;
    cert.triangle_free = true;
    cert.provenance = std::move(provenance);

    if (claim.kind == ClaimKind::ks) {
        VertexSet best = max_independent_set(g, &stats);
        cert.alpha = best.count();
        if (cert.alpha >= claim.s)
            return WitnessFailure{"alpha_bound", best};
    } else {
        if (auto sparse = find_s_subset_with_at_most_one_edge(g, claim.s, &stats))
            return WitnessFailure{"js_free", *sparse};
        cert.js_free = true;
        cert.alpha = independence_number(g, &stats);
    }
    cert.graph = g;
    cert.solver = stats;
    return cert;
}

Certificate certify_or_throw(const Graph& g, const WitnessClaim& claim, std::string provenance)
{
    CertifyResult res = certify(g, claim, std::move(provenance));
    if (auto* fail = std::get_if<WitnessFailure>(&res))
        throw PreconditionError("claim (" + to_string(claim.kind) + ", s=" +
                                std::to_string(claim.s) + ", n=" + std::to_string(claim.n) +
                                ") does not hold: " + fail->describe());
    return std::get<Certificate>(std::move(res));
}

} // namespace ramsey
