#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "ramsey/graph.hpp"
#include "ramsey/independence.hpp"

namespace ramsey {

// The two claim shapes: the complement avoids K_s, or avoids K_s - e.
enum class ClaimKind { ks, jse };

std::string to_string(ClaimKind kind);
std::optional<ClaimKind> claim_kind_from_string(const std::string& s);

// "g is a triangle-free graph on n vertices whose complement has no K_s
// (resp. K_s - e)". A verified claim on n vertices proves R(3,·) >= n+1.
struct WitnessClaim {
    ClaimKind kind = ClaimKind::ks;
    int s = 2;
    int n = 1;

    friend bool operator==(const WitnessClaim&, const WitnessClaim&) = default;
};

// A graph together with machine-checked facts. Only certify() makes these,
// so alpha always comes from the exact solver.
struct Certificate {
    Graph graph;
    WitnessClaim claim;
    bool triangle_free = false;
    int alpha = 0;
    std::optional<bool> js_free; // set for jse claims
    std::string provenance;      // construction lineage, e.g. "catalog:h8"
    std::vector<int> chosen;     // vertices a construction selected, input labeling
    std::vector<std::uint64_t> input_hashes;
    SolveStats solver;

    bool valid() const;
};

struct WitnessFailure {
    // Which predicate failed, e.g. "triangle_free", "alpha_bound", "js_free".
    std::string predicate;
    // The offending structure: a triangle, an independent s-set, or an
    // s-subset inducing at most one edge.
    VertexSet witness;
    std::string describe() const;
};

using CertifyResult = std::variant<Certificate, WitnessFailure>;

// True iff some s-subset of V(g) induces at most one edge; equivalently the
// complement of g contains K_s - e. find_* returns the subset.
std::optional<VertexSet> find_s_subset_with_at_most_one_edge(const Graph& g, int s,
                                                             SolveStats* stats = nullptr);
bool has_s_subset_with_at_most_one_edge(const Graph& g, int s, SolveStats* stats = nullptr);

// Runs the full predicate battery for the claim. Failures carry a concrete
// witness; they are values, not errors. Throws only on claim/graph mismatch.
CertifyResult certify(const Graph& g, const WitnessClaim& claim, std::string provenance = {});

// Convenience: certify and throw PreconditionError on failure.
Certificate certify_or_throw(const Graph& g, const WitnessClaim& claim,
                             std::string provenance = {});

// Spec-level precondition violation; carries the failed predicate's name.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ramsey
