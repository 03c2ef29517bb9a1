#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/witness.hpp"

namespace ramsey {

// Compact description of a circulant candidate: vertices 0..n-1,
// i ~ j iff the circular distance between i and j lies in `distances`.
struct CirculantSpec {
    int n = 0;
    std::set<int> distances; // each d with 1 <= d <= n/2

    std::string to_string() const;
    friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

Graph circulant(const CirculantSpec& spec);

// --- embedded witness graphs -------------------------------------------

// The pentagon: the (3,3;5)-graph behind R(3,3) = 6.
Graph c5();

// The 8-cycle v1..v8 plus the two consecutive main diagonals v1v5 and v2v6
// (v_i maps to index i-1): the 10-edge (3,4;8)-graph. Indices 2 and 6
// (v3 and v7) have no common neighbors.
Graph h8();

// Outer pentagon 0..4, inner pentagram 5..9, spokes i -- i+5. Triangle-free
// with alpha = 4 and no 5-subset inducing fewer than two edges, so it
// witnesses (3,K5-e;10).
Graph petersen();

struct CatalogEntry {
    std::string name;
    Graph (*make)();
};
const std::vector<CatalogEntry>& catalog_entries();
std::optional<Graph> catalog_get(const std::string& name);

// --- searches ------------------------------------------------------------

// Invoked periodically with the number of search nodes expanded so far.
using ProgressFn = std::function<void(std::uint64_t nodes)>;

// First distance set, in lexicographic order over ascending sequences, whose
// circulant certifies the claim; subtrees rooted at a triangle are pruned
// (supersets only add edges, so the triangle stays).
std::optional<CirculantSpec> search_circulant(int n, int s, ClaimKind kind = ClaimKind::ks,
                                              const ProgressFn& progress = {});

// Exhaustive proof that NO (3,K_s;n)-graph exists: DFS over edge slots in
// column-major order, keeping only triangle-free partial graphs and cutting
// any branch whose fully-decided prefix already holds an independent s-set.
// Exact. Capped at n <= 9. Honors RAMSEY_WORKERS for root-branch parallelism;
// the verdict is identical to the sequential scan.
bool exhaustive_nonexistence(int n, int s, const ProgressFn& progress = {});

// Worker count: RAMSEY_WORKERS if set and positive, else hardware concurrency.
int worker_count();

} // namespace ramsey
