#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/witness.hpp"

namespace ramsey {

// Closed integer interval; exact when lo == hi. hi == kUnbounded means no
// upper bound is known.
struct Bound {
    int lo = 1;
    int hi = 0;

    static constexpr int kUnbounded = 1 << 28;

    bool exact() const { return lo == hi; }
    bool bounded() const { return hi < kUnbounded; }
    std::string to_string() const;
    friend bool operator==(const Bound&, const Bound&) = default;
};

enum class BoundSource { table, certificate, combiner };
std::string to_string(BoundSource s);

// One row of the bounds ledger: what is known about R(3,K_s) and
// R(3,K_s - e) = R(3,J_s), plus the shipped gap interval for
// delta_s = R(3,K_s) - R(3,K_{s-1}).
struct BoundsRow {
    int s = 0;
    Bound r3jse;
    Bound r3ks;
    Bound delta;
    BoundSource source = BoundSource::table;
};

struct ChainViolation {
    std::string inequality; // "(2)", "(3)", "(4)", "interval", "delta"
    int s = 0;
    std::string detail;
    std::string to_string() const;
};

// Registry of rows keyed by s. Single writer; reads are const.
class BoundsTable {
public:
    // The shipped reference data for 3 <= s <= 16, exactly as published.
    static BoundsTable table1();

    bool has_row(int s) const { return rows_.count(s) != 0; }
    const BoundsRow& row(int s) const;
    const std::map<int, BoundsRow>& rows() const { return rows_; }

    // Inserts or replaces one row wholesale.
    void set_row(const BoundsRow& row) { rows_[row.s] = row; }

    // Validates the certificate by re-running the solvers, raises the
    // matching lower bound to n+1, records the source, and returns the
    // result of a fresh chain check. Registration is idempotent.
    // Throws std::invalid_argument if the certificate does not verify.
    std::vector<ChainViolation> register_certificate(const Certificate& cert);

    std::vector<ChainViolation> check_chain() const;

    // Aligned text table; recomputes the gap column next to the shipped one.
    std::string render(int max_s = 0) const;

    // Machine-parsable form: one "row s=.. jse=lo:hi ks=lo:hi delta=lo:hi
    // source=.." line per row.
    std::string render_records(int max_s = 0) const;

private:
    BoundsRow& ensure_row(int s);
    std::map<int, BoundsRow> rows_;
};

// Upper bound on R(3,s+1) for s >= 3:
// floor( (s-1)^2 / (ln s - 1 + 1/s) + 1 ), natural logarithm.
int shearer_upper(int s);

// Gap interval for one s from the R(3,K_s) columns of rows s-1 and s,
// clamped to [3, s]. Throws when a required row is missing.
Bound delta_from_r(const BoundsTable& table, int s);
// Every s for which both rows are present and bounded.
std::map<int, Bound> delta_from_r(const BoundsTable& table);

// Exact telescoping identity R(3,s+k) - R(3,s-1) = sum of delta_{s+i},
// i = 0..k, over the shipped gap column. All rows s-1..s+k must be present
// and exact; otherwise throws std::invalid_argument.
bool telescoping_check(const BoundsTable& table, int s, int k);

// R(k,s) + R(k,t) + (k-3 if s = 2 else k-2), for 2 <= s <= t. R-values are
// looked up from exact known rows, which this artifact has for k = 3 only;
// anything else throws std::invalid_argument.
int theorem3_lower(const BoundsTable& table, int k, int s, int t);

// n(G) + n(H) + n(M) + 1; pure arithmetic.
int theorem2_lower(int n_g, int n_h, int n_m);

// Gap facts on exact rows: delta_s >= 3 for every s; consecutive pair sums
// >= 7 and triple sums >= 11 from s = 4 up (delta_3 + delta_4 = 6 is real,
// the pair and triple bounds only start one step later).
std::vector<ChainViolation> gst_facts_check(const BoundsTable& table);

// FNV-1a of the canonical serialization of table1; regression anchor.
std::uint64_t table1_checksum();

} // namespace ramsey
