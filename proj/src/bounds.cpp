#include "ramsey/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ramsey {

std::string Bound::to_string() const
{
    if (!bounded())
        return std::to_string(lo) + "-?";
    if (exact())
        return std::to_string(lo);
    return std::to_string(lo) + "-" + std::to_string(hi);
}

std::string to_string(BoundSource s)
{
    switch (s) {
    case BoundSource::table: return "table";
    case BoundSource::certificate: return "certificate";
    case BoundSource::combiner: return "combiner";
    }
    return "?";
}

std::string ChainViolation::to_string() const
{
    return inequality + " at s=" + std::to_string(s) + ": " + detail;
}

BoundsTable BoundsTable::table1()
{
    // s, R(3,J_s) lo-hi, R(3,K_s) lo-hi, delta lo-hi
    static constexpr int data[][7] = {
        {3, 5, 5, 6, 6, 3, 3},      {4, 7, 7, 9, 9, 3, 3},
        {5, 11, 11, 14, 14, 5, 5},  {6, 17, 17, 18, 18, 4, 4},
        {7, 21, 21, 23, 23, 5, 5},  {8, 25, 25, 28, 28, 5, 5},
        {9, 31, 31, 36, 36, 8, 8},  {10, 37, 37, 40, 42, 4, 6},
        {11, 42, 45, 47, 50, 5, 10}, {12, 47, 53, 52, 59, 3, 12},
        {13, 55, 62, 59, 68, 3, 13}, {14, 59, 71, 66, 77, 3, 14},
        {15, 69, 80, 73, 87, 3, 15}, {16, 73, 91, 82, 98, 3, 16},
    };
    BoundsTable t;
    for (const auto& d : data)
        t.rows_[d[0]] = BoundsRow{d[0], {d[1], d[2]}, {d[3], d[4]}, {d[5], d[6]},
                                  BoundSource::table};
    return t;
}

const BoundsRow& BoundsTable::row(int s) const
{
    auto it = rows_.find(s);
    if (it == rows_.end())
        throw std::invalid_argument("no bounds row for s=" + std::to_string(s));
    return it->second;
}

BoundsRow& BoundsTable::ensure_row(int s)
{
    auto it = rows_.find(s);
    if (it == rows_.end()) {
        BoundsRow fresh;
        fresh.s = s;
        fresh.r3jse = {1, Bound::kUnbounded};
        fresh.r3ks = {1, Bound::kUnbounded};
        fresh.delta = {3, s}; // a priori gap range
        fresh.source = BoundSource::combiner;
        it = rows_.emplace(s, fresh).first;
    }
    return it->second;
}

std::vector<ChainViolation> BoundsTable::register_certificate(const Certificate& cert)
{
    if (!cert.valid())
        throw std::invalid_argument("certificate is not valid for its claim");
    CertifyResult recheck = certify(cert.graph, cert.claim);
    auto* fresh = std::get_if<Certificate>(&recheck);
    if (!fresh || fresh->alpha != cert.alpha)
        throw std::invalid_argument("certificate facts do not reproduce");

    BoundsRow& r = ensure_row(cert.claim.s);
    int implied = cert.claim.n + 1;
    Bound& target = cert.claim.kind == ClaimKind::ks ? r.r3ks : r.r3jse;
    if (implied > target.lo) {
        target.lo = implied;
        r.source = BoundSource::certificate;
    }
    // row closure under R(3,J_s) <= R(3,K_s): a J_s witness bounds K_s too
    if (r.r3ks.lo < r.r3jse.lo)
        r.r3ks.lo = r.r3jse.lo;
    return check_chain();
}

std::vector<ChainViolation> BoundsTable::check_chain() const
{
    std::vector<ChainViolation> out;
    auto flag = [&out](const char* ineq, int s, std::string detail) {
        out.push_back({ineq, s, std::move(detail)});
    };

    for (const auto& [s, r] : rows_) {
        if (r.r3jse.lo > r.r3jse.hi)
            flag("interval", s, "R(3,Js) interval empty: " + r.r3jse.to_string());
        if (r.r3ks.lo > r.r3ks.hi)
            flag("interval", s, "R(3,Ks) interval empty: " + r.r3ks.to_string());
        if (r.delta.lo > r.delta.hi)
            flag("interval", s, "delta interval empty: " + r.delta.to_string());
        // (3) within the row: both bound columns are monotone under J_s <= K_s
        if (r.r3jse.lo > r.r3ks.lo)
            flag("(3)", s,
                 "R(3,Js) lower " + std::to_string(r.r3jse.lo) + " exceeds R(3,Ks) lower " +
                     std::to_string(r.r3ks.lo));
        if (r.r3jse.hi > r.r3ks.hi)
            flag("(3)", s,
                 "R(3,Js) upper " + std::to_string(r.r3jse.hi) + " exceeds R(3,Ks) upper " +
                     std::to_string(r.r3ks.hi));

        auto prev = rows_.find(s - 1);
        if (prev != rows_.end()) {
            const BoundsRow& p = prev->second;
            // (2): 3 <= R(3,Ks) - R(3,K_{s-1}) <= s must stay achievable
            if (p.r3ks.bounded() && r.r3ks.lo - p.r3ks.hi > s)
                flag("(2)", s,
                     "delta range: gap at least " + std::to_string(r.r3ks.lo - p.r3ks.hi) +
                         " exceeds s");
            if (r.r3ks.bounded() && r.r3ks.hi - p.r3ks.lo < 3)
                flag("(2)", s,
                     "delta range: gap at most " + std::to_string(r.r3ks.hi - p.r3ks.lo) +
                         " below 3");
            // (3) across rows: R(3,K_{s-1}) <= R(3,Js)
            if (r.r3jse.bounded() && r.r3jse.hi < p.r3ks.lo)
                flag("(3)", s,
                     "R(3,Js) upper " + std::to_string(r.r3jse.hi) + " below R(3,K_{s-1}) lower " +
                         std::to_string(p.r3ks.lo));
            // delta column must overlap the recomputation from the R columns
            if (p.r3ks.bounded() && r.r3ks.bounded()) {
                int lo = std::max(r.r3ks.lo - p.r3ks.hi, 3);
                int hi = std::min(r.r3ks.hi - p.r3ks.lo, s);
                if (hi < r.delta.lo || lo > r.delta.hi)
                    flag("delta", s,
                         "shipped delta " + r.delta.to_string() + " disjoint from recomputed " +
                             Bound{lo, hi}.to_string());
            }
        }
        auto next = rows_.find(s + 1);
        if (next != rows_.end()) {
            // (4): R(3,K_{s+1}) - R(3,Js) >= 4 must stay achievable
            const BoundsRow& nx = next->second;
            if (nx.r3ks.bounded() && nx.r3ks.hi - r.r3jse.lo < 4)
                flag("(4)", s,
                     "R(3,K_{s+1}) - R(3,Js) at most " + std::to_string(nx.r3ks.hi - r.r3jse.lo));
        }
    }
    return out;
}

std::string BoundsTable::render(int max_s) const
{
    std::map<int, Bound> recomputed = delta_from_r(*this);
    std::ostringstream os;
    os << "  s  R(3,Js)  R(3,Ks)  delta  delta_from_r  source\n";
    char line[128];
    for (const auto& [s, r] : rows_) {
        if (max_s > 0 && s > max_s)
            break;
        auto it = recomputed.find(s);
        std::string re = it == recomputed.end() ? "-" : it->second.to_string();
        std::snprintf(line, sizeof line, "%3d  %-7s  %-7s  %-5s  %-12s  %s\n", s,
                      r.r3jse.to_string().c_str(), r.r3ks.to_string().c_str(),
                      r.delta.to_string().c_str(), re.c_str(), to_string(r.source).c_str());
        os << line;
    }
    return os.str();
}

std::string BoundsTable::render_records(int max_s) const
{
    std::ostringstream os;
    auto interval = [](const Bound& b) {
        return std::to_string(b.lo) + ":" +
               (b.bounded() ? std::to_string(b.hi) : std::string("inf"));
    };
    for (const auto& [s, r] : rows_) {
        if (max_s > 0 && s > max_s)
            break;
        os << "row s=" << s << " jse=" << interval(r.r3jse) << " ks=" << interval(r.r3ks)
           << " delta=" << interval(r.delta) << " source=" << to_string(r.source) << "\n";
    }
    return os.str();
}

int shearer_upper(int s)
{
    if (s < 3)
        throw std::invalid_argument("shearer_upper requires s >= 3");
    double sd = s;
    double value = (sd - 1.0) * (sd - 1.0) / (std::log(sd) - 1.0 + 1.0 / sd) + 1.0;
    return static_cast<int>(std::floor(value));
}

Bound delta_from_r(const BoundsTable& table, int s)
{
    const BoundsRow& r = table.row(s);
    const BoundsRow& p = table.row(s - 1);
    if (!r.r3ks.bounded() || !p.r3ks.bounded())
        throw std::invalid_argument("delta_from_r needs bounded R(3,Ks) rows");
    int lo = std::max(r.r3ks.lo - p.r3ks.hi, 3);
    int hi = std::min(r.r3ks.hi - p.r3ks.lo, s);
    return {lo, hi};
}

std::map<int, Bound> delta_from_r(const BoundsTable& table)
{
    std::map<int, Bound> out;
    for (const auto& [s, r] : table.rows())
        if (table.has_row(s - 1) && r.r3ks.bounded() && table.row(s - 1).r3ks.bounded())
            out[s] = delta_from_r(table, s);
    return out;
}

bool telescoping_check(const BoundsTable& table, int s, int k)
{
    if (k < 0)
        throw std::invalid_argument("telescoping_check requires k >= 0");
    for (int i = s - 1; i <= s + k; ++i) {
        const BoundsRow& r = table.row(i);
        if (!r.r3ks.exact() || (i >= s && !r.delta.exact()))
            throw std::invalid_argument("telescoping_check needs exact rows; s=" +
                                        std::to_string(i) + " is an interval");
    }
    int lhs = table.row(s + k).r3ks.lo - table.row(s - 1).r3ks.lo;
    int rhs = 0;
    for (int i = 0; i <= k; ++i)
        rhs += table.row(s + i).delta.lo;
    return lhs == rhs;
}

namespace {

// Exact R(k,s) values available to the combiners: the k = 3 column.
std::optional<int> exact_r3(const BoundsTable& table, int s)
{
    if (s == 1)
        return 1;
    if (s == 2)
        return 3;
    if (table.has_row(s) && table.row(s).r3ks.exact())
        return table.row(s).r3ks.lo;
    return std::nullopt;
}

} // namespace

int theorem3_lower(const BoundsTable& table, int k, int s, int t)
{
    if (k < 3 || s < 2 || s > t)
        throw std::invalid_argument("theorem3_lower requires k >= 3 and 2 <= s <= t");
    if (k != 3)
        throw std::invalid_argument("exact R(k,s) values are only known here for k = 3");
    std::optional<int> rs = exact_r3(table, s);
    std::optional<int> rt = exact_r3(table, t);
    if (!rs || !rt)
        throw std::invalid_argument("no exact R(3,s) value for the requested arguments");
    return *rs + *rt + (s == 2 ? k - 3 : k - 2);
}

int theorem2_lower(int n_g, int n_h, int n_m)
{
    if (n_g < 0 || n_h < 0 || n_m < 0)
        throw std::invalid_argument("orders must be nonnegative");
    return n_g + n_h + n_m + 1;
}

std::vector<ChainViolation> gst_facts_check(const BoundsTable& table)
{
    std::vector<ChainViolation> out;
    auto exact_delta = [&table](int s) -> std::optional<int> {
        if (!table.has_row(s) || !table.row(s).delta.exact())
            return std::nullopt;
        return table.row(s).delta.lo;
    };
    for (const auto& [s, r] : table.rows()) {
        std::optional<int> d0 = exact_delta(s);
        if (!d0)
            continue;
        if (*d0 < 3)
            out.push_back({"gst", s, "delta_s = " + std::to_string(*d0) + " below 3"});
        if (s < 4)
            continue;
        std::optional<int> d1 = exact_delta(s + 1);
        if (d1 && *d0 + *d1 < 7)
            out.push_back({"gst", s,
                           "delta_s + delta_{s+1} = " + std::to_string(*d0 + *d1) + " below 7"});
        std::optional<int> d2 = exact_delta(s + 2);
        if (d1 && d2 && *d0 + *d1 + *d2 < 11)
            out.push_back({"gst", s,
                           "delta_s + delta_{s+1} + delta_{s+2} = " +
                               std::to_string(*d0 + *d1 + *d2) + " below 11"});
    }
    return out;
}

std::uint64_t table1_checksum()
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](int x) {
        for (int i = 0; i < 4; ++i) {
            h ^= (static_cast<std::uint32_t>(x) >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    BoundsTable table = BoundsTable::table1();
    for (const auto& [s, r] : table.rows()) {
        mix(s);
        mix(r.r3jse.lo);
        mix(r.r3jse.hi);
        mix(r.r3ks.lo);
        mix(r.r3ks.hi);
        mix(r.delta.lo);
        mix(r.delta.hi);
    }
    return h;
}

} // namespace ramsey
