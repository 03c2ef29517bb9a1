#include "ramsey/certificate_doc.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

std::string hex64(std::uint64_t x)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::string edges_field(const std::vector<Edge>& edges)
{
    if (edges.empty())
        return "-";
    std::string out;
    for (const auto& [u, v] : edges) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

std::string claim_field(const WitnessClaim& claim)
{
    return "kind=" + to_string(claim.kind) + " s=" + std::to_string(claim.s) +
           " n=" + std::to_string(claim.n);
}

WitnessClaim parse_claim_field(const std::string& value)
{
    char kind[8] = {0};
    int s = 0, n = 0;
    if (std::sscanf(value.c_str(), "kind=%7s s=%d n=%d", kind, &s, &n) != 3)
        throw DocumentError("bad claim line: " + value);
    auto k = claim_kind_from_string(kind);
    if (!k)
        throw DocumentError("unknown claim kind: " + std::string(kind));
    return {*k, s, n};
}

} // namespace

std::string certificate_to_text(const Certificate& cert, const ConstructionTrace* trace)
{
    std::ostringstream os;
    os << "schema: ramsey-cert/1\n";
    os << "claim: " << claim_field(cert.claim) << "\n";
    os << "graph6: " << encode_graph6(cert.graph) << "\n";
    os << "edges: " << edges_field(cert.graph.edges()) << "\n";
    os << "triangle_free: " << (cert.triangle_free ? "true" : "false") << "\n";
    os << "alpha: " << cert.alpha << "\n";
    os << "js_free: " << (cert.js_free ? (*cert.js_free ? "true" : "false") : "-") << "\n";
    os << "provenance: " << (cert.provenance.empty() ? "-" : cert.provenance) << "\n";
    os << "chosen:";
    if (cert.chosen.empty())
        os << " -";
    else
        for (int v : cert.chosen)
            os << ' ' << v;
    os << "\n";
    os << "inputs:";
    if (cert.input_hashes.empty())
        os << " -";
    else
        for (std::uint64_t h : cert.input_hashes)
            os << ' ' << hex64(h);
    os << "\n";
    char solver[80];
    std::snprintf(solver, sizeof solver, "solver: nodes=%llu wall_ms=%.3f\n",
                  static_cast<unsigned long long>(cert.solver.nodes), cert.solver.wall_ms);
    os << solver;
    if (trace)
        for (const auto& [name, set] : trace->parts)
            os << "part " << name << ": "
               << (set.empty() ? std::string("-") : set.to_string()) << "\n";
    return os.str();
}

Certificate certificate_from_text(const std::string& text)
{
    std::map<std::string, std::string> fields;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line.rfind("part ", 0) == 0)
            continue;
        auto colon = line.find(": ");
        if (colon == std::string::npos) {
            if (!line.empty() && line.back() == ':')
                fields[line.substr(0, line.size() - 1)] = "";
            continue;
        }
        fields[line.substr(0, colon)] = line.substr(colon + 2);
    }
    auto need = [&fields](const std::string& key) -> const std::string& {
        auto it = fields.find(key);
        if (it == fields.end())
            throw DocumentError("missing field: " + key);
        return it->second;
    };

    if (need("schema") != "ramsey-cert/1")
        throw DocumentError("unsupported schema: " + need("schema"));

    Certificate cert;
    cert.claim = parse_claim_field(need("claim"));
    cert.graph = decode_graph6(need("graph6"));
    cert.triangle_free = need("triangle_free") == "true";
    cert.alpha = std::stoi(need("alpha"));
    const std::string& js = need("js_free");
    if (js != "-")
        cert.js_free = js == "true";
    cert.provenance = need("provenance") == "-" ? "" : need("provenance");

    const std::string& chosen = need("chosen");
    if (chosen != "-") {
        std::istringstream cs(chosen);
        int v;
        while (cs >> v)
            cert.chosen.push_back(v);
    }
    const std::string& inputs = need("inputs");
    if (inputs != "-") {
        std::istringstream hs(inputs);
        std::string h;
        while (hs >> h)
            cert.input_hashes.push_back(std::stoull(h, nullptr, 16));
    }
    unsigned long long nodes = 0;
    double wall = 0;
    std::sscanf(need("solver").c_str(), "nodes=%llu wall_ms=%lf", &nodes, &wall);
    cert.solver = {nodes, wall};

    // internal consistency: the edge list must match the decoded graph
    std::string listed = need("edges");
    std::string decoded = edges_field(cert.graph.edges());
    if (listed != decoded)
        throw DocumentError("edge list does not match the graph6 field");
    if (cert.claim.n != cert.graph.order())
        throw DocumentError("claim order does not match the graph");
    return cert;
}

std::string failure_to_text(const WitnessClaim& claim, const WitnessFailure& failure)
{
    std::ostringstream os;
    os << "schema: ramsey-fail/1\n";
    os << "claim: " << claim_field(claim) << "\n";
    os << "predicate: " << failure.predicate << "\n";
    os << "witness: " << failure.witness.to_string() << "\n";
    return os.str();
}

} // namespace ramsey
