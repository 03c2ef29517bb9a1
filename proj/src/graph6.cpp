#include "ramsey/graph6.hpp"

#include <vector>

namespace ramsey {

namespace {

constexpr int kShortMax = 62;

int body_bytes(int n)
{
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    return static_cast<int>((bits + 5) / 6);
}

} // namespace

std::string encode_graph6(const Graph& g)
{
    int n = g.order();
    std::string out;
    if (n <= kShortMax) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    }
    int accum = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            accum = (accum << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out += static_cast<char>(accum + 63);
                accum = 0;
                nbits = 0;
            }
        }
    if (nbits > 0)
        out += static_cast<char>((accum << (6 - nbits)) + 63);
    return out;
}

Graph decode_graph6(const std::string& text)
{
    if (text.empty())
        throw Graph6Error(Graph6Error::Code::malformed_header, "empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw Graph6Error(Graph6Error::Code::malformed_header,
                              "byte out of graph6 range: " + std::to_string(int(c)));

    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw Graph6Error(Graph6Error::Code::unsupported_order,
                              "eight-byte graph6 orders are not supported");
        if (text.size() < 4)
            throw Graph6Error(Graph6Error::Code::malformed_header,
                              "truncated long-form order header");
        n = (static_cast<long long>(text[1] - 63) << 12) |
            (static_cast<long long>(text[2] - 63) << 6) | static_cast<long long>(text[3] - 63);
        pos = 4;
    } else {
        n = text[0] - 63;
        pos = 1;
    }
    if (n > Graph::max_vertices)
        throw Graph6Error(Graph6Error::Code::unsupported_order,
                          "order " + std::to_string(n) + " exceeds the vertex cap " +
                              std::to_string(Graph::max_vertices));

    int need = body_bytes(static_cast<int>(n));
    if (static_cast<int>(text.size() - pos) != need)
        throw Graph6Error(Graph6Error::Code::length_mismatch,
                          "expected " + std::to_string(need) + " body bytes for order " +
                              std::to_string(n) + ", got " + std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    int accum = 0, nbits = 0;
    std::size_t at = pos;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                accum = text[at++] - 63;
                nbits = 6;
            }
            if ((accum >> (nbits - 1)) & 1)
                edges.emplace_back(u, v);
            --nbits;
        }
    if (nbits > 0 && (accum & ((1 << nbits) - 1)) != 0)
        throw Graph6Error(Graph6Error::Code::trailing_bits, "nonzero padding bits");
    return Graph::from_edges(static_cast<int>(n), edges);
}

} // namespace ramsey
