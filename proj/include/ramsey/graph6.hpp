#pragma once

#include <stdexcept>
#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

class Graph6Error : public std::runtime_error {
public:
    enum class Code { malformed_header, length_mismatch, trailing_bits, unsupported_order };

    Graph6Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

// Standard graph6: N(n) header, then the upper triangle column-major in
// big-endian 6-bit groups, each byte offset by 63. Orders above 62 use the
// '~' three-sextet header.
std::string encode_graph6(const Graph& g);

// Inverse of encode_graph6. Throws Graph6Error with a distinct code for a
// bad header, a body of the wrong length, or nonzero padding bits.
Graph decode_graph6(const std::string& text);

} // namespace ramsey
