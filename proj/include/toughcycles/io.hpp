#ifndef TOUGHCYCLES_IO_HPP
#define TOUGHCYCLES_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "toughcycles/graph.hpp"

namespace toughcycles {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}
    std::size_t byte_offset;
};

// graph6: 6-bit big-endian packing of the upper triangle in the order
// (0,1),(0,2),(1,2),(0,3),... with every byte offset by 63. Accepts the
// optional ">>graph6<<" prefix; rejects trailing garbage, out-of-range
// bytes and nonzero padding.
Graph parse_graph6(std::string_view line);

// Canonical encoding: minimal-length size header, zero padding.
std::string write_graph6(const Graph& g);

// "n i1 j1 i2 j2 ...", whitespace separated; duplicate pairs collapse.
Graph parse_edge_list(std::string_view text);

}  // namespace toughcycles

#endif
