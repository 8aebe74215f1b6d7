#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pisz/graph.hpp"

namespace pisz {

/// Malformed graph6 input. `offset` is the byte position of the first bad byte.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 line (no trailing newline). Orders up to kMaxOrder.
Graph parse_graph6(std::string_view text);

/// Encodes with the one-byte header; throws GraphError when n > 62.
std::string write_graph6(const Graph& g);

/// Line reader over a graph6 stream. Skips blank lines and the optional
/// ">>graph6<<" prefix; yields raw lines so callers can report parse errors
/// without aborting the stream.
class Graph6LineReader {
public:
    explicit Graph6LineReader(std::istream& in) : in_(in) {}

    /// Next nonblank payload, or nullopt at end of stream.
    std::optional<std::string> next();

    /// 1-based line number of the last returned payload.
    std::size_t line_number() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

}  // namespace pisz
