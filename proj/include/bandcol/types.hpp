#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bandcol {

// Vertices are 0-based in memory.  File formats and diagnostics use the
// 1-based ids of the instance files; parsers convert on the way in and
// writers convert on the way out.
using Vertex = std::int32_t;

// Colors are positive integers starting at 1.  The span of a coloring is
// its maximum color, which is also the number of colors charged to the
// objective.
using Color = std::int32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    std::int32_t dist = 1;
};

// A coloring assigns colors[v] to vertex v; every entry is >= 1.
using Coloring = std::vector<Color>;

// Error raised by the file parsers; carries the 1-based line number of the
// offending line (0 when the problem is not tied to a single line).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace bandcol
