#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "betpo/core.hpp"
#include "betpo/graphs.hpp"

namespace betpo {

// Line-based text formats. A file is a header line declaring kind and
// vertex count ("ternary <n>" or "poset <n>") followed by one integer
// tuple per line: "x y z" for triples, "x y" for generator pairs (meaning
// x < y; the poset is closed transitively on load). Blank lines and lines
// whose first non-blank character is '#' are ignored. Output is ASCII with
// single spaces and a trailing newline per line.

struct ParseError : Error {
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Throw ParseError on malformed input; parse_poset additionally propagates
// CycleDetected when the generator pairs are cyclic.
TernaryStructure parse_structure(std::istream& in);
Poset parse_poset(std::istream& in);

void print_structure(std::ostream& out, const TernaryStructure& s);
// Prints the full transitive closure; parsing it back reproduces the poset.
void print_poset(std::ostream& out, const Poset& p);

// Undirected DOT graph. Tagged graphs list only the tagged vertices as
// nodes, everything else lists all vertices; edges follow.
std::string to_dot(const SimpleGraph& g, std::string_view name = "g");

}  // namespace betpo
