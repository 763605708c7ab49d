#include "betpo/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace betpo {

namespace {

// Content lines with their 1-based line numbers, comments and blanks gone.
struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        lines.push_back({number, raw});
    }
    return lines;
}

struct Header {
    std::string kind;
    int n;
};

Header parse_header(const std::vector<Line>& lines, const std::string& expected_kind) {
    if (lines.empty()) throw ParseError(1, "empty input, expected '" + expected_kind + " <n>'");
    std::istringstream is(lines.front().text);
    Header h;
    std::string extra;
    if (!(is >> h.kind >> h.n) || (is >> extra)) {
        throw ParseError(lines.front().number, "malformed header, expected '<kind> <n>'");
    }
    if (h.kind != expected_kind) {
        throw ParseError(lines.front().number,
                         "expected a '" + expected_kind + "' file, got '" + h.kind + "'");
    }
    if (h.n < 0) throw ParseError(lines.front().number, "negative vertex count");
    return h;
}

std::vector<Vertex> parse_tuple(const Line& line, std::size_t arity, int n) {
    std::istringstream is(line.text);
    std::vector<Vertex> vs(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        if (!(is >> vs[i])) {
            throw ParseError(line.number,
                             "expected " + std::to_string(arity) + " integers");
        }
        if (vs[i] < 0 || vs[i] >= n) {
            throw ParseError(line.number, "vertex " + std::to_string(vs[i]) +
                                              " outside universe 0.." + std::to_string(n - 1));
        }
    }
    std::string extra;
    if (is >> extra) throw ParseError(line.number, "trailing tokens after tuple");
    return vs;
}

}  // namespace

TernaryStructure parse_structure(std::istream& in) {
    std::vector<Line> lines = content_lines(in);
    Header h = parse_header(lines, "ternary");
    std::vector<Triple> triples;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<Vertex> t = parse_tuple(lines[i], 3, h.n);
        triples.push_back({t[0], t[1], t[2]});
    }
    return TernaryStructure(h.n, std::move(triples));
}

Poset parse_poset(std::istream& in) {
    std::vector<Line> lines = content_lines(in);
    Header h = parse_header(lines, "poset");
    std::vector<Pair> pairs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<Vertex> t = parse_tuple(lines[i], 2, h.n);
        pairs.push_back({t[0], t[1]});
    }
    return poset_from_pairs(h.n, pairs);
}

void print_structure(std::ostream& out, const TernaryStructure& s) {
    out << "ternary " << s.size() << "\n";
    for (const Triple& t : s.triples()) out << t.x << " " << t.y << " " << t.z << "\n";
}

void print_poset(std::ostream& out, const Poset& p) {
    out << "poset " << p.size() << "\n";
    for (const Pair& q : p.pairs()) out << q.a << " " << q.b << "\n";
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    if (g.tagged()) {
        for (Vertex v : g.tag()) os << "  " << v << ";\n";
    } else {
        for (Vertex v = 0; v < g.size(); ++v) os << "  " << v << ";\n";
    }
    for (const Pair& e : g.edges()) os << "  " << e.a << " -- " << e.b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace betpo
