#include "hcolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace hcolor {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

// Next line that is neither blank nor a comment.
bool next_content_line(std::istream& in, std::size_t& counter, Line& out) {
    std::string text;
    while (std::getline(in, text)) {
        ++counter;
        auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#') continue;
        out = {counter, text};
        return true;
    }
    return false;
}

std::vector<std::uint64_t> parse_numbers(const Line& line) {
    std::vector<std::uint64_t> values;
    std::istringstream is(line.text);
    std::string token;
    while (is >> token) {
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError(line.number, "expected a non-negative integer, got '" + token + "'");
        try {
            values.push_back(std::stoull(token));
        } catch (const std::out_of_range&) {
            throw ParseError(line.number, "integer out of range: '" + token + "'");
        }
    }
    return values;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    return out;
}

} // namespace

Hypergraph read_hypergraph(std::istream& in) {
    std::size_t counter = 0;
    Line line;
    if (!next_content_line(in, counter, line)) throw ParseError(0, "missing header `k n m`");
    auto header = parse_numbers(line);
    if (header.size() != 3) throw ParseError(line.number, "malformed header: expected `k n m`");
    const std::size_t k = header[0], n = header[1], m = header[2];
    if (k < 2) throw ParseError(line.number, "malformed header: k must be at least 2");
    if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line.number, "malformed header: n too large");

    std::vector<std::vector<Vertex>> edges;
    std::vector<std::size_t> edge_line;
    edges.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        if (!next_content_line(in, counter, line))
            throw ParseError(counter, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(j));
        auto ids = parse_numbers(line);
        if (ids.size() != k)
            throw ParseError(line.number, "arity: edge has " + std::to_string(ids.size()) + " vertices, expected "
                                              + std::to_string(k));
        std::vector<Vertex> e;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] >= n)
                throw ParseError(line.number, "vertex " + std::to_string(ids[i]) + " outside [0, " + std::to_string(n)
                                                  + ")");
            if (i && ids[i] == ids[i - 1])
                throw ParseError(line.number, "edge has duplicate vertex " + std::to_string(ids[i]));
            if (i && ids[i] < ids[i - 1])
                throw ParseError(line.number, "vertex ids must be strictly ascending within an edge");
            e.push_back(static_cast<Vertex>(ids[i]));
        }
        edges.push_back(std::move(e));
        edge_line.push_back(line.number);
    }
    if (next_content_line(in, counter, line))
        throw ParseError(line.number, "unexpected content after " + std::to_string(m) + " edges");

    auto report = validate(n, k, edges);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        const std::size_t at = v.kind == Violation::Kind::simplicity ? v.other_edge : v.edge;
        throw ParseError(edge_line.at(at), v.message);
    }
    return Hypergraph::from_edges(n, k, std::move(edges));
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    auto edges = h.edge_list();
    std::sort(edges.begin(), edges.end());
    out << h.uniformity() << ' ' << h.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& e : edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

void write_hypergraph(const std::filesystem::path& path, const Hypergraph& h) {
    auto out = open_out(path);
    write_hypergraph(out, h);
}

Coloring read_coloring(std::istream& in) {
    std::size_t counter = 0;
    Line line;
    if (!next_content_line(in, counter, line)) throw ParseError(0, "missing header `q n`");
    auto header = parse_numbers(line);
    if (header.size() != 2) throw ParseError(line.number, "malformed header: expected `q n`");
    const std::uint64_t q = header[0], n = header[1];
    if (q < 1 || q > std::numeric_limits<Color>::max()) throw ParseError(line.number, "malformed header: bad q");

    std::vector<Color> colors;
    if (n > 0) {
        if (!next_content_line(in, counter, line)) throw ParseError(counter, "missing color line");
        auto values = parse_numbers(line);
        if (values.size() != n)
            throw ParseError(line.number, "expected " + std::to_string(n) + " colors, found "
                                              + std::to_string(values.size()));
        for (auto c : values) {
            if (c >= q) throw ParseError(line.number, "color " + std::to_string(c) + " outside [0, " + std::to_string(q) + ")");
            colors.push_back(static_cast<Color>(c));
        }
    }
    if (next_content_line(in, counter, line)) throw ParseError(line.number, "unexpected trailing content");
    return Coloring(static_cast<Color>(q), std::move(colors));
}

Coloring read_coloring(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& x) {
    out << x.palette_size() << ' ' << x.size() << '\n';
    for (std::size_t v = 0; v < x.size(); ++v) out << (v ? " " : "") << x[static_cast<Vertex>(v)];
    out << '\n';
}

void write_coloring(const std::filesystem::path& path, const Coloring& x) {
    auto out = open_out(path);
    write_coloring(out, x);
}

} // namespace hcolor
