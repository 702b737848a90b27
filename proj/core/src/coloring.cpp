#include "hcolor/coloring.hpp"

#include <algorithm>

namespace hcolor {

Coloring::Coloring(std::size_t n, Color q, Color fill) : q_(q), colors_(n, fill) {
    if (q == 0) throw DomainError("palette size q must be at least 1");
    if (fill >= q) throw DomainError("fill color outside palette");
}

Coloring::Coloring(Color q, std::vector<Color> colors) : q_(q), colors_(std::move(colors)) {
    if (q == 0) throw DomainError("palette size q must be at least 1");
    for (std::size_t v = 0; v < colors_.size(); ++v)
        if (colors_[v] >= q)
            throw DomainError("vertex " + std::to_string(v) + " has color " + std::to_string(colors_[v])
                              + " outside [0, " + std::to_string(q) + ")");
}

void Coloring::set(Vertex v, Color c) {
    if (c >= q_) throw DomainError("color " + std::to_string(c) + " outside palette");
    colors_.at(v) = c;
}

namespace {

void check_dimensions(const Hypergraph& h, const Coloring& x) {
    if (x.size() != h.vertex_count())
        throw DomainError("coloring has " + std::to_string(x.size()) + " entries but hypergraph has "
                          + std::to_string(h.vertex_count()) + " vertices");
}

void check_vertex(const Hypergraph& h, Vertex v) {
    if (v >= h.vertex_count()) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

// Number of distinct colors on e \ {v}. Leaves them sorted at the front of `scratch`.
std::size_t punctured_distinct(const Hypergraph& h, const Coloring& x, EdgeId e, Vertex v,
                               std::vector<Color>& scratch) {
    scratch.clear();
    for (Vertex w : h.edge(e))
        if (w != v) scratch.push_back(x[w]);
    std::sort(scratch.begin(), scratch.end());
    return static_cast<std::size_t>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
}

} // namespace

ColorProfile profile(const Hypergraph& h, const Coloring& x, Vertex v) {
    check_dimensions(h, x);
    check_vertex(h, v);
    ColorProfile p;
    p.y.assign(h.uniformity() - 1, 0);
    std::vector<bool> is_blocked(x.palette_size(), false);
    std::vector<Color> scratch;
    for (EdgeId e : h.incident(v)) {
        const auto distinct = punctured_distinct(h, x, e, v, scratch);
        ++p.y[distinct - 1];
        if (distinct == 1) is_blocked[scratch.front()] = true;
    }
    for (Color c = 0; c < x.palette_size(); ++c) (is_blocked[c] ? p.blocked : p.available).push_back(c);
    return p;
}

std::vector<std::size_t> edge_color_counts(const Hypergraph& h, const Coloring& x, Vertex v) {
    check_dimensions(h, x);
    check_vertex(h, v);
    std::vector<std::size_t> y(h.uniformity() - 1, 0);
    std::vector<Color> scratch;
    for (EdgeId e : h.incident(v)) ++y[punctured_distinct(h, x, e, v, scratch) - 1];
    return y;
}

std::vector<Color> available_colors(const Hypergraph& h, const Coloring& x, Vertex v) {
    check_dimensions(h, x);
    check_vertex(h, v);
    std::vector<bool> is_blocked(x.palette_size(), false);
    for (EdgeId e : h.incident(v)) {
        Color shared = 0;
        bool first = true, mono = true;
        for (Vertex w : h.edge(e)) {
            if (w == v) continue;
            if (first) {
                shared = x[w];
                first = false;
            } else if (x[w] != shared) {
                mono = false;
                break;
            }
        }
        if (mono && !first) is_blocked[shared] = true;
    }
    std::vector<Color> out;
    out.reserve(x.palette_size());
    for (Color c = 0; c < x.palette_size(); ++c)
        if (!is_blocked[c]) out.push_back(c);
    return out;
}

bool is_proper(const Hypergraph& h, const Coloring& x) {
    check_dimensions(h, x);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        auto s = h.edge(e);
        const Color c = x[s.front()];
        if (std::all_of(s.begin() + 1, s.end(), [&](Vertex w) { return x[w] == c; })) return false;
    }
    return true;
}

std::size_t min_available(const Hypergraph& h, const Coloring& x) {
    std::size_t best = x.palette_size();
    for (Vertex v = 0; v < h.vertex_count(); ++v) best = std::min(best, available_colors(h, x, v).size());
    return best;
}

std::size_t hamming(const Coloring& a, const Coloring& b) {
    if (a.size() != b.size()) throw DomainError("hamming distance of colorings with different sizes");
    std::size_t d = 0;
    for (std::size_t v = 0; v < a.size(); ++v) d += a[static_cast<Vertex>(v)] != b[static_cast<Vertex>(v)];
    return d;
}

} // namespace hcolor
