#pragma once

#include "hcolor/hypergraph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hcolor {

using Color = std::uint32_t;

/// Assignment V -> {0..q-1}. Plain value type.
class Coloring {
public:
    Coloring() = default;
    /// n vertices all colored `fill`.
    Coloring(std::size_t n, Color q, Color fill = 0);
    /// Throws DomainError if q == 0 or any color is >= q.
    Coloring(Color q, std::vector<Color> colors);

    std::size_t size() const noexcept { return colors_.size(); }
    Color palette_size() const noexcept { return q_; }

    Color operator[](Vertex v) const { return colors_[v]; }
    void set(Vertex v, Color c);

    std::span<const Color> colors() const noexcept { return colors_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    Color q_ = 1;
    std::vector<Color> colors_;
};

/// Per-vertex edge-color profile under a coloring.
struct ColorProfile {
    /// y[i-1] = number of edges e ∋ v whose other k-1 vertices use exactly i
    /// distinct colors, for i = 1..k-1.
    std::vector<std::size_t> y;
    /// Colors c such that some edge through v has every other vertex colored c. Ascending.
    std::vector<Color> blocked;
    /// Complement of `blocked` in {0..q-1}. Ascending.
    std::vector<Color> available;

    std::size_t count(std::size_t distinct) const { return y.at(distinct - 1); }
};

/// Throws DomainError on a dimension mismatch or out-of-range v.
ColorProfile profile(const Hypergraph& h, const Coloring& x, Vertex v);

/// Only the y counts; y[i-1] as in ColorProfile. Hot path for goodness checks.
std::vector<std::size_t> edge_color_counts(const Hypergraph& h, const Coloring& x, Vertex v);

/// A(v, X) in ascending order. Depends only on the colors of vertices other than v.
std::vector<Color> available_colors(const Hypergraph& h, const Coloring& x, Vertex v);

/// True iff no edge is monochromatic.
bool is_proper(const Hypergraph& h, const Coloring& x);

/// min over v of |A(v, X)|; q when n == 0.
std::size_t min_available(const Hypergraph& h, const Coloring& x);

/// Number of vertices where the two colorings differ. Sizes must match.
std::size_t hamming(const Coloring& a, const Coloring& b);

} // namespace hcolor
