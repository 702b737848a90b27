#pragma once

#include "hcolor/coloring.hpp"
#include "hcolor/hypergraph.hpp"

#include <filesystem>
#include <iosfwd>

namespace hcolor {

// Hypergraph text format:
//   line 1     `k n m`
//   m lines    k space-separated vertex ids, ascending within the line
// Lines starting with '#' are comments. Writers emit edges in lexicographic order.

Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph(const std::filesystem::path& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_hypergraph(const std::filesystem::path& path, const Hypergraph& h);

// Coloring text format: line 1 `q n`, line 2 n space-separated colors.

Coloring read_coloring(std::istream& in);
Coloring read_coloring(const std::filesystem::path& path);
void write_coloring(std::ostream& out, const Coloring& x);
void write_coloring(const std::filesystem::path& path, const Coloring& x);

} // namespace hcolor
