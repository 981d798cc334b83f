#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "ptlab/digraph.hpp"
#include "ptlab/graph.hpp"

namespace ptlab {

// Plain-text edge lists.
//
//   # comment
//   n m              (undirected)   |   n m directed
//   u v              one line per edge (u < v) or arc (u -> v)
//
// Duplicates, self-loops, out-of-range indices and a wrong edge count are
// ParseErrors carrying the offending line number.

Graph read_graph(std::istream& in);
Digraph read_digraph(std::istream& in);
/// Dispatches on the header: a trailing `directed` token yields a Digraph.
std::variant<Graph, Digraph> read_any(std::istream& in);

void write_graph(std::ostream& out, const Graph& g);
void write_digraph(std::ostream& out, const Digraph& d);

Graph load_graph(const std::filesystem::path& path);
Digraph load_digraph(const std::filesystem::path& path);
std::variant<Graph, Digraph> load_any(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);
void save_digraph(const std::filesystem::path& path, const Digraph& d);

}  // namespace ptlab
