#include "ptlab/digraph.hpp"

#include <string>

#include "ptlab/errors.hpp"

namespace ptlab {

Digraph::Digraph(std::size_t n) : out_(n, Bitset(n)) {}

Digraph Digraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  Digraph d(n);
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      throw InvalidArgument("arc (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range");
    }
    if (u == v) throw InvalidArgument("self-arc at vertex " + std::to_string(u));
    if (d.out_[u].test(v)) {
      throw InvalidArgument("duplicate arc (" + std::to_string(u) + ", " + std::to_string(v) +
                            ")");
    }
    d.out_[u].set(v);
    ++d.arc_count_;
  }
  return d;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u) {
    out_[u].for_each([&](std::size_t v) { out.emplace_back(u, v); });
  }
  return out;
}

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> s) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= d.order()) throw InvalidArgument("induced_subdigraph: vertex out of range");
    if (i > 0 && s[i] <= s[i - 1]) {
      throw InvalidArgument("induced_subdigraph: vertex set must be strictly ascending");
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i != j && d.has_arc(s[i], s[j])) arcs.emplace_back(i, j);
    }
  }
  return Digraph::from_arcs(s.size(), arcs);
}

}  // namespace ptlab
