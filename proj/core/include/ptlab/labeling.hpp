#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ptlab/graph.hpp"

namespace ptlab {

struct Part {
  std::string name;
  VertexSet vertices;
};

/// Ordered assignment of vertices 0..n-1 to named roles (V1..V5 or X/Y/Z).
class PartLabeling {
 public:
  PartLabeling() = default;

  /// Validates names, disjointness and coverage of 0..n-1. Empty parts are
  /// rejected unless allow_empty_parts is set.
  PartLabeling(std::size_t n, std::vector<Part> parts, bool allow_empty_parts = false);

  /// Builds a labeling from a per-vertex part index.
  static PartLabeling from_assignment(const std::vector<std::size_t>& part_of,
                                      std::vector<std::string> names,
                                      bool allow_empty_parts = false);

  std::size_t vertex_count() const noexcept { return part_of_.size(); }
  std::size_t part_count() const noexcept { return parts_.size(); }
  const std::vector<Part>& parts() const noexcept { return parts_; }
  const Part& part(std::size_t i) const { return parts_.at(i); }
  /// Position of part named `name`, if any.
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t part_of(Vertex v) const { return part_of_.at(v); }

  /// Restriction to an ascending vertex subset, renumbered as in
  /// induced_subgraph. Empty parts are kept.
  PartLabeling restrict_to(std::span<const Vertex> s) const;

  friend bool operator==(const PartLabeling& a, const PartLabeling& b) {
    if (a.parts_.size() != b.parts_.size()) return false;
    for (std::size_t i = 0; i < a.parts_.size(); ++i) {
      if (a.parts_[i].name != b.parts_[i].name || a.parts_[i].vertices != b.parts_[i].vertices) {
        return false;
      }
    }
    return a.part_of_ == b.part_of_;
  }

 private:
  std::vector<Part> parts_;
  std::vector<std::size_t> part_of_;
};

/// True if names is one of the recognised role vocabularies.
bool is_known_part_name(const std::string& name);

}  // namespace ptlab
