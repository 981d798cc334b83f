#include "ptlab/labeling.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "ptlab/errors.hpp"

namespace ptlab {

namespace {
constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
constexpr std::array<const char*, 8> kNames = {"V1", "V2", "V3", "V4", "V5", "X", "Y", "Z"};
}  // namespace

bool is_known_part_name(const std::string& name) {
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

PartLabeling::PartLabeling(std::size_t n, std::vector<Part> parts, bool allow_empty_parts)
    : parts_(std::move(parts)), part_of_(n, kUnassigned) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    auto& p = parts_[i];
    if (!is_known_part_name(p.name)) throw InvalidArgument("unknown part name '" + p.name + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (parts_[j].name == p.name) throw InvalidArgument("duplicate part name '" + p.name + "'");
    }
    if (p.vertices.empty() && !allow_empty_parts) {
      throw InvalidArgument("part '" + p.name + "' is empty");
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    for (Vertex v : p.vertices) {
      if (v >= n) throw InvalidArgument("part '" + p.name + "' has out-of-range vertex");
      if (part_of_[v] != kUnassigned) {
        throw InvalidArgument("vertex " + std::to_string(v) + " appears in two parts");
      }
      part_of_[v] = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (part_of_[v] == kUnassigned) {
      throw InvalidArgument("vertex " + std::to_string(v) + " is not covered by the labeling");
    }
  }
}

PartLabeling PartLabeling::from_assignment(const std::vector<std::size_t>& part_of,
                                           std::vector<std::string> names,
                                           bool allow_empty_parts) {
  std::vector<Part> parts;
  parts.reserve(names.size());
  for (auto& name : names) parts.push_back(Part{std::move(name), {}});
  for (std::size_t v = 0; v < part_of.size(); ++v) {
    if (part_of[v] >= parts.size()) throw InvalidArgument("part index out of range");
    parts[part_of[v]].vertices.push_back(v);
  }
  return PartLabeling(part_of.size(), std::move(parts), allow_empty_parts);
}

std::optional<std::size_t> PartLabeling::find(const std::string& name) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].name == name) return i;
  }
  return std::nullopt;
}

PartLabeling PartLabeling::restrict_to(std::span<const Vertex> s) const {
  std::vector<std::size_t> assignment;
  assignment.reserve(s.size());
  for (Vertex v : s) assignment.push_back(part_of(v));
  std::vector<std::string> names;
  for (const auto& p : parts_) names.push_back(p.name);
  return from_assignment(assignment, std::move(names), true);
}

}  // namespace ptlab
