#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cdv/graph.hpp"

namespace cdv {

inline constexpr int kCanonicalMaxVertices = 10;

/// Upper-triangle adjacency string of a canonically relabeled graph, column
/// order, first pair in the most significant bit. C(10,2) = 45 bits fit in
/// one word, so comparison of `bits` is lexicographic comparison of strings.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalForm&) const = default;

  Graph to_graph() const;
  /// Bit string in column order, e.g. "111111" for K_4.
  std::string to_bitstring() const;
};

/// Position -> original vertex for the canonical relabeling.
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> order;
};

/// Lexicographically greatest upper-triangle string over all vertex orders
/// that respect the degree-refined colour partition. Isomorphic graphs get
/// equal forms and only those. Throws CapacityError for n > 10.
CanonicalForm canonical_form(const Graph& g);
CanonicalLabeling canonical_labeling(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace cdv

template <>
struct std::hash<cdv::CanonicalForm> {
  std::size_t operator()(const cdv::CanonicalForm& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(c.n));
  }
};
