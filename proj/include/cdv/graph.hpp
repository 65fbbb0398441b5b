#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cdv {

using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} stored as one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Adjacency is one VertexSet per vertex. The null graph (n = 0) is a valid
/// value so that joins and unions have an identity; operations that need a
/// vertex reject it explicitly.
class Graph {
 public:
  Graph() = default;

  /// Throws CapacityError when n > 64, PreconditionError on loops or
  /// out-of-range endpoints. Duplicate edges are merged.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from raw adjacency rows; rows must be symmetric and loop-free.
  static Graph from_adjacency(int n, std::span<const VertexSet> rows);

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  int min_degree() const;
  int max_degree() const;
  std::vector<int> degree_sequence() const;  // descending
  std::vector<Edge> edges() const;            // (u, v) with u < v, lexicographic

  bool is_edgeless() const { return m_ == 0; }
  bool is_complete() const { return 2 * m_ == n_ * (n_ - 1); }
  bool is_clique(VertexSet s) const;

  /// Connected components as vertex sets, ordered by smallest vertex.
  std::vector<VertexSet> components() const;
  bool is_connected() const { return n_ <= 1 || components().size() == 1; }

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Operations. All are pure; none modify their arguments.

Graph complement(const Graph& g);
/// Disjoint union of g and h (h's vertices shifted by |V(g)|) plus all cross edges.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Merged vertex takes label min(u, v); vertices above max(u, v) shift down by one.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);
/// Vertices of s are relabeled 0..|s|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, Vertex v);
Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph remove_edge(const Graph& g, Vertex u, Vertex v);
/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Two graphs glued along cliques of equal size. leftClique[i] is identified
/// with rightClique[i]; both must induce complete subgraphs.
struct CliqueSumSpec {
  Graph left;
  Graph right;
  std::vector<Vertex> leftClique;
  std::vector<Vertex> rightClique;
};

/// Result keeps left's labels; right's non-clique vertices follow in order.
/// No glue edges are removed.
Graph pure_clique_sum(const CliqueSumSpec& spec);

// Named constructors.

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph edgeless(int n);
Graph complete_multipartite(std::span<const int> parts);
Graph complete_multipartite(std::initializer_list<int> parts);
Graph star(int leaves);
Graph petersen();
/// Three paths of length two sharing one endpoint (7 vertices, centre 0).
Graph p32();
/// K_t with the three edges of a triangle removed.
Graph k_minus_triangle(int t);
/// Edge-maximal planar graph grown from K_4 by stacking vertices into faces
/// chosen by a minstd_rand sequence seeded with `seed`.
Graph stacked_triangulation(int n, std::uint64_t seed);

std::string to_string(const Graph& g);

}  // namespace cdv
