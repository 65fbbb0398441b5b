#pragma once

#include <optional>
#include <vector>

#include "cdv/graph.hpp"

namespace cdv {

/// How mu is reported for edgeless graphs on two or more vertices. `paper`
/// takes the maximum over components (each K_1, so 0); `matrix` uses the
/// value forced by the matrix definition (1, witnessed by diag(-1, 0, 1, ..., 1)).
enum class EdgelessConvention { paper, matrix };

inline constexpr int kMaxPatternVertices = 10;

bool is_linear_forest(const Graph& g);

/// Boyer-Myrvold planarity test after the 3n - 6 edge pre-filter.
bool is_planar(const Graph& g);

/// Planarity of g plus one apex vertex adjacent to everything.
bool is_outerplanar(const Graph& g);

bool has_cycle(const Graph& g);

struct ChordalAnalysis {
  bool isChordal = false;
  /// Perfect elimination ordering; empty when not chordal.
  std::vector<Vertex> peo;
  int cliqueNumber = 0;
  VertexSet simplicialVertices;
};

/// Lex-BFS visiting order (first visited first).
std::vector<Vertex> lex_bfs(const Graph& g);

/// Lex-BFS, then verification that the reversed order eliminates a
/// simplicial vertex at every step. cliqueNumber is exact for every input
/// (from the elimination order when chordal, branch and bound otherwise).
ChordalAnalysis chordal_analyze(const Graph& g);

bool is_chordal(const Graph& g);

/// Exact maximum clique by branch and bound with greedy colouring bounds.
VertexSet maximum_clique(const Graph& g);
int clique_number(const Graph& g);

/// Injective map from pattern vertices to host vertices taking pattern edges
/// to host edges (and, when induced, non-edges to non-edges). Pattern
/// vertices are matched in order of descending degree. Throws CapacityError
/// when the pattern has more than 10 vertices.
std::optional<std::vector<Vertex>> find_subgraph(const Graph& host, const Graph& pattern,
                                                 bool induced = false);
bool contains_subgraph(const Graph& host, const Graph& pattern);
bool contains_induced(const Graph& host, const Graph& pattern);

/// Induced K_{k+3} minus a triangle: a k-clique whose common neighbourhood
/// holds three pairwise non-adjacent vertices. No size limit on k.
bool has_induced_k_minus_triangle(const Graph& g, int t);

/// mu of a chordal graph: omega if K_{omega+2} minus a triangle is an
/// induced subgraph, otherwise omega - 1. Edgeless inputs follow the given
/// convention. Throws PreconditionError for non-chordal input.
int chordal_mu(const Graph& g, EdgelessConvention convention = EdgelessConvention::paper);

}  // namespace cdv
