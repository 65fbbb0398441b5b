#include "cdv/graph.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "cdv/errors.hpp"

namespace cdv {

namespace {

void check_capacity(int n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (n > kMaxVertices)
    throw CapacityError("graph on " + std::to_string(n) + " vertices exceeds capacity of 64");
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  check_capacity(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("loops are not allowed");
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].size();
  m_ = twice / 2;
}

Graph Graph::from_adjacency(int n, std::span<const VertexSet> rows) {
  check_capacity(n);
  if (static_cast<int>(rows.size()) < n) throw PreconditionError("too few adjacency rows");
  Graph g;
  g.n_ = n;
  const VertexSet all = VertexSet::range(n);
  int twice = 0;
  for (int v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(all)) throw PreconditionError("adjacency row out of range");
    if (rows[v].contains(v)) throw PreconditionError("loops are not allowed");
    g.adj_[v] = rows[v];
    twice += rows[v].size();
  }
  for (int v = 0; v < n; ++v)
    for (Vertex u : rows[v])
      if (!rows[u].contains(v)) throw PreconditionError("adjacency rows are not symmetric");
  g.m_ = twice / 2;
  return g;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq(n_);
  for (int v = 0; v < n_; ++v) seq[v] = degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_clique(VertexSet s) const {
  for (Vertex v : s)
    if (!(s - VertexSet::single(v)).is_subset_of(adj_[v])) return false;
  return true;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet unseen = vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= adj_[v];
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = g.vertices() - g.neighbors(v) - VertexSet::single(v);
  return Graph::from_adjacency(n, rows);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  check_capacity(g.order() + h.order());
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return Graph(g.order() + h.order(), edges);
}

Graph join(const Graph& g, const Graph& h) {
  const int total = g.order() + h.order();
  check_capacity(total);
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = g.order(); v < total; ++v) edges.emplace_back(u, v);
  return Graph(total, edges);
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (!g.has_edge(u, v))
    throw PreconditionError("cannot contract non-edge " + std::to_string(u) + "-" +
                            std::to_string(v));
  const Vertex keep = std::min(u, v);
  const Vertex gone = std::max(u, v);
  auto relabel = [gone](Vertex x) { return x > gone ? x - 1 : x; };
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (a == gone) a = keep;
    if (b == gone) b = keep;
    if (a == b) continue;
    edges.emplace_back(relabel(a), relabel(b));
  }
  return Graph(g.order() - 1, edges);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw PreconditionError("induced subgraph of an empty vertex set");
  if (!s.is_subset_of(g.vertices())) throw PreconditionError("vertex set out of range");
  std::array<Vertex, kMaxVertices> index{};
  int k = 0;
  for (Vertex v : s) index[v] = k++;
  std::vector<VertexSet> rows(k);
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v) & s) rows[index[v]].insert(index[w]);
  return Graph::from_adjacency(k, rows);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v);
  if (g.order() == 1) return Graph();
  return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  std::vector<VertexSet> rows(g.order());
  for (int w = 0; w < g.order(); ++w) rows[w] = g.neighbors(w);
  rows[u].erase(v);
  rows[v].erase(u);
  return Graph::from_adjacency(g.order(), rows);
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw PreconditionError("permutation size does not match vertex count");
  VertexSet image;
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order()) throw PreconditionError("permutation entry out of range");
    image.insert(p);
  }
  if (image.size() != g.order()) throw PreconditionError("not a permutation");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

Graph pure_clique_sum(const CliqueSumSpec& spec) {
  const auto& [left, right, lc, rc] = spec;
  if (lc.size() != rc.size()) throw PreconditionError("clique sizes differ");
  VertexSet lset, rset;
  for (Vertex v : lc) {
    check_vertex(left, v);
    lset.insert(v);
  }
  for (Vertex v : rc) {
    check_vertex(right, v);
    rset.insert(v);
  }
  if (lset.size() != static_cast<int>(lc.size()) || rset.size() != static_cast<int>(rc.size()))
    throw PreconditionError("clique lists contain repeated vertices");
  if (!left.is_clique(lset)) throw PreconditionError("left selection is not a clique");
  if (!right.is_clique(rset)) throw PreconditionError("right selection is not a clique");

  const int k = static_cast<int>(lc.size());
  const int total = left.order() + right.order() - k;
  check_capacity(total);
  std::vector<Vertex> map(right.order(), -1);
  for (int i = 0; i < k; ++i) map[rc[i]] = lc[i];
  int next = left.order();
  for (int v = 0; v < right.order(); ++v)
    if (map[v] < 0) map[v] = next++;

  std::vector<Edge> edges = left.edges();
  for (auto [u, v] : right.edges()) {
    if (rset.contains(u) && rset.contains(v)) continue;  // already present via left's clique
    edges.emplace_back(map[u], map[v]);
  }
  return Graph(total, edges);
}

Graph path(int n) {
  check_capacity(n);
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  check_capacity(n);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  check_capacity(n);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph edgeless(int n) {
  check_capacity(n);
  return Graph(n, std::span<const Edge>{});
}

Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw PreconditionError("multipartite part sizes must be positive");
    n += p;
  }
  check_capacity(n);
  std::vector<int> part_of;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) part_of.insert(part_of.end(), parts[i], i);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_multipartite(std::initializer_list<int> parts) {
  return complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

Graph star(int leaves) {
  if (leaves < 0) throw PreconditionError("negative leaf count");
  check_capacity(leaves + 1);
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, edges);
}

Graph p32() {
  return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

Graph k_minus_triangle(int t) {
  if (t < 3) throw PreconditionError("K_t minus a triangle needs t >= 3");
  check_capacity(t);
  std::vector<Edge> edges;
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v)
      if (v >= 3) edges.emplace_back(u, v);  // the triangle is {0, 1, 2}
  return Graph(t, edges);
}

Graph stacked_triangulation(int n, std::uint64_t seed) {
  if (n < 4) throw PreconditionError("stacked triangulation needs at least 4 vertices");
  check_capacity(n);
  std::vector<Edge> edges = complete(4).edges();
  std::vector<std::array<Vertex, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::minstd_rand rng(static_cast<std::minstd_rand::result_type>(seed % std::minstd_rand::modulus));
  for (Vertex v = 4; v < n; ++v) {
    const std::size_t pick = rng() % faces.size();
    const auto [a, b, c] = faces[pick];
    edges.insert(edges.end(), {{a, v}, {b, v}, {c, v}});
    faces[pick] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return Graph(n, edges);
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "Graph(n=" << g.order() << ", m=" << g.size() << ", edges={";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out << (first ? "" : ", ") << u << '-' << v;
    first = false;
  }
  out << "})";
  return out.str();
}

}  // namespace cdv
