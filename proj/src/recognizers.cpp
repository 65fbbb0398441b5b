#include "cdv/recognizers.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cdv/errors.hpp"

namespace cdv {

bool has_cycle(const Graph& g) {
  return g.size() > g.order() - static_cast<int>(g.components().size());
}

bool is_linear_forest(const Graph& g) { return g.max_degree() <= 2 && !has_cycle(g); }

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n <= 4) return true;
  if (g.size() > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_outerplanar(const Graph& g) {
  if (g.order() <= 3) return true;
  if (g.size() > 2 * g.order() - 3) return false;
  return is_planar(join(g, complete(1)));
}

std::vector<Vertex> lex_bfs(const Graph& g) {
  // Partition refinement: the first part always holds the vertices with the
  // lexicographically largest labels.
  std::vector<VertexSet> parts;
  if (g.order() > 0) parts.push_back(g.vertices());
  std::vector<Vertex> order;
  order.reserve(g.order());
  while (!parts.empty()) {
    const Vertex v = parts.front().first();
    order.push_back(v);
    parts.front().erase(v);
    std::vector<VertexSet> refined;
    refined.reserve(parts.size() * 2);
    for (VertexSet part : parts) {
      const VertexSet in = part & g.neighbors(v);
      const VertexSet out = part - g.neighbors(v);
      if (!in.empty()) refined.push_back(in);
      if (!out.empty()) refined.push_back(out);
    }
    parts = std::move(refined);
  }
  return order;
}

ChordalAnalysis chordal_analyze(const Graph& g) {
  ChordalAnalysis out;
  for (int v = 0; v < g.order(); ++v)
    if (g.is_clique(g.neighbors(v))) out.simplicialVertices.insert(v);

  std::vector<Vertex> peo = lex_bfs(g);
  std::reverse(peo.begin(), peo.end());
  VertexSet later = g.vertices();
  bool ok = true;
  int widest = 0;
  for (Vertex v : peo) {
    later.erase(v);
    const VertexSet back = g.neighbors(v) & later;
    if (!g.is_clique(back)) {
      ok = false;
      break;
    }
    widest = std::max(widest, back.size());
  }
  out.isChordal = ok;
  if (ok) {
    out.peo = std::move(peo);
    out.cliqueNumber = g.order() == 0 ? 0 : widest + 1;
  } else {
    out.cliqueNumber = clique_number(g);
  }
  return out;
}

bool is_chordal(const Graph& g) { return chordal_analyze(g).isChordal; }

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    expand(VertexSet(), g_.vertices());
    return best_;
  }

 private:
  // Greedy sequential colouring of p; returns vertices in colour order with
  // the colour (1-based) of each.
  int colour_sort(VertexSet p, std::array<Vertex, kMaxVertices>& order,
                  std::array<int, kMaxVertices>& colour) const {
    int count = 0;
    int k = 0;
    while (!p.empty()) {
      ++k;
      VertexSet q = p;
      while (!q.empty()) {
        const Vertex v = q.first();
        q -= g_.neighbors(v);
        q.erase(v);
        p.erase(v);
        order[count] = v;
        colour[count] = k;
        ++count;
      }
    }
    return count;
  }

  void expand(VertexSet r, VertexSet p) {
    std::array<Vertex, kMaxVertices> order{};
    std::array<int, kMaxVertices> colour{};
    const int count = colour_sort(p, order, colour);
    for (int i = count - 1; i >= 0; --i) {
      if (r.size() + colour[i] <= best_.size()) return;
      const Vertex v = order[i];
      VertexSet r2 = r;
      r2.insert(v);
      const VertexSet p2 = p & g_.neighbors(v);
      if (p2.empty()) {
        if (r2.size() > best_.size()) best_ = r2;
      } else {
        expand(r2, p2);
      }
      p.erase(v);
    }
  }

  const Graph& g_;
  VertexSet best_;
};

class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& host, const Graph& pattern, bool induced)
      : host_(host), pattern_(pattern), induced_(induced), k_(pattern.order()) {
    for (int v = 0; v < k_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.begin() + k_,
                     [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
  }

  std::optional<std::vector<Vertex>> run() {
    if (k_ > host_.order() || pattern_.size() > host_.size()) return std::nullopt;
    if (!extend(0, VertexSet())) return std::nullopt;
    std::vector<Vertex> out(k_);
    for (int i = 0; i < k_; ++i) out[order_[i]] = image_[i];
    return out;
  }

 private:
  bool extend(int i, VertexSet used) {
    if (i == k_) return true;
    const Vertex p = order_[i];
    VertexSet cand = host_.vertices() - used;
    for (int j = 0; j < i; ++j) {
      if (pattern_.has_edge(p, order_[j]))
        cand &= host_.neighbors(image_[j]);
      else if (induced_)
        cand -= host_.neighbors(image_[j]);
    }
    const int need = pattern_.degree(p);
    for (Vertex h : cand) {
      if (host_.degree(h) < need) continue;
      image_[i] = h;
      if (extend(i + 1, used | VertexSet::single(h))) return true;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  bool induced_;
  int k_;
  std::array<Vertex, kMaxVertices> order_{};
  std::array<Vertex, kMaxVertices> image_{};
};

}  // namespace

VertexSet maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

int clique_number(const Graph& g) { return maximum_clique(g).size(); }

std::optional<std::vector<Vertex>> find_subgraph(const Graph& host, const Graph& pattern, bool induced) {
  if (pattern.order() > kMaxPatternVertices)
    throw CapacityError("subgraph patterns are limited to " + std::to_string(kMaxPatternVertices) +
                        " vertices, got " + std::to_string(pattern.order()));
  return SubgraphMatcher(host, pattern, induced).run();
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  return find_subgraph(host, pattern, false).has_value();
}

bool contains_induced(const Graph& host, const Graph& pattern) {
  return find_subgraph(host, pattern, true).has_value();
}

bool has_induced_k_minus_triangle(const Graph& g, int t) {
  if (t < 3) throw PreconditionError("K_t minus a triangle needs t >= 3");
  const int k = t - 3;
  auto has_independent_triple = [&](VertexSet c) {
    for (Vertex a : c)
      for (Vertex b : c - g.neighbors(a))
        if (b > a && !((c - g.neighbors(a) - g.neighbors(b)) - VertexSet{a, b}).empty()) return true;
    return false;
  };
  // Extend cliques in increasing vertex order; `common` is the common
  // neighbourhood of the clique so far.
  std::function<bool(int, Vertex, VertexSet)> grow = [&](int size, Vertex from, VertexSet common) {
    if (size == k) return has_independent_triple(common);
    for (Vertex v : common) {
      if (v < from) continue;
      if (grow(size + 1, v + 1, common & g.neighbors(v))) return true;
    }
    return false;
  };
  return grow(0, 0, g.vertices());
}

int chordal_mu(const Graph& g, EdgelessConvention convention) {
  const ChordalAnalysis analysis = chordal_analyze(g);
  if (!analysis.isChordal) throw PreconditionError("chordal_mu requires a chordal graph");
  if (g.is_edgeless())
    return convention == EdgelessConvention::matrix && g.order() >= 2 ? 1 : 0;
  const int omega = analysis.cliqueNumber;
  const int t = omega + 2;
  if (t > g.order()) return omega - 1;
  const bool present = t <= kMaxPatternVertices ? contains_induced(g, k_minus_triangle(t))
                                                : has_induced_k_minus_triangle(g, t);
  return present ? omega : omega - 1;
}

}  // namespace cdv
