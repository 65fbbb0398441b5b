#include "cdv/canonical.hpp"

#include <algorithm>
#include <array>

#include "cdv/errors.hpp"

namespace cdv {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

/// Colour refinement starting from degrees; returns isomorphism-invariant
/// colour ranks.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<std::pair<int, std::vector<int>>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int now = static_cast<int>(sorted.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()), total_bits_(pair_count(n_)) {
    colour_ = refine_colours(g);
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (u == v) continue;
        const VertexSet others = VertexSet::single(u) | VertexSet::single(v);
        if ((g.neighbors(u) - others) == (g.neighbors(v) - others)) twins_[u].insert(v);
      }
  }

  CanonicalLabeling run() {
    if (n_ > 0) search(0, 0, VertexSet());
    CanonicalLabeling out;
    out.form.n = n_;
    out.form.bits = best_;
    out.order.assign(best_order_.begin(), best_order_.begin() + n_);
    return out;
  }

 private:
  void search(int k, std::uint64_t prefix, VertexSet placed) {
    if (k == n_) {
      if (!have_best_ || prefix > best_) {
        best_ = prefix;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const int len = pair_count(k + 1);
    const std::uint64_t best_prefix = have_best_ ? best_ >> (total_bits_ - len) : 0;

    std::array<std::pair<std::uint64_t, Vertex>, kCanonicalMaxVertices> cand{};
    int count = 0;
    for (int v = 0; v < n_; ++v) {
      if (placed.contains(v) || colour_[v] != slot_colour_[k]) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < k; ++i) column = (column << 1) | (g_.has_edge(order_[i], v) ? 1 : 0);
      const std::uint64_t extended = (prefix << k) | column;
      if (have_best_ && extended < best_prefix) continue;
      cand[count++] = {extended, v};
    }
    std::sort(cand.begin(), cand.begin() + count, [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    VertexSet tried;
    for (int c = 0; c < count; ++c) {
      const auto [extended, v] = cand[c];
      // Swapping twins is an automorphism fixing the placed prefix.
      if (!(twins_[v] & tried).empty()) continue;
      tried.insert(v);
      if (have_best_ && extended < (best_ >> (total_bits_ - len))) continue;
      order_[k] = v;
      search(k + 1, extended, placed | VertexSet::single(v));
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::array<VertexSet, kCanonicalMaxVertices> twins_{};
  std::array<Vertex, kCanonicalMaxVertices> order_{};
  std::array<Vertex, kCanonicalMaxVertices> best_order_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

Graph CanonicalForm::to_graph() const {
  std::vector<Edge> edges;
  const int total = pair_count(n);
  int idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if ((bits >> (total - 1 - idx)) & 1U) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::string CanonicalForm::to_bitstring() const {
  const int total = pair_count(n);
  std::string out(total, '0');
  for (int idx = 0; idx < total; ++idx)
    if ((bits >> (total - 1 - idx)) & 1U) out[idx] = '1';
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalMaxVertices)
    throw CapacityError("canonical form supports at most " + std::to_string(kCanonicalMaxVertices) +
                        " vertices, got " + std::to_string(g.order()));
  return Canonicalizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace cdv
