#include "cdv/minors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "cdv/canonical.hpp"
#include "cdv/recognizers.hpp"

namespace cdv {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::no: return "no";
    case Answer::yes: return "yes";
    case Answer::unknown: return "unknown";
  }
  return "?";
}

namespace {

std::string memo_key(const Graph& g) {
  std::string key;
  if (g.order() <= kCanonicalMaxVertices) {
    const CanonicalForm c = canonical_form(g);
    key.push_back('c');
    key.push_back(static_cast<char>(c.n));
    key.append(reinterpret_cast<const char*>(&c.bits), sizeof c.bits);
  } else {
    key.push_back('l');
    key.push_back(static_cast<char>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
      const std::uint64_t row = g.neighbors(v).bits();
      key.append(reinterpret_cast<const char*>(&row), sizeof row);
    }
  }
  return key;
}

class MinorSearch {
 public:
  MinorSearch(const Graph& pattern, std::uint64_t budget)
      : pattern_(pattern),
        budget_(budget),
        p_(pattern.order()),
        q_(pattern.size()),
        min_degree_(pattern.order() == 0 ? 0 : pattern.min_degree()),
        connected_(pattern.order() > 0 && pattern.is_connected()) {}

  Answer search(Graph g) {
    if (++nodes_ > budget_) return Answer::unknown;
    g = reduce(std::move(g));
    if (g.order() < p_ || g.size() < q_) return Answer::no;
    if (contains_subgraph(g, pattern_)) return Answer::yes;
    if (g.order() == p_) return Answer::no;

    const std::string key = memo_key(g);
    if (failed_.contains(key)) return Answer::no;

    bool incomplete = false;
    const auto comps = g.components();
    if (connected_ && comps.size() > 1) {
      for (VertexSet c : comps) {
        if (c.size() < p_) continue;
        const Answer a = search(induced_subgraph(g, c));
        if (a == Answer::yes) return a;
        if (a == Answer::unknown) incomplete = true;
      }
    } else {
      // Contract edges losing the fewest parallel edges first.
      std::vector<std::pair<int, Edge>> order;
      for (auto e : g.edges())
        order.emplace_back((g.neighbors(e.first) & g.neighbors(e.second)).size(), e);
      std::stable_sort(order.begin(), order.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [lost, e] : order) {
        if (g.size() - lost - 1 < q_) continue;
        const Answer a = search(contract_edge(g, e.first, e.second));
        if (a == Answer::yes) return a;
        if (a == Answer::unknown) {
          incomplete = true;
          if (nodes_ > budget_) return Answer::unknown;
        }
      }
    }
    if (incomplete) return Answer::unknown;
    failed_.insert(key);
    return Answer::no;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Graph reduce(Graph g) const {
    bool changed = true;
    while (changed && g.order() > p_) {
      changed = false;
      for (int v = 0; v < g.order(); ++v) {
        const int d = g.degree(v);
        if ((d == 0 && min_degree_ >= 1) || (d == 1 && min_degree_ >= 2)) {
          g = delete_vertex(g, v);
          changed = true;
          break;
        }
        if (d == 2 && min_degree_ >= 3) {
          g = contract_edge(g, v, g.neighbors(v).first());
          changed = true;
          break;
        }
      }
    }
    return g;
  }

  const Graph& pattern_;
  std::uint64_t budget_;
  int p_;
  int q_;
  int min_degree_;
  bool connected_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<std::string> failed_;
};

int max_clique_minor_by_counts(const Graph& g) {
  int t = 0;
  while (t + 1 <= g.order() && (t + 1) * t / 2 <= g.size()) ++t;
  return t;
}

std::vector<NamedGraph> build_family() {
  const std::vector<NamedGraph> family = {
      {"K6", complete(6)},
      {"K6-dY", Graph(7, {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                          {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 5}})},
      {"K331", complete_multipartite({3, 3, 1})},
      {"G8", Graph(8, {{0, 5}, {0, 6}, {0, 7}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3},
                       {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 7}, {4, 5}, {4, 7}})},
      {"K44-e", Graph(8, {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                          {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 7}, {4, 7}, {5, 7}})},
      {"G9", Graph(9, {{0, 5}, {0, 6}, {0, 7}, {1, 4}, {1, 6}, {1, 8}, {2, 3}, {2, 4},
                       {2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 7}, {5, 8}})},
      {"Petersen", petersen()},
  };
  if (family.size() != 7) throw std::logic_error("Petersen family must have 7 members");
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].graph.size() != 15)
      throw std::logic_error("Petersen family member " + family[i].name + " lacks 15 edges");
    for (std::size_t j = 0; j < i; ++j)
      if (are_isomorphic(family[i].graph, family[j].graph))
        throw std::logic_error("Petersen family members " + family[i].name + " and " +
                               family[j].name + " are isomorphic");
  }
  return family;
}

}  // namespace

MinorResult find_minor(const MinorQuery& query) {
  MinorSearch search(query.pattern, query.budget);
  MinorResult out;
  out.answer = search.search(query.host);
  out.nodes = search.nodes();
  return out;
}

Answer has_minor(const Graph& host, const Graph& pattern, std::uint64_t budget) {
  return find_minor({host, pattern, budget}).answer;
}

HadwigerBracket hadwiger_number(const Graph& g, std::uint64_t budget) {
  HadwigerBracket out;
  if (g.order() == 0) return out;
  out.lo = clique_number(g);
  out.hi = max_clique_minor_by_counts(g);
  for (int t = out.lo + 1; t <= out.hi; ++t) {
    const Answer a = has_minor(g, complete(t), budget);
    if (a == Answer::yes) {
      out.lo = t;
    } else if (a == Answer::no) {
      out.hi = t - 1;
      break;
    }
  }
  return out;
}

const std::vector<NamedGraph>& petersen_family() {
  static const std::vector<NamedGraph> family = build_family();
  return family;
}

Answer petersen_family_free(const Graph& g, std::uint64_t budget) {
  if (g.size() < 15) return Answer::yes;
  bool incomplete = false;
  for (const auto& member : petersen_family()) {
    const Answer a = has_minor(g, member.graph, budget);
    if (a == Answer::yes) return Answer::no;
    if (a == Answer::unknown) incomplete = true;
  }
  return incomplete ? Answer::unknown : Answer::yes;
}

bool is_petersen_family_free(const Graph& g, std::uint64_t budget) {
  const Answer a = petersen_family_free(g, budget);
  if (a == Answer::unknown)
    throw std::runtime_error("Petersen-family minor search exhausted its budget");
  return a == Answer::yes;
}

}  // namespace cdv
