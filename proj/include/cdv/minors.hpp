#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdv/graph.hpp"

namespace cdv {

/// Three-valued result of budgeted searches. `unknown` means the budget ran
/// out; it never stands in for a definite answer.
enum class Answer { no, yes, unknown };

std::string to_string(Answer a);

inline constexpr std::uint64_t kDefaultMinorBudget = 10'000'000;

struct MinorQuery {
  Graph host;
  Graph pattern;
  std::uint64_t budget = kDefaultMinorBudget;
};

struct MinorResult {
  Answer answer = Answer::unknown;
  std::uint64_t nodes = 0;  // search nodes expanded
};

/// Exact minor test for small hosts.
///
/// Any model of the pattern either has only singleton branch sets (then the
/// pattern is a subgraph) or has an edge inside a branch set that can be
/// contracted first. So the search tries a subgraph match at every node and
/// otherwise branches over edge contractions; edge and vertex deletions are
/// covered by the subgraph match. Safe reductions: isolated vertices are
/// dropped when the pattern has none, leaves when its minimum degree is at
/// least 2, and degree-2 vertices are suppressed when it is at least 3. For
/// a connected pattern each host component is searched on its own. Failed
/// nodes are memoized by canonical form (by labeled adjacency above 10
/// vertices). One budget unit is one expanded node.
MinorResult find_minor(const MinorQuery& query);
Answer has_minor(const Graph& host, const Graph& pattern, std::uint64_t budget = kDefaultMinorBudget);

/// Bracket on the Hadwiger number; lo == hi when exact.
struct HadwigerBracket {
  int lo = 0;
  int hi = 0;
  bool exact() const { return lo == hi; }
};

/// Scans t upward from the clique number. The upper end defaults to the
/// largest t with t <= n and C(t,2) <= |E| when searches are inconclusive.
HadwigerBracket hadwiger_number(const Graph& g, std::uint64_t budget = kDefaultMinorBudget);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The seven forbidden minors for linkless embeddability, each with 15
/// edges: K_6, the triangle-to-star transform of K_6, K_{3,3,1}, the
/// 8-vertex transform, K_{4,4} minus an edge, the 9-vertex transform and
/// the Petersen graph. Checked on first use.
const std::vector<NamedGraph>& petersen_family();

/// `yes` when no family member is a minor; `unknown` if any search ran out
/// of budget without finding one.
Answer petersen_family_free(const Graph& g, std::uint64_t budget = kDefaultMinorBudget);

/// Throws std::runtime_error when the budgeted search is inconclusive.
bool is_petersen_family_free(const Graph& g, std::uint64_t budget = kDefaultMinorBudget);

}  // namespace cdv
