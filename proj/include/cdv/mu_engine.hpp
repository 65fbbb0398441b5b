#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cdv/certificates.hpp"
#include "cdv/graph.hpp"
#include "cdv/minors.hpp"
#include "cdv/recognizers.hpp"

namespace cdv {

/// Bounding rules. Each one is a published fact about mu.
enum class Rule {
  R1,   // components: mu is the max over connected components
  R2,   // mu(K_t) = t - 1
  R3,   // universal vertex v with an edge left in G - v: mu(G) = mu(G - v) + 1
  R4,   // ladder: linear forest <=> <= 1, outerplanar <=> <= 2, planar <=> <= 3, linkless <=> <= 4
  R5,   // mu >= h(G) - 1
  R6,   // |E(H)| >= C(mu(H) + 1, 2) for connected H other than K_{3,3}
  R7,   // chordal graphs, exact
  R8,   // chordal complement: mu(G) >= n - 2 - mu(co-G)
  R9,   // mu(co-G) <= 3: mu(G) >= n - 2 - mu(co-G)
  R10,  // complement acyclic without a P_{3,2} subgraph: mu >= n - 3
  R11,  // mu(G) <= mu(G - v) + 1
  R12,  // verified certificate: mu >= corank
};

inline constexpr int kRuleCount = 12;

std::string to_string(Rule r);
/// Accepts "R7" or "7". Throws ParseError otherwise.
Rule parse_rule(const std::string& text);

class RuleSet {
 public:
  static RuleSet all() { return RuleSet((1u << kRuleCount) - 1); }
  static RuleSet none() { return RuleSet(0); }
  bool contains(Rule r) const { return bits_ >> static_cast<int>(r) & 1u; }
  RuleSet with(Rule r) const { return RuleSet(bits_ | 1u << static_cast<int>(r)); }
  RuleSet without(Rule r) const { return RuleSet(bits_ & ~(1u << static_cast<int>(r))); }
  bool operator==(const RuleSet&) const = default;

 private:
  explicit RuleSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_;
};

struct EngineConfig {
  RuleSet enabledRules = RuleSet::all();
  std::uint64_t minorBudget = kDefaultMinorBudget;
  /// R11 recursion depth, 0..3.
  int deletionDepth = 1;
  EdgelessConvention edgelessConvention = EdgelessConvention::paper;
  /// Candidate certificates for R12; ones for other graphs are ignored.
  std::vector<CdVCertificate> certificates;
  /// When nonzero, R12 also runs the numeric certificate search.
  std::uint64_t certificateSearchBudget = 0;
};

enum class Direction { lower, upper };

struct TraceEntry {
  Rule rule;
  int bound;
  Direction direction;
  std::string note;
};

struct MuBounds {
  int lo = 0;
  int hi = 0;
  std::vector<TraceEntry> trace;
  bool resolved() const { return lo == hi; }
  /// Distinct rules in the trace, in rule order.
  std::vector<Rule> rules_fired() const;
};

/// Caches results by canonical form for graphs on at most 10 vertices. The
/// cache is tied to the configuration given at construction.
class MuEngine {
 public:
  explicit MuEngine(EngineConfig config = {});
  ~MuEngine();
  MuEngine(MuEngine&&) noexcept;
  MuEngine& operator=(MuEngine&&) noexcept;

  /// Interval containing mu(g). Throws PreconditionError for the null graph,
  /// and std::logic_error with a trace dump if rules ever contradict.
  MuBounds bounds(const Graph& g);
  const EngineConfig& config() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

MuBounds mu_bounds(const Graph& g, const EngineConfig& config = {});

std::string explain(const MuBounds& b);
std::string explain(const Graph& g, const EngineConfig& config = {});

}  // namespace cdv
