#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdv/corpus.hpp"
#include "cdv/graph.hpp"
#include "cdv/mu_engine.hpp"

namespace cdv {

enum class Outcome { Holds, Violates, Inconclusive };
std::string to_string(Outcome o);

enum class ClassTag { chordal, coChordal, muAtMost7, muAtLeastNminus6 };
std::string to_string(ClassTag t);

/// t*n - C(t+1, 2), the conjectured edge bound at parameter t.
long edge_bound_at(int t, int n);

struct Verdict {
  /// graph6 of the canonical relabeling (of g itself above 10 vertices).
  std::string canon;
  int n = 0;
  int m = 0;
  MuBounds bounds;
  Outcome outcome = Outcome::Inconclusive;
  std::vector<ClassTag> classTags;
  std::string detail;
};

/// Holds when |E| <= lo*n - C(lo+1, 2); Violates when |E| > hi*n - C(hi+1, 2);
/// otherwise Inconclusive. The bound is nondecreasing in t for t <= n, so
/// checking at lo or hi is sound.
Verdict check_conjecture(const Graph& g, const MuBounds& bounds);

/// True iff g could still be a vertex-minimal counterexample: lo < delta
/// and Delta < n - 1. Without the precondition the filter is off and this
/// returns true.
bool minimal_counterexample_filter(const Graph& g, const MuBounds& bounds, bool allSmallerVerified);

struct CampaignOptions {
  EngineConfig engine;
  /// Empty: no JSONL output.
  std::string jsonlPath;
  /// Asserts that every graph on one vertex fewer already passed; graphs
  /// the filter rules out are reported Holds after a cheap bound pass.
  bool useLemma6Filter = false;
  unsigned jobs = 1;
};

struct CampaignSummary {
  std::uint64_t graphs = 0;
  std::uint64_t holds = 0;
  std::uint64_t violates = 0;
  std::uint64_t inconclusive = 0;
  std::map<std::string, std::uint64_t> tagCounts;
  double seconds = 0;

  void add(const Verdict& v);
  /// Counts only; runtime is ignored.
  bool same_counts(const CampaignSummary& o) const;
  std::string to_string() const;
};

struct CampaignReport {
  std::vector<Verdict> verdicts;
  CampaignSummary summary;
};

class ViolationError : public std::runtime_error {
 public:
  explicit ViolationError(Verdict v);
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// One verdict per stream graph, in stream order. JSONL records are
/// flushed as they are produced. A Violates record is written and then
/// raised as ViolationError.
CampaignReport run_campaign(GraphStream& stream, const CampaignOptions& options = {});

std::string verdict_to_jsonl(const Verdict& v, const Graph& g, std::int64_t elapsedMicros);
/// Re-reads a JSONL report and recomputes the summary. Throws ParseError
/// with the line number on malformed records.
CampaignSummary summarize_jsonl(std::istream& in);
CampaignSummary summarize_jsonl(const std::string& path);

/// join(H, K_{t-3}) for a stacked planar triangulation H.
Graph join_tight(int t, int baseSize, std::uint64_t seed);

struct TightCase {
  int t = 0;
  int baseSize = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  long expected = 0;
  MuBounds bounds;
  bool ok = false;
};

struct TightReport {
  std::vector<TightCase> cases;
  bool ok() const;
  std::string failures() const;
};

TightReport verify_tight_family(int tMin, int tMax, const std::vector<int>& baseSizes,
                                const std::vector<std::uint64_t>& seeds, const EngineConfig& cfg = {});

/// Chain of `copies` graphs, each a pure k-sum onto the previous copy.
/// family: "k22222" (K_{2,2,2,2,2}, k = 5) or "k122222" (K_{1,2,2,2,2,2}, k = 6).
Graph clique_sum_chain(const std::string& family, int copies);

struct FormulaCheck {
  std::string name;
  int n = 0;
  int m = 0;
  long expected = 0;
  bool ok() const { return m == expected; }
};

/// The extremal edge formulas: chains of K_{2,2,2,2,2} against 6n - 20, a
/// K_{1,2,2,2,2,2} chain against 7n - 27, and K_{2,2,2,3,3} built directly
/// and as a join of K_{2,2,3,3} with 2K_1, against 7n - 27.
std::vector<FormulaCheck> verify_extremal_formulas();

/// The identity C(n-t, 2) + t*n - C(t+1, 2) = C(n, 2) for 0 <= t <= n <= nMax,
/// plus `samples` random (graph, t) pairs where the edge bound for g and the
/// complement bound C(n-t, 2) must agree.
bool verify_identity_lemma5(int nMax, int samples = 200, std::uint64_t seed = 1);

/// Named graphs for the CLI: K<n>, P<n>, C<n>, K<a>,<b>,... , petersen,
/// p32, octahedron, and the Petersen-family names.
Graph named_graph(const std::string& name);

}  // namespace cdv
