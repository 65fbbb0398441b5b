#include "cdv/harness.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <thread>

#include "cdv/canonical.hpp"
#include "cdv/errors.hpp"
#include "cdv/graph6.hpp"
#include "cdv/recognizers.hpp"

namespace cdv {

using nlohmann::json;

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Violates: return "Violates";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(ClassTag t) {
  switch (t) {
    case ClassTag::chordal: return "chordal";
    case ClassTag::coChordal: return "coChordal";
    case ClassTag::muAtMost7: return "muAtMost7";
    case ClassTag::muAtLeastNminus6: return "muAtLeastNminus6";
  }
  return "?";
}

namespace {

long binom2(long k) { return k * (k - 1) / 2; }

std::string canon_of(const Graph& g) {
  if (g.order() <= kCanonicalMaxVertices) return graph6_encode(canonical_form(g).to_graph());
  return graph6_encode(g);
}

}  // namespace

long edge_bound_at(int t, int n) { return static_cast<long>(t) * n - binom2(t + 1); }

Verdict check_conjecture(const Graph& g, const MuBounds& b) {
  Verdict v;
  v.n = g.order();
  v.m = g.size();
  v.canon = canon_of(g);
  v.bounds = b;
  const long at_lo = edge_bound_at(b.lo, v.n);
  const long at_hi = edge_bound_at(b.hi, v.n);
  std::ostringstream d;
  if (b.lo <= v.n && v.m <= at_lo) {
    v.outcome = Outcome::Holds;
    d << "|E| = " << v.m << " <= " << at_lo << " at t = " << b.lo;
  } else if (v.m > at_hi) {
    v.outcome = Outcome::Violates;
    d << "|E| = " << v.m << " > " << at_hi << " at t = " << b.hi;
  } else {
    v.outcome = Outcome::Inconclusive;
    d << "|E| = " << v.m << " in (" << at_lo << ", " << at_hi << "] for t in [" << b.lo << "," << b.hi << "]";
  }
  v.detail = d.str();
  if (is_chordal(g)) v.classTags.push_back(ClassTag::chordal);
  if (is_chordal(complement(g))) v.classTags.push_back(ClassTag::coChordal);
  if (b.hi <= 7) v.classTags.push_back(ClassTag::muAtMost7);
  if (b.lo >= v.n - 6) v.classTags.push_back(ClassTag::muAtLeastNminus6);
  return v;
}

bool minimal_counterexample_filter(const Graph& g, const MuBounds& b, bool allSmallerVerified) {
  if (!allSmallerVerified) return true;
  return g.min_degree() > b.lo && g.max_degree() < g.order() - 1;
}

void CampaignSummary::add(const Verdict& v) {
  ++graphs;
  switch (v.outcome) {
    case Outcome::Holds: ++holds; break;
    case Outcome::Violates: ++violates; break;
    case Outcome::Inconclusive: ++inconclusive; break;
  }
  for (ClassTag t : v.classTags) ++tagCounts[cdv::to_string(t)];
}

bool CampaignSummary::same_counts(const CampaignSummary& o) const {
  return graphs == o.graphs && holds == o.holds && violates == o.violates && inconclusive == o.inconclusive &&
         tagCounts == o.tagCounts;
}

std::string CampaignSummary::to_string() const {
  std::ostringstream out;
  out << graphs << " graphs, " << holds << " Holds";
  if (violates) out << ", " << violates << " Violates";
  if (inconclusive) out << ", " << inconclusive << " Inconclusive";
  return out.str();
}

ViolationError::ViolationError(Verdict v)
    : std::runtime_error("conjecture VIOLATED by " + v.canon + ": " + v.detail + "\n" + explain(v.bounds) +
                         "this contradicts a proven case and almost certainly means an engine bug"),
      verdict_(std::move(v)) {}

std::string verdict_to_jsonl(const Verdict& v, const Graph& g, std::int64_t elapsedMicros) {
  json rec;
  rec["canon"] = v.canon;
  rec["g6"] = graph6_encode(g);
  rec["n"] = v.n;
  rec["m"] = v.m;
  rec["lo"] = v.bounds.lo;
  rec["hi"] = v.bounds.hi;
  rec["outcome"] = to_string(v.outcome);
  json tags = json::array();
  for (ClassTag t : v.classTags) tags.push_back(to_string(t));
  rec["tags"] = tags;
  json rules = json::array();
  for (Rule r : v.bounds.rules_fired()) rules.push_back(to_string(r));
  rec["rulesFired"] = rules;
  rec["elapsedMicros"] = elapsedMicros;
  return rec.dump();
}

namespace {

struct Worker {
  explicit Worker(const CampaignOptions& o) : full(o.engine), cheap(cheap_config(o.engine)), lemma6(o.useLemma6Filter) {}

  static EngineConfig cheap_config(EngineConfig c) {
    c.enabledRules = c.enabledRules.without(Rule::R5).without(Rule::R11).without(Rule::R12);
    c.minorBudget = std::min<std::uint64_t>(c.minorBudget, 10'000);
    c.certificateSearchBudget = 0;
    return c;
  }

  std::pair<Verdict, std::int64_t> run(const Graph& g) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    bool done = false;
    if (lemma6) {
      const MuBounds b = cheap.bounds(g);
      v = check_conjecture(g, b);
      if (v.outcome != Outcome::Holds && !minimal_counterexample_filter(g, b, true)) {
        v.outcome = Outcome::Holds;
        v.detail += "; not a minimal counterexample (low degree vertex or universal vertex)";
      }
      done = v.outcome == Outcome::Holds;
    }
    if (!done) v = check_conjecture(g, full.bounds(g));
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
    return {std::move(v), us.count()};
  }

  MuEngine full;
  MuEngine cheap;
  bool lemma6;
};

}  // namespace

CampaignReport run_campaign(GraphStream& stream, const CampaignOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::ofstream out;
  if (!options.jsonlPath.empty()) {
    out.open(options.jsonlPath);
    if (!out) throw std::runtime_error("cannot open '" + options.jsonlPath + "' for writing");
  }
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<Worker> workers;
  workers.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(options);

  CampaignReport report;
  constexpr std::size_t kBatch = 512;
  std::vector<Graph> batch;
  std::vector<std::pair<Verdict, std::int64_t>> results;
  for (bool more = true; more;) {
    batch.clear();
    while (batch.size() < kBatch) {
      auto g = stream.next();
      if (!g) {
        more = false;
        break;
      }
      batch.push_back(std::move(*g));
    }
    results.assign(batch.size(), {});
    if (jobs == 1 || batch.size() < 2) {
      for (std::size_t i = 0; i < batch.size(); ++i) results[i] = workers[0].run(batch[i]);
    } else {
      std::vector<std::thread> threads;
      std::vector<std::exception_ptr> errors(jobs);
      for (unsigned j = 0; j < jobs; ++j)
        threads.emplace_back([&, j] {
          try {
            for (std::size_t i = j; i < batch.size(); i += jobs) results[i] = workers[j].run(batch[i]);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        });
      for (auto& t : threads) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      auto& [v, us] = results[i];
      if (out.is_open()) {
        out << verdict_to_jsonl(v, batch[i], us) << '\n';
        out.flush();
        if (!out) throw std::runtime_error("write error on '" + options.jsonlPath + "'");
      }
      report.summary.add(v);
      if (v.outcome == Outcome::Violates) throw ViolationError(v);
      report.verdicts.push_back(std::move(v));
    }
  }
  report.summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CampaignSummary summarize_jsonl(std::istream& in) {
  CampaignSummary s;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const json rec = json::parse(line);
      Verdict v;
      const std::string o = rec.at("outcome").get<std::string>();
      if (o == "Holds")
        v.outcome = Outcome::Holds;
      else if (o == "Violates")
        v.outcome = Outcome::Violates;
      else if (o == "Inconclusive")
        v.outcome = Outcome::Inconclusive;
      else
        throw ParseError("unknown outcome '" + o + "'", 0, lineno);
      for (const auto& t : rec.at("tags")) {
        const std::string name = t.get<std::string>();
        bool known = false;
        for (ClassTag c : {ClassTag::chordal, ClassTag::coChordal, ClassTag::muAtMost7, ClassTag::muAtLeastNminus6})
          if (to_string(c) == name) {
            v.classTags.push_back(c);
            known = true;
          }
        if (!known) throw ParseError("unknown tag '" + name + "'", 0, lineno);
      }
      s.add(v);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad JSONL record: ") + e.what(), 0, lineno);
    }
  }
  return s;
}

CampaignSummary summarize_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return summarize_jsonl(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.reason(), e.offset(), e.line());
  }
}

Graph join_tight(int t, int baseSize, std::uint64_t seed) {
  if (t < 3) throw PreconditionError("join construction needs t >= 3");
  if (baseSize < 4) throw PreconditionError("base triangulation needs at least 4 vertices");
  const Graph base = stacked_triangulation(baseSize, seed);
  return t == 3 ? base : join(base, complete(t - 3));
}

bool TightReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const TightCase& c) { return c.ok; });
}

std::string TightReport::failures() const {
  std::ostringstream out;
  for (const auto& c : cases)
    if (!c.ok)
      out << "t=" << c.t << " size=" << c.baseSize << " seed=" << c.seed << ": |E|=" << c.m << " expected "
          << c.expected << ", mu in [" << c.bounds.lo << "," << c.bounds.hi << "]\n";
  return out.str();
}

TightReport verify_tight_family(int tMin, int tMax, const std::vector<int>& baseSizes,
                                const std::vector<std::uint64_t>& seeds, const EngineConfig& cfg) {
  TightReport r;
  MuEngine engine(cfg);
  for (int t = tMin; t <= tMax; ++t)
    for (int size : baseSizes)
      for (std::uint64_t seed : seeds) {
        TightCase c;
        c.t = t;
        c.baseSize = size;
        c.seed = seed;
        const Graph g = join_tight(t, size, seed);
        c.n = g.order();
        c.m = g.size();
        c.expected = edge_bound_at(t, c.n);
        c.bounds = engine.bounds(g);
        c.ok = c.m == c.expected && c.bounds.lo == t && c.bounds.hi == t;
        r.cases.push_back(std::move(c));
      }
  return r;
}

Graph clique_sum_chain(const std::string& family, int copies) {
  std::vector<int> parts;
  if (family == "k22222")
    parts = {2, 2, 2, 2, 2};
  else if (family == "k122222")
    parts = {1, 2, 2, 2, 2, 2};
  else
    throw PreconditionError("unknown clique-sum family '" + family + "'");
  if (copies < 1) throw PreconditionError("need at least one copy");
  const Graph base = complete_multipartite(parts);
  // Glue the first vertex of each part of the new copy onto the last vertex
  // of each part of the previous copy.
  std::vector<Vertex> first, last;
  int offset = 0;
  for (int p : parts) {
    first.push_back(offset);
    last.push_back(offset + p - 1);
    offset += p;
  }
  Graph g = base;
  std::vector<Vertex> labels(base.order());  // previous copy's vertices in g
  for (int v = 0; v < base.order(); ++v) labels[v] = v;
  for (int c = 1; c < copies; ++c) {
    std::vector<Vertex> left;
    for (Vertex v : last) left.push_back(labels[v]);
    const int before = g.order();
    g = pure_clique_sum({g, base, left, first});
    std::vector<Vertex> next(base.order());
    int fresh = before;
    for (int v = 0; v < base.order(); ++v) {
      const auto it = std::find(first.begin(), first.end(), v);
      next[v] = it != first.end() ? left[it - first.begin()] : fresh++;
    }
    labels = next;
  }
  return g;
}

std::vector<FormulaCheck> verify_extremal_formulas() {
  std::vector<FormulaCheck> out;
  for (int copies : {1, 2, 3}) {
    const Graph g = clique_sum_chain("k22222", copies);
    out.push_back({"K_{2,2,2,2,2} x" + std::to_string(copies), g.order(), g.size(), 6L * g.order() - 20});
  }
  for (int copies : {1, 2}) {
    const Graph g = clique_sum_chain("k122222", copies);
    out.push_back({"K_{1,2,2,2,2,2} x" + std::to_string(copies), g.order(), g.size(), 7L * g.order() - 27});
  }
  const Graph direct = complete_multipartite({2, 2, 2, 3, 3});
  out.push_back({"K_{2,2,2,3,3}", direct.order(), direct.size(), 7L * direct.order() - 27});
  const Graph joined = join(complete_multipartite({2, 2, 3, 3}), edgeless(2));
  out.push_back({"K_{2,2,3,3} + 2K_1", joined.order(), joined.size(), 7L * joined.order() - 27});
  return out;
}

bool verify_identity_lemma5(int nMax, int samples, std::uint64_t seed) {
  for (int n = 0; n <= nMax; ++n)
    for (int t = 0; t <= n; ++t)
      if (binom2(n - t) + edge_bound_at(t, n) != binom2(n)) return false;
  if (nMax < 1) return true;
  std::mt19937_64 rng(seed);
  const int n_cap = std::min(nMax, 64);
  for (int s = 0; s < samples; ++s) {
    const int n = 1 + static_cast<int>(rng() % n_cap);
    const int t = static_cast<int>(rng() % (n + 1));
    std::bernoulli_distribution coin(static_cast<double>(rng() % 101) / 100.0);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const Graph g(n, edges);
    const bool lhs = g.size() <= edge_bound_at(t, n);
    const bool rhs = complement(g).size() >= binom2(n - t);
    if (lhs != rhs) return false;
  }
  return true;
}

Graph named_graph(const std::string& name) {
  for (const auto& f : petersen_family())
    if (f.name == name) return f.graph;
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "petersen") return petersen();
  if (lower == "p32") return p32();
  if (lower == "octahedron") return complete_multipartite({2, 2, 2});
  auto number_list = [&](std::string_view s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const std::size_t comma = std::min(s.find(',', pos), s.size());
      const std::string_view part = s.substr(pos, comma - pos);
      if (part.empty() || part.size() > 3 ||
          !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("bad graph name '" + name + "'", pos);
      out.push_back(std::stoi(std::string(part)));
      pos = comma + 1;
    }
    return out;
  };
  if (lower.size() >= 2 && (lower[0] == 'k' || lower[0] == 'p' || lower[0] == 'c')) {
    const std::vector<int> nums = number_list(std::string_view(lower).substr(1));
    if (lower[0] == 'k') return nums.size() == 1 ? complete(nums[0]) : complete_multipartite(nums);
    if (nums.size() == 1) return lower[0] == 'p' ? path(nums[0]) : cycle(nums[0]);
  }
  throw ParseError("unknown graph name '" + name + "'", 0);
}

}  // namespace cdv
