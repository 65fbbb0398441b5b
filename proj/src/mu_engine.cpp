#include "cdv/mu_engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cdv/canonical.hpp"
#include "cdv/errors.hpp"

namespace cdv {

std::string to_string(Rule r) { return "R" + std::to_string(static_cast<int>(r) + 1); }

Rule parse_rule(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == 'R' || digits[0] == 'r')) digits.erase(0, 1);
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("unknown rule '" + text + "'", 0);
  const int k = std::stoi(digits);
  if (k < 1 || k > kRuleCount) throw ParseError("unknown rule '" + text + "'", 0);
  return static_cast<Rule>(k - 1);
}

std::vector<Rule> MuBounds::rules_fired() const {
  std::vector<Rule> out;
  for (const auto& t : trace) out.push_back(t.rule);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

const Graph& k33() {
  static const Graph g = complete_multipartite({3, 3});
  return g;
}

int binom2(int k) { return k * (k - 1) / 2; }

/// Largest k with C(k+1, 2) <= m.
int edge_bound(int m) {
  int k = 0;
  while (binom2(k + 2) <= m) ++k;
  return k;
}

class Accumulator {
 public:
  explicit Accumulator(int n) {
    b_.lo = 0;
    b_.hi = n - 1;
  }

  void lower(Rule r, int v, std::string note) {
    b_.trace.push_back({r, v, Direction::lower, std::move(note)});
    b_.lo = std::max(b_.lo, v);
    check();
  }
  void upper(Rule r, int v, std::string note) {
    b_.trace.push_back({r, v, Direction::upper, std::move(note)});
    b_.hi = std::min(b_.hi, v);
    check();
  }
  bool done() const { return b_.lo == b_.hi; }
  int lo() const { return b_.lo; }
  int hi() const { return b_.hi; }
  MuBounds take() { return std::move(b_); }

 private:
  void check() const {
    if (b_.lo > b_.hi)
      throw std::logic_error("mu engine inconsistency: lo " + std::to_string(b_.lo) + " > hi " +
                             std::to_string(b_.hi) + "\n" + explain(b_));
  }
  MuBounds b_;
};

}  // namespace

struct MuEngine::Impl {
  EngineConfig cfg;
  std::map<std::pair<CanonicalForm, int>, MuBounds> cache;

  bool on(Rule r) const { return cfg.enabledRules.contains(r); }

  MuBounds at(const Graph& g, int depth) {
    const bool cacheable = g.order() <= kCanonicalMaxVertices && cfg.certificates.empty();
    if (!cacheable) return compute(g, depth);
    const auto key = std::make_pair(canonical_form(g), depth);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    MuBounds b = compute(g, depth);
    cache.emplace(key, b);
    return b;
  }

  // Values here use the matrix convention for edgeless graphs; the `paper`
  // convention is applied only to the top-level answer.
  MuBounds compute(const Graph& g, int depth) {
    const int n = g.order();
    Accumulator a(n);
    if (n == 1) return a.take();
    if (g.is_edgeless()) {
      if (on(Rule::R4)) {
        a.lower(Rule::R4, 1, "edgeless on >= 2 vertices, matrix value");
        a.upper(Rule::R4, 1, "edgeless graphs are subgraphs of a path");
      }
      return a.take();
    }
    const int m = g.size();

    if (on(Rule::R2) && g.is_complete()) {
      a.lower(Rule::R2, n - 1, "complete graph K_" + std::to_string(n));
      a.upper(Rule::R2, n - 1, "complete graph K_" + std::to_string(n));
      return a.take();
    }

    const std::vector<VertexSet> comps = g.components();
    if (on(Rule::R1) && comps.size() > 1) {
      int lo = 0, hi = 0;
      for (VertexSet c : comps) {
        const MuBounds b = at(induced_subgraph(g, c), depth);
        lo = std::max(lo, b.lo);
        hi = std::max(hi, b.hi);
      }
      const std::string note = "max over " + std::to_string(comps.size()) + " components";
      a.lower(Rule::R1, lo, note);
      a.upper(Rule::R1, hi, note);
      if (a.done()) return a.take();
    }

    if (on(Rule::R3)) {
      for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != n - 1) continue;
        const Graph rest = delete_vertex(g, v);
        if (rest.is_edgeless()) continue;
        const MuBounds b = at(rest, depth);
        const std::string note = "universal vertex " + std::to_string(v) + ", remainder in [" +
                                 std::to_string(b.lo) + "," + std::to_string(b.hi) + "]";
        a.lower(Rule::R3, b.lo + 1, note);
        a.upper(Rule::R3, b.hi + 1, note);
        break;
      }
      if (a.done()) return a.take();
    }

    if (on(Rule::R4)) {
      a.lower(Rule::R4, 1, "has an edge");
      if (a.done()) return a.take();
      struct Level {
        int value;
        bool (*test)(const Graph&);
        const char* yes;
        const char* no;
      };
      const Level levels[] = {
          {1, is_linear_forest, "linear forest", "not a linear forest"},
          {2, is_outerplanar, "outerplanar", "not outerplanar"},
          {3, is_planar, "planar", "not planar"},
      };
      for (const Level& l : levels) {
        if (a.lo() > l.value || a.hi() <= l.value) continue;
        if (l.test(g))
          a.upper(Rule::R4, l.value, l.yes);
        else
          a.lower(Rule::R4, l.value + 1, l.no);
        if (a.done()) return a.take();
      }
    }

    if (on(Rule::R6)) {
      int hi = 0;
      bool saw_k33 = false;
      for (VertexSet c : comps) {
        const Graph h = induced_subgraph(g, c);
        if (h.order() == 6 && h.size() == 9 && are_isomorphic(h, k33())) {
          hi = std::max(hi, 4);
          saw_k33 = true;
        } else {
          hi = std::max(hi, edge_bound(h.size()));
        }
      }
      a.upper(Rule::R6, hi,
              std::to_string(m) + " edges" + (saw_k33 ? std::string(", K_{3,3} component") : std::string()));
      if (a.done()) return a.take();
    }

    if (on(Rule::R7)) {
      if (is_chordal(g)) {
        const int v = chordal_mu(g, EdgelessConvention::matrix);
        a.lower(Rule::R7, v, "chordal");
        a.upper(Rule::R7, v, "chordal");
        if (a.done()) return a.take();
      }
    }

    const bool need_complement = on(Rule::R8) || on(Rule::R9) || on(Rule::R10);
    const Graph co = need_complement ? complement(g) : Graph();

    if (on(Rule::R8) && is_chordal(co)) {
      const int cm = chordal_mu(co, EdgelessConvention::matrix);
      a.lower(Rule::R8, n - 2 - cm, "complement chordal with mu " + std::to_string(cm));
      if (a.done()) return a.take();
    }

    if (on(Rule::R10) && !has_cycle(co) && !contains_subgraph(co, p32())) {
      a.lower(Rule::R10, n - 3, "complement acyclic, no P_{3,2}");
      if (a.done()) return a.take();
    }

    if (on(Rule::R9) && is_planar(co)) {
      const int cm = is_linear_forest(co) ? 1 : is_outerplanar(co) ? 2 : 3;
      a.lower(Rule::R9, n - 2 - cm, "complement has mu <= " + std::to_string(cm));
      if (a.done()) return a.take();
    }

    if (on(Rule::R4) && a.lo() <= 4 && a.hi() > 4) {
      switch (petersen_family_free(g, cfg.minorBudget)) {
        case Answer::yes: a.upper(Rule::R4, 4, "no Petersen-family minor"); break;
        case Answer::no: a.lower(Rule::R4, 5, "has a Petersen-family minor"); break;
        case Answer::unknown: break;
      }
      if (a.done()) return a.take();
    }

    if (on(Rule::R12)) {
      for (const CdVCertificate& c : cfg.certificates) {
        if (!(c.graph == g)) continue;
        const CertVerdict v = verify_certificate(c);
        if (v.valid) a.lower(Rule::R12, v.corank, "verified certificate");
        if (a.done()) return a.take();
      }
      if (cfg.certificateSearchBudget > 0 && n <= 20) {
        SearchOptions opts;
        opts.budget = cfg.certificateSearchBudget;
        for (int t = a.hi(); t > a.lo(); --t) {
          if (auto c = search_certificate(g, t, opts)) {
            a.lower(Rule::R12, c->claimedCorank, "certificate found by search");
            break;
          }
        }
        if (a.done()) return a.take();
      }
    }

    if (on(Rule::R5)) {
      const HadwigerBracket h = hadwiger_number(g, cfg.minorBudget);
      a.lower(Rule::R5, h.lo - 1, "K_" + std::to_string(h.lo) + " minor");
      if (a.done()) return a.take();
    }

    if (on(Rule::R11) && depth < cfg.deletionDepth) {
      int best = n - 1;
      Vertex arg = 0;
      for (Vertex v = 0; v < n; ++v) {
        const MuBounds b = at(delete_vertex(g, v), depth + 1);
        if (b.hi + 1 < best) {
          best = b.hi + 1;
          arg = v;
        }
      }
      a.upper(Rule::R11, best, "delete vertex " + std::to_string(arg));
    }
    return a.take();
  }
};

MuEngine::MuEngine(EngineConfig config) : impl_(std::make_unique<Impl>()) {
  if (config.deletionDepth < 0 || config.deletionDepth > 3)
    throw PreconditionError("deletion depth must be in 0..3");
  impl_->cfg = std::move(config);
}
MuEngine::~MuEngine() = default;
MuEngine::MuEngine(MuEngine&&) noexcept = default;
MuEngine& MuEngine::operator=(MuEngine&&) noexcept = default;

const EngineConfig& MuEngine::config() const { return impl_->cfg; }

MuBounds MuEngine::bounds(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("mu is undefined for the null graph");
  if (impl_->cfg.edgelessConvention == EdgelessConvention::paper && g.order() >= 2 && g.is_edgeless()) {
    MuBounds b;
    b.trace.push_back({Rule::R1, 0, Direction::lower, "edgeless, max over K_1 components"});
    b.trace.push_back({Rule::R1, 0, Direction::upper, "edgeless, max over K_1 components"});
    return b;
  }
  return impl_->at(g, 0);
}

MuBounds mu_bounds(const Graph& g, const EngineConfig& config) { return MuEngine(config).bounds(g); }

std::string explain(const MuBounds& b) {
  std::ostringstream out;
  for (const auto& t : b.trace)
    out << to_string(t.rule) << ' ' << (t.direction == Direction::lower ? "lower " : "upper ") << t.bound
        << "  " << t.note << '\n';
  out << "mu in [" << b.lo << "," << b.hi << "]" << (b.resolved() ? " (exact)" : "") << '\n';
  return out.str();
}

std::string explain(const Graph& g, const EngineConfig& config) { return explain(mu_bounds(g, config)); }

}  // namespace cdv
