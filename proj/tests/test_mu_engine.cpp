#include <catch_amalgamated.hpp>

#include <random>

#include "cdv/corpus.hpp"
#include "cdv/errors.hpp"
#include "cdv/harness.hpp"
#include "cdv/mu_engine.hpp"
#include "cdv/recognizers.hpp"

using namespace cdv;

namespace {

const std::vector<Graph>& corpus(int n_max) {
  static const std::vector<Graph> all = enumerate_up_to(7);
  static std::vector<Graph> small;
  if (n_max == 7) return all;
  small.clear();
  for (const Graph& g : all)
    if (g.order() <= n_max) small.push_back(g);
  return small;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return Graph(n, edges);
}

EngineConfig matrix_config() {
  EngineConfig cfg;
  cfg.edgelessConvention = EdgelessConvention::matrix;
  return cfg;
}

void check_exact(const Graph& g, int mu) {
  const MuBounds b = mu_bounds(g);
  INFO(to_string(g));
  CHECK(b.lo == mu);
  CHECK(b.hi == mu);
}

}  // namespace

TEST_CASE("known values") {
  check_exact(complete(1), 0);
  for (int n = 2; n <= 12; ++n) check_exact(path(n), 1);
  for (int n = 3; n <= 12; ++n) check_exact(cycle(n), 2);
  for (int k = 3; k <= 9; ++k) check_exact(star(k), 2);
  check_exact(p32(), 2);
  std::mt19937_64 rng(6);
  for (int k = 0; k < 40; ++k) {
    const Graph t = random_tree(4 + k % 9, rng);
    check_exact(t, is_linear_forest(t) ? 1 : 2);
  }
  for (int t = 1; t <= 8; ++t) check_exact(complete(t), t - 1);
  check_exact(complete_multipartite({3, 3}), 4);
  check_exact(petersen(), 5);
  check_exact(complete_multipartite({1, 1, 3}), 3);
  check_exact(complete_multipartite({2, 2, 2}), 3);
  check_exact(complete_multipartite({2, 2, 2, 2}), 5);
  for (const auto& f : petersen_family()) check_exact(f.graph, 5);
}

TEST_CASE("edgeless conventions") {
  CHECK(mu_bounds(edgeless(4)).hi == 0);
  const MuBounds m = mu_bounds(edgeless(4), matrix_config());
  CHECK(m.lo == 1);
  CHECK(m.hi == 1);
  CHECK(mu_bounds(edgeless(1), matrix_config()).hi == 0);
  // Graphs with an edge do not depend on the convention.
  for (const Graph& g : corpus(6))
    if (!g.is_edgeless()) {
      const MuBounds a = mu_bounds(g), b = mu_bounds(g, matrix_config());
      CHECK(a.lo == b.lo);
      CHECK(a.hi == b.hi);
    }
  CHECK_THROWS_AS(mu_bounds(Graph()), PreconditionError);
}

TEST_CASE("K_{2,2,2,2,2} gets lo >= 7 from the complement") {
  const MuBounds b = mu_bounds(complete_multipartite({2, 2, 2, 2, 2}));
  CHECK(b.lo >= 7);
  CHECK(b.hi <= 9);
  bool r8 = false;
  for (const auto& t : b.trace) r8 |= t.rule == Rule::R8 && t.bound == 7;
  CHECK(r8);
}

TEST_CASE("tight join family resolves") {
  for (int t = 3; t <= 8; ++t) {
    const Graph g = join_tight(t, 7, 2);
    check_exact(g, t);
  }
}

TEST_CASE("explain output") {
  CHECK(explain(complete(5)).find("R2") != std::string::npos);
  const std::string c6 = explain(cycle(6));
  CHECK(c6.find("R4 upper 2") != std::string::npos);
  CHECK(c6.find("R4 lower 2") != std::string::npos);
  const std::string k2222 = explain(complete_multipartite({2, 2, 2, 2}));
  CHECK((k2222.find("R8 lower 5") != std::string::npos || k2222.find("R9 lower 5") != std::string::npos));
  CHECK(explain(petersen()).find("mu in [5,5]") != std::string::npos);
}

TEST_CASE("every corpus graph on n <= 7 resolves") {
  MuEngine engine;
  for (const Graph& g : corpus(7)) {
    const MuBounds b = engine.bounds(g);
    CHECK(b.resolved());
    CHECK(b.lo >= 0);
    CHECK(b.hi <= g.order() - 1);
  }
}

TEST_CASE("trace entries determine the interval") {
  for (const Graph& g : corpus(6)) {
    const MuBounds b = mu_bounds(g);
    int lo = 0, hi = g.order() - 1;
    for (const auto& t : b.trace) {
      if (t.direction == Direction::lower) lo = std::max(lo, t.bound);
      else hi = std::min(hi, t.bound);
    }
    CHECK(lo == b.lo);
    CHECK(hi == b.hi);
  }
}

TEST_CASE("every rule alone is sound against the R4-resolved value") {
  EngineConfig r4;
  r4.enabledRules = RuleSet::none().with(Rule::R4);
  int checked = 0;
  for (const Graph& g : corpus(6)) {
    const MuBounds ref = mu_bounds(g, r4);
    if (!ref.resolved()) continue;
    const int mu = ref.lo;
    ++checked;
    for (int r = 0; r < kRuleCount; ++r) {
      EngineConfig one;
      one.enabledRules = RuleSet::none().with(static_cast<Rule>(r));
      const MuBounds b = mu_bounds(g, one);
      INFO(to_string(g) << " rule " << to_string(static_cast<Rule>(r)));
      CHECK(b.lo <= mu);
      CHECK(mu <= b.hi);
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("disabling a rule never shrinks the interval") {
  for (const Graph& g : corpus(6)) {
    const MuBounds all = mu_bounds(g);
    for (int r = 0; r < kRuleCount; ++r) {
      EngineConfig cfg;
      cfg.enabledRules = RuleSet::all().without(static_cast<Rule>(r));
      const MuBounds b = mu_bounds(g, cfg);
      CHECK(b.lo <= all.lo);
      CHECK(b.hi >= all.hi);
    }
  }
}

TEST_CASE("deletion and minor consistency") {
  MuEngine engine(matrix_config());
  for (const Graph& g : corpus(6)) {
    if (g.order() < 2) continue;
    const MuBounds b = engine.bounds(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const MuBounds c = engine.bounds(delete_vertex(g, v));
      CHECK(c.lo <= b.hi);
      CHECK(b.lo <= c.hi + 1);
    }
  }
  std::mt19937_64 rng(31);
  const std::vector<Graph>& all = corpus(7);
  for (int k = 0; k < 400; ++k) {
    const Graph& g = all[rng() % all.size()];
    const Graph& h = all[rng() % all.size()];
    if (h.order() > g.order()) continue;
    if (has_minor(g, h) == Answer::yes) CHECK(engine.bounds(h).lo <= engine.bounds(g).hi);
  }
}

TEST_CASE("chordal formula agrees with the ladder; Hadwiger bound") {
  EngineConfig no_r7;
  no_r7.enabledRules = RuleSet::all().without(Rule::R7);
  for (const Graph& g : corpus(7)) {
    const MuBounds b = mu_bounds(g, no_r7);
    REQUIRE(b.resolved());
    if (is_chordal(g)) CHECK(chordal_mu(g) == b.lo);
    if (g.order() >= 2) CHECK(hadwiger_number(g).lo - 1 <= b.lo);
  }
}

TEST_CASE("certificates feed R12") {
  EngineConfig cfg;
  cfg.enabledRules = RuleSet::none().with(Rule::R12);
  cfg.certificates.push_back(canonical_complete_certificate(5));
  CHECK(mu_bounds(complete(5), cfg).lo == 4);
  CHECK(mu_bounds(complete(4), cfg).lo == 0);
  CdVCertificate broken = canonical_complete_certificate(5);
  broken.matrix(0, 0) = -7;
  cfg.certificates = {broken};
  CHECK(mu_bounds(complete(5), cfg).lo == 0);
  EngineConfig search;
  search.enabledRules = RuleSet::none().with(Rule::R12).with(Rule::R6);
  search.certificateSearchBudget = 2000;
  CHECK(mu_bounds(cycle(5), search).lo >= 2);
}

TEST_CASE("configuration limits and parsing") {
  EngineConfig cfg;
  cfg.deletionDepth = 4;
  CHECK_THROWS_AS(MuEngine(cfg), PreconditionError);
  cfg.deletionDepth = 0;
  CHECK(mu_bounds(complete_multipartite({2, 2, 2, 2}), cfg).lo == 5);
  CHECK(parse_rule("R7") == Rule::R7);
  CHECK(parse_rule("12") == Rule::R12);
  CHECK_THROWS(parse_rule("R13"));
  CHECK_THROWS(parse_rule("x"));
  CHECK(to_string(Rule::R10) == "R10");
}
