// cdv: command-line front end for the mu laboratory.
//
// Exit codes: 0 ok, 1 usage or input error, 2 a Violates verdict,
// 3 Inconclusive verdicts under --strict, 4 certificate rejected or not found.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "cdv/certificates.hpp"
#include "cdv/corpus.hpp"
#include "cdv/errors.hpp"
#include "cdv/graph6.hpp"
#include "cdv/harness.hpp"
#include "cdv/mu_engine.hpp"

namespace {

using namespace cdv;

constexpr int kExitUsage = 1;
constexpr int kExitViolates = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitCertificate = 4;

std::vector<Graph> load_graphs(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    auto stream = read_graph6(arg);
    return collect(*stream);
  }
  return {graph6_decode(arg)};
}

std::string graph_label(const Graph& g) {
  if (g.order() >= 1 && g.is_complete()) return "K_" + std::to_string(g.order());
  return graph6_encode(g);
}

struct MuArgs {
  std::string input;
  bool explain = false;
  std::vector<std::string> rules;
  std::vector<std::string> disable;
  int deletionDepth = 1;
  std::string convention = "paper";
  std::uint64_t minorBudget = kDefaultMinorBudget;
  std::vector<std::string> certs;
  std::uint64_t searchBudget = 0;
};

EngineConfig engine_config(const MuArgs& a) {
  EngineConfig cfg;
  if (!a.rules.empty()) {
    cfg.enabledRules = RuleSet::none();
    for (const auto& r : a.rules) cfg.enabledRules = cfg.enabledRules.with(parse_rule(r));
  }
  for (const auto& r : a.disable) cfg.enabledRules = cfg.enabledRules.without(parse_rule(r));
  cfg.deletionDepth = a.deletionDepth;
  cfg.edgelessConvention = a.convention == "matrix" ? EdgelessConvention::matrix : EdgelessConvention::paper;
  cfg.minorBudget = a.minorBudget;
  for (const auto& path : a.certs) cfg.certificates.push_back(cert_read(path));
  cfg.certificateSearchBudget = a.searchBudget;
  return cfg;
}

int run_mu(const MuArgs& a) {
  const std::vector<Graph> graphs = load_graphs(a.input);
  MuEngine engine(engine_config(a));
  for (const Graph& g : graphs) {
    const MuBounds b = engine.bounds(g);
    if (graphs.size() > 1) std::cout << graph6_encode(g) << ' ';
    if (b.resolved())
      std::cout << "mu = " << b.lo << " [" << b.lo << "," << b.hi << "]\n";
    else
      std::cout << "mu in [" << b.lo << "," << b.hi << "]\n";
    if (a.explain) std::cout << explain(b);
  }
  return 0;
}

struct VerifyArgs {
  int enumerate = 0;
  std::string input;
  std::string jsonl;
  std::uint64_t minorBudget = kDefaultMinorBudget;
  bool lemma6 = false;
  unsigned jobs = 1;
  bool strict = false;
};

int run_verify(const VerifyArgs& a) {
  std::unique_ptr<GraphStream> stream;
  if (a.enumerate > 0)
    stream = enumerate_graphs(a.enumerate);
  else
    stream = read_graph6(a.input);
  CampaignOptions opts;
  opts.engine.minorBudget = a.minorBudget;
  opts.jsonlPath = a.jsonl;
  opts.useLemma6Filter = a.lemma6;
  opts.jobs = a.jobs;
  try {
    const CampaignReport r = run_campaign(*stream, opts);
    std::cout << r.summary.to_string() << '\n';
    for (const auto& [tag, count] : r.summary.tagCounts) std::cout << "  " << tag << ": " << count << '\n';
    if (a.strict && r.summary.inconclusive > 0) return kExitInconclusive;
  } catch (const ViolationError& e) {
    std::cerr << e.what() << '\n';
    return kExitViolates;
  }
  return 0;
}

void emit(const Graph& g, const std::string& out) {
  std::cout << graph6_encode(g) << '\n';
  std::cerr << "n = " << g.order() << ", m = " << g.size() << '\n';
  if (!out.empty()) write_graph6(out, {g});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colin de Verdiere parameter laboratory"};
  app.require_subcommand(1);

  MuArgs mu;
  auto* mu_cmd = app.add_subcommand("mu", "Bounds on mu for a graph6 string or file");
  mu_cmd->add_option("graph", mu.input, "graph6 string or file")->required();
  mu_cmd->add_flag("--explain", mu.explain, "Print the rule trace");
  mu_cmd->add_option("--rules", mu.rules, "Enable only these rules (R1..R12)")->delimiter(',');
  mu_cmd->add_option("--disable", mu.disable, "Disable these rules")->delimiter(',');
  mu_cmd->add_option("--deletion-depth", mu.deletionDepth, "R11 recursion depth")->check(CLI::Range(0, 3));
  mu_cmd->add_option("--edgeless-convention", mu.convention)->check(CLI::IsMember({"paper", "matrix"}));
  mu_cmd->add_option("--minor-budget", mu.minorBudget, "Node budget per minor search");
  mu_cmd->add_option("--cert", mu.certs, "Certificate files for R12")->check(CLI::ExistingFile);
  mu_cmd->add_option("--search-budget", mu.searchBudget, "Certificate search iterations for R12");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the edge bound over a graph stream");
  auto* en = verify_cmd->add_option("--enumerate", verify.enumerate, "All graphs on n vertices")
                 ->check(CLI::Range(1, 8));
  auto* in = verify_cmd->add_option("--input", verify.input, "graph6 file")->check(CLI::ExistingFile);
  en->excludes(in);
  verify_cmd->add_option("--jsonl", verify.jsonl, "Write one JSON record per graph");
  verify_cmd->add_option("--minor-budget", verify.minorBudget);
  verify_cmd->add_flag("--use-lemma6-filter", verify.lemma6,
                       "Assert that all graphs on n - 1 vertices passed; skip non-minimal ones");
  verify_cmd->add_option("--jobs", verify.jobs)->check(CLI::Range(1, 256));
  verify_cmd->add_flag("--strict", verify.strict, "Exit 3 if anything is Inconclusive");

  auto* construct_cmd = app.add_subcommand("construct", "Build a named graph family member");
  construct_cmd->require_subcommand(1);
  std::string out;
  int t = 3, base_size = 4, copies = 2;
  std::uint64_t seed = 1;
  std::string family, name;
  auto* jt = construct_cmd->add_subcommand("join-tight", "join(stacked triangulation, K_{t-3})");
  jt->add_option("--t", t)->required()->check(CLI::Range(3, 60));
  jt->add_option("--base-size", base_size)->required()->check(CLI::Range(4, 64));
  jt->add_option("--seed", seed);
  auto* cs = construct_cmd->add_subcommand("clique-sum", "Chain of pure clique sums");
  cs->add_option("--family", family)->required()->check(CLI::IsMember({"k22222", "k122222"}));
  cs->add_option("--copies", copies)->required()->check(CLI::Range(1, 5));
  auto* nm = construct_cmd->add_subcommand("named", "K5, K3,3, P6, C7, petersen, p32, octahedron, K6-dY, ...");
  nm->add_option("name", name)->required();
  for (auto* sub : {jt, cs, nm}) sub->add_option("--out", out, "Also write a graph6 file");

  auto* cert_cmd = app.add_subcommand("cert", "Certificate tools");
  cert_cmd->require_subcommand(1);
  std::string cert_path, cert_out, cert_graph;
  int corank = 1;
  std::uint64_t budget = 20'000;
  auto* cv = cert_cmd->add_subcommand("verify", "Exactly verify a certificate file");
  cv->add_option("file", cert_path)->required();
  auto* cse = cert_cmd->add_subcommand("search", "Numeric search, exactly verified");
  cse->add_option("graph", cert_graph, "graph6 string")->required();
  cse->add_option("--corank", corank)->required();
  cse->add_option("--budget", budget);
  cse->add_option("--seed", seed);
  cse->add_option("--out", cert_out, "Certificate file to write");

  int enum_n = 1;
  std::string enum_out;
  auto* enum_cmd = app.add_subcommand("enumerate", "Write every graph on n vertices");
  enum_cmd->add_option("--n", enum_n)->required()->check(CLI::Range(1, 8));
  enum_cmd->add_option("--out", enum_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*mu_cmd) return run_mu(mu);
    if (*verify_cmd) {
      if (verify.enumerate == 0 && verify.input.empty()) {
        std::cerr << "verify needs --enumerate or --input\n";
        return kExitUsage;
      }
      return run_verify(verify);
    }
    if (*construct_cmd) {
      if (*jt) emit(join_tight(t, base_size, seed), out);
      if (*cs) emit(clique_sum_chain(family, copies), out);
      if (*nm) emit(named_graph(name), out);
      return 0;
    }
    if (*cert_cmd) {
      if (*cv) {
        const CdVCertificate c = cert_read(cert_path);
        const CertVerdict v = verify_certificate(c);
        if (!v.valid) {
          std::cout << "invalid, " << to_string(*v.failure) << ": " << v.details << '\n';
          return kExitCertificate;
        }
        std::cout << "valid, corank " << v.corank << ", mu(" << graph_label(c.graph) << ") >= " << v.corank;
        if (!v.claimMatches) std::cout << " (claimed " << c.claimedCorank << ")";
        std::cout << '\n';
        return 0;
      }
      const Graph g = graph6_decode(cert_graph);
      SearchOptions opts;
      opts.budget = budget;
      opts.seed = seed;
      const auto c = search_certificate(g, corank, opts);
      if (!c) {
        std::cout << "no certificate found (this says nothing about mu)\n";
        return kExitCertificate;
      }
      std::cout << "found, corank " << c->claimedCorank << ", mu(" << graph_label(g) << ") >= " << c->claimedCorank
                << '\n';
      if (!cert_out.empty())
        cert_write(*c, cert_out);
      else
        cert_write(*c, std::cout);
      return 0;
    }
    if (*enum_cmd) {
      auto stream = enumerate_graphs(enum_n);
      const std::vector<Graph> graphs = collect(*stream);
      write_graph6(enum_out, graphs);
      std::cout << graphs.size() << " graphs on " << enum_n << " vertices\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
