#include "cdv/certificates.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "cdv/errors.hpp"
#include "cdv/graph6.hpp"

namespace cdv {

std::string to_string(CertFailure f) {
  switch (f) {
    case CertFailure::DimensionMismatch: return "DimensionMismatch";
    case CertFailure::NotSymmetric: return "NotSymmetric";
    case CertFailure::PatternNonEdge: return "PatternNonEdge";
    case CertFailure::PatternEdgeSign: return "PatternEdgeSign";
    case CertFailure::InertiaNotOneNegative: return "InertiaNotOneNegative";
    case CertFailure::SapFails: return "SapFails";
  }
  return "?";
}

namespace {

std::string pos(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

CertVerdict fail(CertFailure f, std::string details) {
  CertVerdict v;
  v.failure = f;
  v.details = std::move(details);
  return v;
}

}  // namespace

CertVerdict verify_certificate(const CdVCertificate& cert) {
  const Graph& g = cert.graph;
  const RationalMatrix& m = cert.matrix;
  const int n = g.order();
  if (m.rows() != n || m.cols() != n)
    return fail(CertFailure::DimensionMismatch,
                "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    " but the graph has " + std::to_string(n) + " vertices");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) return fail(CertFailure::NotSymmetric, "entries " + pos(i, j) + " and " + pos(j, i) + " differ");

  // Condition 1: sign pattern.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) {
        if (m(i, j).sign() >= 0)
          return fail(CertFailure::PatternEdgeSign,
                      "edge entry " + pos(i, j) + " = " + m(i, j).to_string() + " is not negative");
      } else if (!m(i, j).is_zero()) {
        return fail(CertFailure::PatternNonEdge,
                    "non-edge entry " + pos(i, j) + " = " + m(i, j).to_string() + " is not zero");
      }
    }

  // Condition 2: exactly one negative eigenvalue.
  const Inertia in = inertia(m);
  if (in.negative != 1)
    return fail(CertFailure::InertiaNotOneNegative,
                "inertia (" + std::to_string(in.negative) + ", " + std::to_string(in.zero) + ", " +
                    std::to_string(in.positive) + ") has " + std::to_string(in.negative) +
                    " negative eigenvalues");

  // Condition 3: Strong Arnold Property. X is symmetric with X_ab = X_ba = x
  // for each non-edge a < b; (MX)_{kl} = sum_i M_ki X_il.
  std::vector<Edge> vars;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!g.has_edge(a, b)) vars.emplace_back(a, b);
  if (!vars.empty()) {
    RationalMatrix system(n * n, static_cast<int>(vars.size()));
    for (int v = 0; v < static_cast<int>(vars.size()); ++v) {
      const auto [a, b] = vars[v];
      for (int k = 0; k < n; ++k) {
        system(k * n + b, v) += m(k, a);
        system(k * n + a, v) += m(k, b);
      }
    }
    const RationalMatrix kernel = nullspace_basis(system);
    if (kernel.cols() > 0) {
      std::string witness;
      for (int v = 0; v < kernel.rows(); ++v)
        if (!kernel(v, 0).is_zero()) {
          if (!witness.empty()) witness += ", ";
          witness += "X_{" + std::to_string(vars[v].first + 1) + "," +
                     std::to_string(vars[v].second + 1) + "} = " + kernel(v, 0).to_string();
        }
      return fail(CertFailure::SapFails, "nonzero solution of MX = 0 (dimension " +
                                             std::to_string(kernel.cols()) + "): " + witness);
    }
  }

  CertVerdict ok;
  ok.valid = true;
  ok.corank = in.zero;
  ok.claimMatches = ok.corank == cert.claimedCorank;
  return ok;
}

CdVCertificate canonical_complete_certificate(int n) {
  if (n < 2) throw PreconditionError("complete-graph certificate needs n >= 2");
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = -1;
  return {complete(n), m, n - 1};
}

void cert_write(const CdVCertificate& cert, std::ostream& out) {
  out << "cdv 1\n" << graph6_encode(cert.graph) << '\n' << cert.claimedCorank << '\n';
  for (int i = 0; i < cert.matrix.rows(); ++i) {
    for (int j = 0; j < cert.matrix.cols(); ++j) out << (j ? " " : "") << cert.matrix(i, j);
    out << '\n';
  }
}

void cert_write(const CdVCertificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  cert_write(cert, out);
  if (!out) throw std::runtime_error("write error on '" + path + "'");
}

CdVCertificate cert_read(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) throw ParseError(std::string("missing ") + what, 0, lineno + 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };

  next_line("format header");
  if (line != "cdv 1") throw ParseError("expected header 'cdv 1'", 0, lineno);

  next_line("graph6 line");
  Graph g;
  try {
    g = graph6_decode(line);
  } catch (const ParseError& e) {
    throw ParseError(e.reason(), e.offset(), lineno);
  }

  next_line("claimed corank");
  int claimed = 0;
  {
    std::size_t used = 0;
    try {
      claimed = std::stoi(line, &used);
    } catch (const std::exception&) {
      throw ParseError("claimed corank is not an integer", 0, lineno);
    }
    if (used != line.size()) throw ParseError("trailing characters after corank", used, lineno);
  }

  const int n = g.order();
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    next_line("matrix row");
    std::size_t col = 0;
    int j = 0;
    while (col < line.size()) {
      while (col < line.size() && (line[col] == ' ' || line[col] == '\t')) ++col;
      if (col == line.size()) break;
      std::size_t end = col;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      if (j == n) throw ParseError("too many entries in matrix row", col, lineno);
      try {
        m(i, j) = Rational::parse(std::string_view(line).substr(col, end - col));
      } catch (const ParseError& e) {
        throw ParseError(e.reason(), col + e.offset(), lineno);
      }
      ++j;
      col = end;
    }
    if (j != n)
      throw ParseError("matrix row has " + std::to_string(j) + " entries, expected " + std::to_string(n),
                       line.size(), lineno);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i))
        throw ParseError("asymmetric matrix: entries " + pos(i, j) + " and " + pos(j, i) + " differ", 0,
                         lineno - n + 1 + i);
  return {g, m, claimed};
}

CdVCertificate cert_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate '" + path + "'");
  return cert_read(in);
}

}  // namespace cdv
