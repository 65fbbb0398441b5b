#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cdv/certificates.hpp"
#include "cdv/errors.hpp"

namespace cdv {

namespace {

constexpr double kGap = 0.1;

/// Parameter vector: n diagonal entries then one log-weight per edge
/// (edge entry = -exp(s)).
class Landscape {
 public:
  Landscape(const Graph& g, int k) : n_(g.order()), k_(k), edges_(g.edges()) {}

  int dimension() const { return n_ + static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  Eigen::MatrixXd build(const Eigen::VectorXd& p) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
    for (int i = 0; i < n_; ++i) m(i, i) = p[i];
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const double w = -std::exp(p[n_ + e]);
      m(edges_[e].first, edges_[e].second) = w;
      m(edges_[e].second, edges_[e].first) = w;
    }
    return m;
  }

  double evaluate(const Eigen::VectorXd& p, Eigen::VectorXd* grad) const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build(p));
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXd& vec = es.eigenvectors();
    Eigen::VectorXd coef = Eigen::VectorXd::Zero(n_);
    double f = 0;
    if (k_ > 0) {
      double mean = 0;
      for (int i = 1; i <= k_; ++i) mean += lam[i];
      mean /= k_;
      for (int i = 1; i <= k_; ++i) {
        f += (lam[i] - mean) * (lam[i] - mean);
        coef[i] += 2 * (lam[i] - mean);
      }
    }
    if (n_ >= 2) {
      const double g1 = lam[1] - lam[0];
      if (g1 < kGap) {
        f += (kGap - g1) * (kGap - g1);
        coef[1] -= 2 * (kGap - g1);
        coef[0] += 2 * (kGap - g1);
      }
    }
    if (k_ >= 1 && k_ + 1 < n_) {
      const double g2 = lam[k_ + 1] - lam[k_];
      if (g2 < kGap) {
        f += (kGap - g2) * (kGap - g2);
        coef[k_ + 1] -= 2 * (kGap - g2);
        coef[k_] += 2 * (kGap - g2);
      }
    }
    // Pin the overall scale and keep weights in a sane range.
    const int m = static_cast<int>(edges_.size());
    double mean_s = 0;
    for (int e = 0; e < m; ++e) mean_s += p[n_ + e];
    if (m > 0) mean_s /= m;
    f += mean_s * mean_s;
    for (int e = 0; e < m; ++e) {
      const double over = std::abs(p[n_ + e]) - 3;
      if (over > 0) f += over * over;
    }
    if (grad) {
      grad->setZero(dimension());
      for (int i = 0; i < n_; ++i) {
        if (coef[i] == 0) continue;
        for (int j = 0; j < n_; ++j) (*grad)[j] += coef[i] * vec(j, i) * vec(j, i);
        for (int e = 0; e < m; ++e) {
          const auto [a, b] = edges_[e];
          const double w = -std::exp(p[n_ + e]);
          (*grad)[n_ + e] += coef[i] * 2 * vec(a, i) * vec(b, i) * w;
        }
      }
      for (int e = 0; e < m; ++e) {
        (*grad)[n_ + e] += 2 * mean_s / m;
        const double s = p[n_ + e];
        const double over = std::abs(s) - 3;
        if (over > 0) (*grad)[n_ + e] += 2 * over * (s > 0 ? 1 : -1);
      }
    }
    return f;
  }

 private:
  int n_;
  int k_;
  std::vector<Edge> edges_;
};

/// Exact matrix from diagonal values and edge values on g's pattern.
RationalMatrix assemble(const Graph& g, const std::vector<Edge>& edges, const std::vector<Rational>& p) {
  const int n = g.order();
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = p[i];
  for (std::size_t e = 0; e < edges.size(); ++e) {
    m(edges[e].first, edges[e].second) = p[n + e];
    m(edges[e].second, edges[e].first) = p[n + e];
  }
  return m;
}

std::optional<CdVCertificate> accept(const Graph& g, RationalMatrix m, int k) {
  CdVCertificate cert{g, std::move(m), 0};
  const CertVerdict v = verify_certificate(cert);
  if (!v.valid || v.corank < k) return std::nullopt;
  cert.claimedCorank = v.corank;
  return cert;
}

/// Numeric RREF of the k x n matrix a (rows = kernel vectors).
Eigen::MatrixXd numeric_rref(Eigen::MatrixXd a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  std::vector<bool> used(cols, false);
  for (int r = 0; r < rows; ++r) {
    int best = -1;
    for (int c = 0; c < cols; ++c)
      if (!used[c] && (best < 0 || std::abs(a(r, c)) > std::abs(a(r, best)))) best = c;
    if (best < 0 || std::abs(a(r, best)) < 1e-9) continue;
    used[best] = true;
    a.row(r) /= a(r, best);
    for (int o = 0; o < rows; ++o)
      if (o != r) a.row(o) -= a(o, best) * a.row(r);
    for (int c = 0; c < cols; ++c)
      if (std::abs(a(r, c)) < 1e-13) a(r, c) = 0;
  }
  return a;
}

std::optional<CdVCertificate> exact_stage(const Graph& g, const Landscape& land, const Eigen::VectorXd& p,
                                          int k, std::int64_t max_den) {
  const int n = g.order();
  const std::vector<Edge>& edges = land.edges();
  const Eigen::MatrixXd num = land.build(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(num);
  const Eigen::VectorXd& lam = es.eigenvalues();
  double shift = 0;
  if (k > 0) {
    for (int i = 1; i <= k; ++i) shift += lam[i];
    shift /= k;
  } else {
    shift = n >= 2 ? (lam[0] + lam[1]) / 2 : lam[0] + 1;
  }

  std::vector<std::int64_t> caps{10, 100, 1000};
  if (max_den > 1000) caps.push_back(max_den);

  auto rounded_point = [&](std::int64_t cap) {
    std::vector<Rational> q(n + edges.size());
    for (int i = 0; i < n; ++i) q[i] = Rational::approximate(num(i, i) - shift, cap);
    for (std::size_t e = 0; e < edges.size(); ++e)
      q[n + e] = Rational::approximate(num(edges[e].first, edges[e].second), cap);
    return q;
  };

  for (std::int64_t cap : caps)
    if (auto c = accept(g, assemble(g, edges, rounded_point(cap)), k)) return c;
  if (k == 0) return std::nullopt;

  // Round a kernel basis, then project the rounded point onto the exact
  // linear space of pattern matrices annihilating it.
  Eigen::MatrixXd kernel(k, n);
  for (int i = 0; i < k; ++i) kernel.row(i) = es.eigenvectors().col(i + 1).transpose();
  const Eigen::MatrixXd r = numeric_rref(kernel);
  const int vars = n + static_cast<int>(edges.size());
  for (std::int64_t cap : caps) {
    RationalMatrix system(n * k, vars);
    for (int t = 0; t < k; ++t) {
      std::vector<Rational> u(n);
      for (int j = 0; j < n; ++j) u[j] = Rational::approximate(r(t, j), cap);
      for (int i = 0; i < n; ++i) system(t * n + i, i) = u[i];
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [a, b] = edges[e];
        system(t * n + a, n + e) += u[b];
        system(t * n + b, n + e) += u[a];
      }
    }
    const RationalMatrix basis = nullspace_basis(system);
    if (basis.cols() == 0) continue;
    const std::vector<Rational> target = rounded_point(cap);
    const RationalMatrix bt = basis.transpose();
    RationalMatrix column(vars, 1);
    for (int i = 0; i < vars; ++i) column(i, 0) = target[i];
    const RationalMatrix rhs = bt * column;
    std::vector<Rational> rhs_vec(rhs.rows());
    for (int i = 0; i < rhs.rows(); ++i) rhs_vec[i] = rhs(i, 0);
    const auto coeffs = solve(bt * basis, rhs_vec);
    if (!coeffs) continue;
    std::vector<Rational> proj(vars);
    for (int i = 0; i < vars; ++i)
      for (int c = 0; c < basis.cols(); ++c) proj[i] += basis(i, c) * (*coeffs)[c];
    if (auto c = accept(g, assemble(g, edges, proj), k)) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CdVCertificate> search_certificate(const Graph& g, int target, const SearchOptions& options) {
  const int n = g.order();
  if (n > 20) throw CapacityError("certificate search supports at most 20 vertices");
  if (target < 0 || target >= n) throw PreconditionError("target corank must lie in [0, n)");
  if (target == n - 1) {
    if (!g.is_complete()) return std::nullopt;
    if (n < 2) return accept(g, RationalMatrix{{Rational(-1)}}, 0);
    return canonical_complete_certificate(n);
  }

  const Landscape land(g, target);
  const int dim = land.dimension();
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> jitter(0.0, 0.3);
  constexpr int kRestarts = 8;
  const std::uint64_t per_restart = std::max<std::uint64_t>(1, options.budget / kRestarts);
  std::uint64_t spent = 0;

  for (int restart = 0; restart < kRestarts && spent < options.budget; ++restart) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(dim);
    if (restart > 0)
      for (int i = 0; i < dim; ++i) p[i] = jitter(rng);
    Eigen::VectorXd grad(dim);
    double f = land.evaluate(p, &grad);
    double step = 0.1;
    for (std::uint64_t it = 0; it < per_restart && spent < options.budget; ++it, ++spent) {
      if (f < 1e-26) break;
      const Eigen::VectorXd trial = p - step * grad;
      Eigen::VectorXd trial_grad(dim);
      const double ft = land.evaluate(trial, &trial_grad);
      if (ft < f) {
        p = trial;
        grad = trial_grad;
        f = ft;
        step = std::min(step * 1.2, 10.0);
      } else {
        step *= 0.5;
        if (step < 1e-16) break;
      }
    }
    if (f < 1e-12)
      if (auto c = exact_stage(g, land, p, target, options.maxDenominator)) return c;
  }
  return std::nullopt;
}

}  // namespace cdv
