#pragma once

// Brute-force reference implementations. Deliberately naive: adjacency
// bitmasks, full permutation scans, exhaustive delete/contract recursion.
// Nothing here calls the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cdv/graph.hpp"
#include "cdv/rational.hpp"
#include "cdv/rational_matrix.hpp"

namespace oracle {

struct Adj {
  int n = 0;
  std::vector<std::uint32_t> row;

  explicit Adj(int n_ = 0) : n(n_), row(n_, 0) {}
  bool has(int u, int v) const { return row[u] >> v & 1u; }
  void add(int u, int v) {
    row[u] |= 1u << v;
    row[v] |= 1u << u;
  }
  int degree(int v) const { return __builtin_popcount(row[v]); }
  int edges() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }
};

inline Adj from(const cdv::Graph& g) {
  Adj a(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) a.add(u, v);
  return a;
}

inline Adj from_mask(int n, std::uint64_t mask) {
  Adj a(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) a.add(u, v);
  return a;
}

/// Smallest upper-triangle bit string over all n! relabelings.
inline std::uint64_t min_form(const Adj& a) {
  std::vector<int> p(a.n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    std::uint64_t code = 0;
    for (int u = 0; u < a.n; ++u)
      for (int v = u + 1; v < a.n; ++v) code = code << 1 | (a.has(p[u], p[v]) ? 1u : 0u);
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool isomorphic(const Adj& a, const Adj& b) {
  return a.n == b.n && a.edges() == b.edges() && min_form(a) == min_form(b);
}

/// Injective maps from pattern into host, checked exhaustively.
inline bool contains_subgraph(const Adj& host, const Adj& pat, bool induced = false) {
  if (pat.n > host.n) return false;
  std::vector<int> map(pat.n, -1);
  std::vector<bool> used(host.n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == pat.n) return true;
    for (int h = 0; h < host.n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const bool pe = pat.has(i, j), he = host.has(h, map[j]);
        if (pe && !he) ok = false;
        if (induced && !pe && he) ok = false;
      }
      if (!ok) continue;
      used[h] = true;
      map[i] = h;
      if (self(self, i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

inline Adj delete_vertex(const Adj& a, int x) {
  Adj b(a.n - 1);
  for (int u = 0, bu = 0; u < a.n; ++u) {
    if (u == x) continue;
    for (int v = u + 1, bv = bu + 1; v < a.n; ++v) {
      if (v == x) continue;
      if (a.has(u, v)) b.add(bu, bv);
      ++bv;
    }
    ++bu;
  }
  return b;
}

/// Merge y into x, then drop y.
inline Adj contract(const Adj& a, int x, int y) {
  Adj c = a;
  for (int w = 0; w < a.n; ++w)
    if (w != x && w != y && a.has(y, w)) c.add(x, w);
  return delete_vertex(c, y);
}

/// Exhaustive minor test: delete or contract until the host has as many
/// vertices as the pattern, then look for the pattern as a subgraph.
inline bool has_minor(const Adj& host, const Adj& pat) {
  std::set<std::pair<int, std::uint64_t>> failed;
  auto rec = [&](auto&& self, const Adj& h) -> bool {
    if (h.n < pat.n || h.edges() < pat.edges()) return false;
    if (h.n == pat.n) return contains_subgraph(h, pat);
    const auto key = std::make_pair(h.n, min_form(h));
    if (failed.count(key)) return false;
    for (int v = 0; v < h.n; ++v)
      if (self(self, delete_vertex(h, v))) return true;
    for (int u = 0; u < h.n; ++u)
      for (int v = u + 1; v < h.n; ++v)
        if (h.has(u, v) && self(self, contract(h, u, v))) return true;
    failed.insert(key);
    return false;
  };
  return rec(rec, host);
}

inline Adj complete(int n) {
  Adj a(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) a.add(u, v);
  return a;
}

inline Adj bipartite(int p, int q) {
  Adj a(p + q);
  for (int u = 0; u < p; ++u)
    for (int v = p; v < p + q; ++v) a.add(u, v);
  return a;
}

inline bool planar(const Adj& a) { return !has_minor(a, complete(5)) && !has_minor(a, bipartite(3, 3)); }
inline bool outerplanar(const Adj& a) { return !has_minor(a, complete(4)) && !has_minor(a, bipartite(2, 3)); }

inline bool acyclic(const Adj& a) {
  std::vector<int> parent(a.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < a.n; ++u)
    for (int v = u + 1; v < a.n; ++v)
      if (a.has(u, v)) {
        const int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
      }
  return true;
}

inline bool linear_forest(const Adj& a) {
  for (int v = 0; v < a.n; ++v)
    if (a.degree(v) > 2) return false;
  return acyclic(a);
}

/// No induced cycle on four or more vertices.
inline bool chordal(const Adj& a) {
  for (std::uint32_t s = 0; s < (1u << a.n); ++s) {
    const int k = __builtin_popcount(s);
    if (k < 4) continue;
    bool two_regular = true;
    for (int v = 0; v < a.n && two_regular; ++v)
      if (s >> v & 1u) two_regular = __builtin_popcount(a.row[v] & s) == 2;
    if (!two_regular) continue;
    // Connected 2-regular means a single cycle.
    std::uint32_t seen = s & (~s + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < a.n; ++v)
        if (frontier >> v & 1u) next |= a.row[v] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s) return false;
  }
  return true;
}

inline int clique_number(const Adj& a) {
  int best = a.n > 0 ? 1 : 0;
  for (std::uint32_t s = 1; s < (1u << a.n); ++s) {
    const int k = __builtin_popcount(s);
    if (k <= best) continue;
    bool clique = true;
    for (int v = 0; v < a.n && clique; ++v)
      if (s >> v & 1u) clique = (a.row[v] & s) == (s & ~(1u << v));
    if (clique) best = k;
  }
  return best;
}

inline Adj complement(const Adj& a) {
  Adj c(a.n);
  for (int u = 0; u < a.n; ++u)
    for (int v = u + 1; v < a.n; ++v)
      if (!a.has(u, v)) c.add(u, v);
  return c;
}

/// Characteristic polynomial coefficients c_0..c_n of det(xI - M), by
/// Faddeev-LeVerrier in exact arithmetic.
inline std::vector<cdv::Rational> char_poly(const cdv::RationalMatrix& m) {
  const int n = m.rows();
  std::vector<cdv::Rational> c(n + 1);
  c[n] = 1;
  cdv::RationalMatrix mk(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    cdv::RationalMatrix next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    const cdv::RationalMatrix am = m * mk;
    cdv::Rational tr;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -(tr / cdv::Rational(k));
  }
  return c;
}

/// Inertia of a symmetric matrix from its real-rooted characteristic
/// polynomial: zero eigenvalues = lowest nonzero coefficient index, positive
/// eigenvalues = sign changes (Descartes is exact for real-rooted polynomials).
inline cdv::Inertia inertia(const cdv::RationalMatrix& m) {
  const int n = m.rows();
  const auto c = char_poly(m);
  cdv::Inertia out;
  int z = 0;
  while (z <= n && c[z].is_zero()) ++z;
  out.zero = z;
  int changes = 0, last = 0;
  for (int i = z; i <= n; ++i) {
    const int s = c[i].sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  out.positive = changes;
  out.negative = n - z - changes;
  return out;
}

}  // namespace oracle
