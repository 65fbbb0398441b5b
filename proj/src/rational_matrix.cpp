#include "cdv/rational_matrix.hpp"

#include <sstream>
#include <utility>

#include "cdv/errors.hpp"

namespace cdv {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw PreconditionError("ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> d) {
  const int n = static_cast<int>(d.size());
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum dimension mismatch");
  RationalMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw PreconditionError("matrix difference dimension mismatch");
  RationalMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
    out << '\n';
  }
  return out.str();
}

Inertia inertia(const RationalMatrix& m) {
  if (!m.is_square()) throw PreconditionError("inertia of a non-square matrix");
  if (!m.is_symmetric()) throw PreconditionError("inertia of a non-symmetric matrix");
  // Work on the active trailing block indexed by `active`.
  RationalMatrix a = m;
  std::vector<int> active(m.rows());
  for (int i = 0; i < m.rows(); ++i) active[i] = i;
  Inertia out;

  auto remove = [&](int idx) { active.erase(active.begin() + idx); };

  while (!active.empty()) {
    const int k = static_cast<int>(active.size());
    int diag = -1;
    for (int s = 0; s < k; ++s)
      if (!a(active[s], active[s]).is_zero()) {
        diag = s;
        break;
      }
    if (diag >= 0) {
      const int p = active[diag];
      const Rational pivot = a(p, p);
      (pivot.sign() < 0 ? out.negative : out.positive) += 1;
      remove(diag);
      for (int i : active) {
        if (a(i, p).is_zero()) continue;
        const Rational factor = a(i, p) / pivot;
        for (int j : active) a(i, j) -= factor * a(p, j);
      }
      continue;
    }
    int sp = -1, sq = -1;
    for (int s = 0; s < k && sp < 0; ++s)
      for (int t = s + 1; t < k; ++t)
        if (!a(active[s], active[t]).is_zero()) {
          sp = s;
          sq = t;
          break;
        }
    if (sp < 0) {
      out.zero += k;
      break;
    }
    // Block [[0, b], [b, 0]] with inverse [[0, 1/b], [1/b, 0]].
    const int p = active[sp];
    const int q = active[sq];
    const Rational b = a(p, q);
    out.negative += 1;
    out.positive += 1;
    remove(sq);
    remove(sp);
    for (int i : active) {
      const Rational cip = a(i, p);
      const Rational ciq = a(i, q);
      if (cip.is_zero() && ciq.is_zero()) continue;
      for (int j : active) {
        const Rational update = (cip * a(q, j) + ciq * a(p, j)) / b;
        if (!update.is_zero()) a(i, j) -= update;
      }
    }
  }
  return out;
}

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(RationalMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < a.rows(); ++r)
      if (!a(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    const Rational inv = Rational(1) / a(row, col);
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (int j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return static_cast<int>(rref(a).size());
}

int corank(const RationalMatrix& m) {
  if (!m.is_square()) throw PreconditionError("corank of a non-square matrix");
  return m.rows() - rank(m);
}

int nullspace_dimension(const RationalMatrix& a) { return a.cols() - rank(a); }

RationalMatrix nullspace_basis(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix basis(a.cols(), static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    const int f = free_cols[k];
    basis(f, k) = 1;
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) basis(pivots[r], k) = -a(r, f);
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (static_cast<int>(b.size()) != a.rows()) throw PreconditionError("right-hand side size mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (int r = 0; r < static_cast<int>(pivots.size()); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

}  // namespace cdv
