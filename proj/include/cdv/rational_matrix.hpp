#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdv/rational.hpp"

namespace cdv {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  /// Nested initializer rows; all rows must have equal length.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(int n);
  static RationalMatrix diagonal(std::span<const Rational> d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const RationalMatrix&) const = default;

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

struct Inertia {
  int negative = 0;
  int zero = 0;
  int positive = 0;
  bool operator==(const Inertia&) const = default;
};

/// Exact inertia by symmetric elimination (Sylvester's law). A nonzero
/// diagonal pivot contributes its sign; when the remaining diagonal is zero
/// but an off-diagonal entry b is not, the 2x2 block [[0, b], [b, 0]] is
/// eliminated at once and contributes one negative and one positive.
/// Throws PreconditionError unless m is square and symmetric.
Inertia inertia(const RationalMatrix& m);

int rank(const RationalMatrix& m);
/// n - rank; throws PreconditionError for non-square input.
int corank(const RationalMatrix& m);

/// Dimension of {x : a x = 0}, i.e. cols - rank.
int nullspace_dimension(const RationalMatrix& a);
/// Basis of {x : a x = 0} as the columns of a cols x dim matrix, one
/// vector per free column of the reduced row echelon form.
RationalMatrix nullspace_basis(const RationalMatrix& a);

/// Some solution of a x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b);

}  // namespace cdv
