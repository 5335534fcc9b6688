#pragma once

#include <vector>

#include "folcoh/errors.hpp"
#include "folcoh/scalar.hpp"

namespace folcoh {

/// Dense matrix over Q(i).  All reductions use exact arithmetic with
/// leftmost-pivot / first-nonzero-row pivoting, so every result is
/// deterministic.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix transpose() const;
  Matrix conjugate() const;
  Matrix conjugate_transpose() const { return conjugate().transpose(); }

  /// [a | b] side by side; row counts must match.
  static Matrix hstack(const Matrix& a, const Matrix& b);
  /// a on top of b; column counts must match.
  static Matrix vstack(const Matrix& a, const Matrix& b);

  Matrix columns(const std::vector<int>& idx) const;
  Matrix column(int j) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form.  Pivot column indices go to *pivots if given.
Matrix rref(Matrix m, std::vector<int>* pivots = nullptr);

int rank(const Matrix& m);

/// Inverse of a square invertible matrix; throws Error if singular.
Matrix inverse(const Matrix& m);

/// Solve m x = rhs for each rhs column; throws Error if inconsistent or
/// underdetermined columns are hit (used only on full-column-rank systems).
Matrix solve(const Matrix& m, const Matrix& rhs);

/// A linear subspace of an ambient coordinate space, stored with a reduced
/// (row-echelon canonical) basis so subspace equality is basis equality.
class Subspace {
 public:
  /// Canonicalizes the span of the given columns.
  static Subspace span(int ambient_dim, const Matrix& vectors);
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  /// Columns are the canonical basis vectors.
  const Matrix& basis() const { return basis_; }

  bool contains(const Subspace& other) const;
  bool contains_vector(const Matrix& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  int ambient_ = 0;
  Matrix basis_{0, 0};
};

Subspace kernel_basis(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// dim(numerator) - dim(denominator); throws NotContained unless
/// denominator is a subspace of numerator.
int quotient_dim(const Subspace& numerator, const Subspace& denominator);

/// Vectors of `whole` extending a basis of `inner` to one of `whole`
/// (echelon complement; deterministic).  Requires inner within whole.
Subspace complement_in(const Subspace& inner, const Subspace& whole);

/// {v : m v in target}; m maps the ambient of the result into target's ambient.
Subspace preimage(const Matrix& m, const Subspace& target);

/// m restricted to a subspace of its source: columns are m * basis vectors.
Matrix apply(const Matrix& m, const Subspace& s);

}  // namespace folcoh
