#include "folcoh/linalg.hpp"

#include <algorithm>

namespace folcoh {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& s : r.a_) s = -s;
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& s : r.a_) s *= c;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::conjugate() const {
  Matrix r = *this;
  for (auto& s : r.a_) s = s.conj();
  return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw Error("hstack row mismatch");
  Matrix r(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw Error("vstack column mismatch");
  Matrix r(a.rows_ + b.rows_, a.cols_);
  for (int j = 0; j < a.cols_; ++j) {
    for (int i = 0; i < a.rows_; ++i) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i) r.at(a.rows_ + i, j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
  Matrix r(rows_, int(idx.size()));
  for (int j = 0; j < int(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

Matrix Matrix::column(int j) const { return columns({j}); }

Matrix rref(Matrix m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int pr = 0;  // next pivot row
  for (int pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
    int sel = -1;
    for (int i = pr; i < m.rows(); ++i) {
      if (!m.at(i, pc).is_zero()) { sel = i; break; }
    }
    if (sel < 0) continue;
    if (sel != pr) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pr, j));
    }
    Scalar inv = Scalar(1) / m.at(pr, pc);
    for (int j = pc; j < m.cols(); ++j) m.at(pr, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == pr || m.at(i, pc).is_zero()) continue;
      Scalar f = m.at(i, pc);
      for (int j = pc; j < m.cols(); ++j) m.at(i, j) -= f * m.at(pr, j);
    }
    if (pivots) pivots->push_back(pc);
    ++pr;
  }
  return m;
}

int rank(const Matrix& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return int(piv.size());
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  std::vector<int> piv;
  Matrix r = rref(Matrix::hstack(m, Matrix::identity(m.rows())), &piv);
  int left_pivots = 0;
  for (int p : piv) left_pivots += (p < m.cols());
  if (left_pivots != m.rows()) throw Error("inverse of singular matrix");
  Matrix out(m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) out.at(i, j) = r.at(i, m.cols() + j);
  return out;
}

Matrix solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw Error("solve shape mismatch");
  std::vector<int> piv;
  Matrix r = rref(Matrix::hstack(m, rhs), &piv);
  // Require full column rank on the coefficient block.
  for (int p : piv)
    if (p >= m.cols()) throw Error("inconsistent linear system");
  if (int(piv.size()) != m.cols()) throw Error("underdetermined linear system");
  Matrix x(m.cols(), rhs.cols());
  for (int i = 0; i < int(piv.size()); ++i)
    for (int j = 0; j < rhs.cols(); ++j) x.at(piv[i], j) = r.at(i, m.cols() + j);
  return x;
}

Subspace Subspace::span(int ambient_dim, const Matrix& vectors) {
  if (vectors.rows() != ambient_dim) throw AmbientMismatch("span: vector length != ambient dim");
  std::vector<int> piv;
  Matrix r = rref(vectors.transpose(), &piv);
  Matrix basis(ambient_dim, int(piv.size()));
  for (int v = 0; v < int(piv.size()); ++v)
    for (int i = 0; i < ambient_dim; ++i) basis.at(i, v) = r.at(v, i);
  return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, Matrix(ambient_dim, 0)); }

Subspace Subspace::full(int ambient_dim) {
  return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw AmbientMismatch("contains: ambient dims differ");
  if (other.dim() == 0) return true;
  return rank(Matrix::hstack(basis_, other.basis_)) == dim();
}

bool Subspace::contains_vector(const Matrix& v) const {
  return contains(Subspace::span(ambient_, v));
}

Subspace kernel_basis(const Matrix& m) {
  std::vector<int> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : piv) is_pivot[p] = true;
  Matrix basis(m.cols(), m.cols() - int(piv.size()));
  int v = 0;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    basis.at(j, v) = Scalar(1);
    for (int i = 0; i < int(piv.size()); ++i)
      if (piv[i] < j) basis.at(piv[i], v) = -r.at(i, j);
    ++v;
  }
  return Subspace::span(m.cols(), basis);
}

Subspace image(const Matrix& m) { return Subspace::span(m.rows(), m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("sum: ambient dims differ");
  return Subspace::span(a.ambient_dim(), Matrix::hstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("intersect: ambient dims differ");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  // Ker[A | B] parameterizes pairs (x, y) with A x = -B y.
  Subspace k = kernel_basis(Matrix::hstack(a.basis(), b.basis()));
  Matrix xs(a.dim(), k.dim());
  for (int j = 0; j < k.dim(); ++j)
    for (int i = 0; i < a.dim(); ++i) xs.at(i, j) = k.basis().at(i, j);
  return Subspace::span(a.ambient_dim(), a.basis() * xs);
}

int quotient_dim(const Subspace& numerator, const Subspace& denominator) {
  if (!numerator.contains(denominator))
    throw NotContained("quotient: denominator not contained in numerator");
  return numerator.dim() - denominator.dim();
}

Subspace complement_in(const Subspace& inner, const Subspace& whole) {
  if (!whole.contains(inner)) throw NotContained("complement_in: inner not within whole");
  Matrix acc = inner.basis();
  std::vector<int> chosen;
  int r = inner.dim();
  for (int j = 0; j < whole.dim(); ++j) {
    Matrix cand = Matrix::hstack(acc, whole.basis().column(j));
    if (rank(cand) > r) {
      acc = cand;
      ++r;
      chosen.push_back(j);
    }
  }
  return Subspace::span(whole.ambient_dim(), whole.basis().columns(chosen));
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (m.rows() != target.ambient_dim()) throw AmbientMismatch("preimage: shape mismatch");
  // v in preimage iff m v = T y for some y: kernel of [m | -T], first block.
  Subspace k = kernel_basis(Matrix::hstack(m, -target.basis()));
  Matrix vs(m.cols(), k.dim());
  for (int j = 0; j < k.dim(); ++j)
    for (int i = 0; i < m.cols(); ++i) vs.at(i, j) = k.basis().at(i, j);
  return Subspace::span(m.cols(), vs);
}

Matrix apply(const Matrix& m, const Subspace& s) { return m * s.basis(); }

}  // namespace folcoh
