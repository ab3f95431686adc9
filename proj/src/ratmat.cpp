#include "weakhecke/ratmat.hpp"

namespace weakhecke {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw DomainError("RatMatrix: dimension mismatch in product");
  RatMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += v * other.at(k, j);
    }
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("RatMatrix: dimension mismatch in difference");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("RatMatrix: dimension mismatch in sum");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
  return out;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw DomainError("RatMatrix: dimension mismatch in apply");
  RatVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<std::size_t> RatMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
    Rational inv = 1 / at(row, col);
    for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      Rational f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RatMatrix::rank() const {
  RatMatrix copy = *this;
  return copy.rref().size();
}

RatMatrix RatMatrix::nullspace() const {
  RatMatrix r = *this;
  std::vector<std::size_t> pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  RatMatrix basis(cols_, free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t f = free_cols[fi];
    basis.at(f, fi) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) basis.at(pivots[pi], fi) = -r.at(pi, f);
  }
  return basis;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("RatMatrix: inverse of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return RatMatrix(0, 0);
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (pivots.size() != n || pivots[n - 1] != n - 1)
    throw DomainError("RatMatrix: matrix is singular");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

}  // namespace weakhecke
