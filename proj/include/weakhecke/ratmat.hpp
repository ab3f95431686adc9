#ifndef WEAKHECKE_RATMAT_HPP
#define WEAKHECKE_RATMAT_HPP

#include <cstddef>
#include <vector>

#include "weakhecke/rational.hpp"

namespace weakhecke {

using RatVector = std::vector<Rational>;

// Dense matrix over the rationals, sized for the small exact computations the
// basis/quotient machinery needs.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix scaled(const Rational& s) const;
  RatVector apply(const RatVector& v) const;

  // In-place reduced row echelon form; returns the pivot column indices.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // Columns form a canonical (RREF-derived) basis of the right nullspace.
  RatMatrix nullspace() const;

  RatMatrix inverse() const;  // throws DomainError when singular

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

}  // namespace weakhecke

#endif
