#pragma once

#include <cstddef>
#include <vector>

#include "hopfcqt/scalar.hpp"

namespace hopfcqt {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Scalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct LinearSolution {
  enum class Kind { Unique, Family, Inconsistent };
  Kind kind = Kind::Inconsistent;
  std::size_t rank = 0;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
};

// A x = b with b a single column.
LinearSolution solve_linear(const Matrix& a, const Matrix& b);

// Dimension of {X : XM = MX for all M}.
std::size_t commutant_dimension(const std::vector<Matrix>& mats, std::size_t n);

// Incremental row-echelon accumulator for sparse linear equations
// sum_k coeff_k x_k = rhs over a fixed number of unknowns.
class LinearAccumulator {
 public:
  explicit LinearAccumulator(std::size_t unknowns) : n_(unknowns), pivot_row_(unknowns, npos) {}
  // Returns false once the system became inconsistent.
  bool add(std::vector<std::pair<std::size_t, Scalar>> row, Scalar rhs);
  bool consistent() const { return consistent_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t unknowns() const { return n_; }
  // Express every unknown as constant + sum coeff * free variable.
  struct Affine {
    Scalar constant;
    std::vector<std::pair<std::size_t, Scalar>> terms;  // (free index, coeff)
  };
  std::vector<std::size_t> free_variables() const;
  std::vector<Affine> parametrize() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct Row {
    std::size_t pivot;
    std::vector<std::pair<std::size_t, Scalar>> entries;  // sorted, pivot coeff 1
    Scalar rhs;
  };
  std::size_t n_;
  std::vector<std::size_t> pivot_row_;
  std::vector<Row> rows_;
  bool consistent_ = true;
};

}  // namespace hopfcqt
