#include "hopfcqt/matrix.hpp"

#include <map>

#include "hopfcqt/error.hpp"

namespace hopfcqt {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool LinearAccumulator::add(std::vector<std::pair<std::size_t, Scalar>> row, Scalar rhs) {
  if (!consistent_) return false;
  std::map<std::size_t, Scalar> r;
  for (auto& [c, v] : row) {
    if (c >= n_) throw DimensionMismatch("unknown index out of range");
    if (v.is_zero()) continue;
    auto [it, fresh] = r.emplace(c, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  for (;;) {
    auto it = r.begin();
    while (it != r.end() && pivot_row_[it->first] == npos) ++it;
    if (it == r.end()) break;
    Scalar factor = it->second;
    const Row& p = rows_[pivot_row_[it->first]];
    for (const auto& [c, v] : p.entries) {
      auto [jt, fresh] = r.emplace(c, Scalar());
      jt->second -= factor * v;
      if (jt->second.is_zero()) r.erase(jt);
    }
    rhs -= factor * p.rhs;
  }
  if (r.empty()) {
    if (!rhs.is_zero()) consistent_ = false;
    return consistent_;
  }
  Row nr;
  nr.pivot = r.begin()->first;
  Scalar lead_inv = r.begin()->second.inv();
  for (auto& [c, v] : r) nr.entries.emplace_back(c, v * lead_inv);
  nr.rhs = rhs * lead_inv;
  // keep the system fully reduced
  for (auto& other : rows_) {
    Scalar factor;
    for (const auto& [c, v] : other.entries)
      if (c == nr.pivot) factor = v;
    if (factor.is_zero()) continue;
    std::map<std::size_t, Scalar> m(other.entries.begin(), other.entries.end());
    for (const auto& [c, v] : nr.entries) {
      auto [jt, fresh] = m.emplace(c, Scalar());
      jt->second -= factor * v;
      if (jt->second.is_zero()) m.erase(jt);
    }
    other.entries.assign(m.begin(), m.end());
    other.rhs -= factor * nr.rhs;
  }
  pivot_row_[nr.pivot] = rows_.size();
  rows_.push_back(std::move(nr));
  return true;
}

std::vector<std::size_t> LinearAccumulator::free_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < n_; ++c)
    if (pivot_row_[c] == npos) out.push_back(c);
  return out;
}

std::vector<LinearAccumulator::Affine> LinearAccumulator::parametrize() const {
  std::vector<Affine> out(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    if (pivot_row_[c] == npos) {
      out[c].terms.emplace_back(c, Scalar(1));
      continue;
    }
    const Row& r = rows_[pivot_row_[c]];
    out[c].constant = r.rhs;
    for (const auto& [k, v] : r.entries)
      if (k != c) out[c].terms.emplace_back(k, -v);
  }
  return out;
}

LinearSolution solve_linear(const Matrix& a, const Matrix& b) {
  if (b.cols() != 1 || b.rows() != a.rows()) throw DimensionMismatch("solve_linear: b must be a column of matching height");
  LinearAccumulator acc(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<std::pair<std::size_t, Scalar>> row;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) row.emplace_back(j, a.at(i, j));
    acc.add(std::move(row), b.at(i, 0));
  }
  LinearSolution sol;
  sol.rank = acc.rank();
  if (!acc.consistent()) return sol;
  auto param = acc.parametrize();
  auto frees = acc.free_variables();
  sol.particular.resize(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) sol.particular[c] = param[c].constant;
  for (std::size_t f : frees) {
    std::vector<Scalar> k(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
      for (const auto& [idx, v] : param[c].terms)
        if (idx == f) k[c] = v;
    sol.kernel.push_back(std::move(k));
  }
  sol.kind = frees.empty() ? LinearSolution::Kind::Unique : LinearSolution::Kind::Family;
  return sol;
}

std::size_t commutant_dimension(const std::vector<Matrix>& mats, std::size_t n) {
  LinearAccumulator acc(n * n);
  for (const Matrix& m : mats) {
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("commutant_dimension: matrices must be n x n");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // (XM - MX)_{ij} = sum_k X_{ik} M_{kj} - M_{ik} X_{kj}
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (!m.at(k, j).is_zero()) row.emplace_back(i * n + k, m.at(k, j));
          if (!m.at(i, k).is_zero()) row.emplace_back(k * n + j, -m.at(i, k));
        }
        acc.add(std::move(row), Scalar());
      }
  }
  return n * n - acc.rank();
}

}  // namespace hopfcqt
