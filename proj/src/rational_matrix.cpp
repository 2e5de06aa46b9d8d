#include "mcluster/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace mcluster {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  RationalMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a.numerator() == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c) out.at(r, c) += a * rhs.at(k, c);
    }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x.numerator() != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::row_block(int r0, int count) const {
  RationalMatrix out(count, cols_);
  for (int r = 0; r < count; ++r)
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r0 + r, c);
  return out;
}

std::vector<int> RationalMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int r = row; r < rows_; ++r)
      if (at(r, col).numerator() != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(row, c));
    const Rational inv = Rational(1) / at(row, col);
    for (int c = col; c < cols_; ++c) at(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).numerator() == 0) continue;
      const Rational f = at(r, col);
      for (int c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int RationalMatrix::rank() const {
  RationalMatrix work = *this;
  return static_cast<int>(work.rref().size());
}

RationalMatrix RationalMatrix::nullspace() const {
  RationalMatrix work = *this;
  const auto pivots = work.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  RationalMatrix basis(cols_, static_cast<int>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis.at(free[k], static_cast<int>(k)) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p)
      basis.at(pivots[p], static_cast<int>(k)) = -work.at(static_cast<int>(p), free[k]);
  }
  return basis;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
  }
  os << ']';
  return os.str();
}

}  // namespace mcluster
