#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace mcluster {

using Rational = boost::rational<std::int64_t>;

/// Dense row-major matrix over Q. Small sizes only: the largest systems
/// solved here have a few hundred unknowns.
///
/// Test entries through numerator(); mixed int/rational comparisons in
/// boost 1.74 recurse without end.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix&) const = default;
  bool is_zero() const;

  /// Rows [r0, r0 + count) as a new matrix.
  RationalMatrix row_block(int r0, int count) const;

  int rank() const;
  /// Columns form a basis of {x : A x = 0}; shape cols() x nullity.
  RationalMatrix nullspace() const;

  std::string to_string() const;

 private:
  // In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref();

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace mcluster
