#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ghl {

using Integer = mpz_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal algebraic invariant fails (a bug, not a user error).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Raised when a computation would exceed the configured generator budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

std::string to_string(const Integer& v);

/* Sparse integer vector: entries sorted by index, no stored zeros. */
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Integer>;

  SparseVec() = default;
  /// Accepts entries in any order; duplicates are summed and zeros dropped.
  explicit SparseVec(std::vector<Entry> entries);

  static SparseVec unit(std::size_t i, const Integer& v = 1);
  static SparseVec from_dense(const std::vector<Integer>& v);

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  Integer at(std::size_t i) const;
  std::size_t last_index() const { return e_.back().first; }
  const Integer& last_value() const { return e_.back().second; }

  /// this += a * x
  void axpy(const Integer& a, const SparseVec& x);
  SparseVec scaled(const Integer& a) const;
  void negate();
  /// Reduces every entry into the symmetric range modulo m (m > 0).
  void reduce_mod(const Integer& m);
  std::vector<Integer> to_dense(std::size_t n) const;

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }

 private:
  std::vector<Entry> e_;
};

/* Integer matrix stored column-wise in sparse form. */
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_dense(std::size_t rows, std::size_t cols, const std::vector<Integer>& row_major);
  static IntMatrix from_triplets(std::size_t rows, std::size_t cols,
                                 const std::vector<std::tuple<std::size_t, std::size_t, Integer>>& t);
  static IntMatrix from_columns(std::size_t rows, std::vector<SparseVec> cols);
  static IntMatrix diagonal(const std::vector<Integer>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;

  Integer at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Integer& v);
  void add_to(std::size_t i, std::size_t j, const Integer& v);

  const SparseVec& column(std::size_t j) const { return cols_.at(j); }
  const std::vector<SparseVec>& columns() const { return cols_; }
  void set_column(std::size_t j, SparseVec v);

  std::vector<std::tuple<std::size_t, std::size_t, Integer>> triplets() const;
  std::vector<Integer> to_dense() const;  // row-major

  IntMatrix transpose() const;
  bool is_zero() const;
  IntMatrix submatrix_cols(const std::vector<std::size_t>& cols) const;
  IntMatrix submatrix_rows(const std::vector<std::size_t>& rows) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend SparseVec operator*(const IntMatrix& a, const SparseVec& v);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVec> cols_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// Determinant by fraction-free elimination; square matrices only.
Integer determinant(const IntMatrix& m);

/// g = gcd(a, b) = x*a + y*b with g >= 0.
void gcdext(Integer& g, Integer& x, Integer& y, const Integer& a, const Integer& b);

}  // namespace ghl
