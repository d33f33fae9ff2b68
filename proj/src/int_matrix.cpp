#include "ghl/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace ghl {

std::string to_string(const Integer& v) { return v.get_str(); }

void gcdext(Integer& g, Integer& x, Integer& y, const Integer& a, const Integer& b) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

SparseVec::SparseVec(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [i, v] : entries) {
    if (!e_.empty() && e_.back().first == i) {
      e_.back().second += v;
    } else {
      e_.emplace_back(i, std::move(v));
    }
    if (e_.back().second == 0) e_.pop_back();
  }
}

SparseVec SparseVec::unit(std::size_t i, const Integer& v) {
  SparseVec r;
  if (v != 0) r.e_.emplace_back(i, v);
  return r;
}

SparseVec SparseVec::from_dense(const std::vector<Integer>& v) {
  SparseVec r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r.e_.emplace_back(i, v[i]);
  return r;
}

Integer SparseVec::at(std::size_t i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return 0;
}

void SparseVec::axpy(const Integer& a, const SparseVec& x) {
  if (a == 0 || x.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  auto p = e_.begin();
  auto q = x.e_.begin();
  while (p != e_.end() || q != x.e_.end()) {
    if (q == x.e_.end() || (p != e_.end() && p->first < q->first)) {
      out.push_back(std::move(*p));
      ++p;
    } else if (p == e_.end() || q->first < p->first) {
      out.emplace_back(q->first, a * q->second);
      ++q;
    } else {
      Integer s = p->second + a * q->second;
      if (s != 0) out.emplace_back(p->first, std::move(s));
      ++p;
      ++q;
    }
  }
  e_ = std::move(out);
}

SparseVec SparseVec::scaled(const Integer& a) const {
  SparseVec r;
  if (a == 0) return r;
  r.e_.reserve(e_.size());
  for (auto& [i, v] : e_) r.e_.emplace_back(i, a * v);
  return r;
}

void SparseVec::negate() {
  for (auto& en : e_) en.second = -en.second;
}

void SparseVec::reduce_mod(const Integer& m) {
  Integer half = m / 2;
  std::vector<Entry> out;
  out.reserve(e_.size());
  for (auto& [i, v] : e_) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (r > half) r -= m;
    if (r != 0) out.emplace_back(i, std::move(r));
  }
  e_ = std::move(out);
}

std::vector<Integer> SparseVec::to_dense(std::size_t n) const {
  std::vector<Integer> r(n);
  for (auto& [i, v] : e_) r.at(i) = v;
  return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i] = SparseVec::unit(i);
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.cols_[j].axpy(1, SparseVec::unit(i, Integer(rows[i][j])));
  }
  return m;
}

IntMatrix IntMatrix::from_dense(std::size_t rows, std::size_t cols, const std::vector<Integer>& rm) {
  if (rm.size() != rows * cols) throw Error("dense matrix size mismatch");
  IntMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<SparseVec::Entry> e;
    for (std::size_t i = 0; i < rows; ++i)
      if (rm[i * cols + j] != 0) e.emplace_back(i, rm[i * cols + j]);
    m.cols_[j] = SparseVec(std::move(e));
  }
  return m;
}

IntMatrix IntMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                   const std::vector<std::tuple<std::size_t, std::size_t, Integer>>& t) {
  std::vector<std::vector<SparseVec::Entry>> buf(cols);
  for (auto& [i, j, v] : t) {
    if (i >= rows || j >= cols) throw Error("triplet index out of range");
    buf[j].emplace_back(i, v);
  }
  IntMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) m.cols_[j] = SparseVec(std::move(buf[j]));
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::vector<SparseVec> cols) {
  IntMatrix m;
  m.rows_ = rows;
  for (auto& c : cols)
    if (!c.empty() && c.last_index() >= rows) throw Error("column entry out of range");
  m.cols_ = std::move(cols);
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.cols_[i] = SparseVec::unit(i, d[i]);
  return m;
}

std::size_t IntMatrix::nnz() const {
  std::size_t n = 0;
  for (auto& c : cols_) n += c.nnz();
  return n;
}

Integer IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols()) throw Error("matrix index out of range");
  return cols_[j].at(i);
}

void IntMatrix::set(std::size_t i, std::size_t j, const Integer& v) {
  Integer cur = at(i, j);
  if (cur != v) cols_[j].axpy(1, SparseVec::unit(i, v - cur));
}

void IntMatrix::add_to(std::size_t i, std::size_t j, const Integer& v) {
  if (i >= rows_ || j >= cols()) throw Error("matrix index out of range");
  cols_[j].axpy(1, SparseVec::unit(i, v));
}

void IntMatrix::set_column(std::size_t j, SparseVec v) {
  if (!v.empty() && v.last_index() >= rows_) throw Error("column entry out of range");
  cols_.at(j) = std::move(v);
}

std::vector<std::tuple<std::size_t, std::size_t, Integer>> IntMatrix::triplets() const {
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
  for (std::size_t j = 0; j < cols(); ++j)
    for (auto& [i, v] : cols_[j].entries()) t.emplace_back(i, j, v);
  std::sort(t.begin(), t.end(), [](auto& a, auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  return t;
}

std::vector<Integer> IntMatrix::to_dense() const {
  std::vector<Integer> d(rows_ * cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (auto& [i, v] : cols_[j].entries()) d[i * cols() + j] = v;
  return d;
}

IntMatrix IntMatrix::transpose() const {
  std::vector<std::vector<SparseVec::Entry>> buf(rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (auto& [i, v] : cols_[j].entries()) buf[i].emplace_back(j, v);
  IntMatrix t(cols(), rows_);
  for (std::size_t i = 0; i < rows_; ++i) t.cols_[i] = SparseVec(std::move(buf[i]));
  return t;
}

bool IntMatrix::is_zero() const {
  for (auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

IntMatrix IntMatrix::submatrix_cols(const std::vector<std::size_t>& cs) const {
  IntMatrix m(rows_, 0);
  for (auto j : cs) m.cols_.push_back(cols_.at(j));
  return m;
}

IntMatrix IntMatrix::submatrix_rows(const std::vector<std::size_t>& rs) const {
  std::vector<long> pos(rows_, -1);
  for (std::size_t k = 0; k < rs.size(); ++k) pos.at(rs[k]) = static_cast<long>(k);
  IntMatrix m(rs.size(), cols());
  for (std::size_t j = 0; j < cols(); ++j) {
    std::vector<SparseVec::Entry> e;
    for (auto& [i, v] : cols_[j].entries())
      if (pos[i] >= 0) e.emplace_back(static_cast<std::size_t>(pos[i]), v);
    m.cols_[j] = SparseVec(std::move(e));
  }
  return m;
}

SparseVec operator*(const IntMatrix& a, const SparseVec& v) {
  std::vector<SparseVec::Entry> acc;
  for (auto& [j, x] : v.entries()) {
    if (j >= a.cols()) throw Error("matrix-vector size mismatch");
    for (auto& [i, y] : a.cols_[j].entries()) acc.emplace_back(i, x * y);
  }
  return SparseVec(std::move(acc));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product size mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) m.cols_[j] = a * b.cols_[j];
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum size mismatch");
  IntMatrix m = a;
  for (std::size_t j = 0; j < b.cols(); ++j) m.cols_[j].axpy(1, b.cols_[j]);
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix difference size mismatch");
  IntMatrix m = a;
  for (std::size_t j = 0; j < b.cols(); ++j) m.cols_[j].axpy(-1, b.cols_[j]);
  return m;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) m.cols_[j] = a.cols_[j].scaled(s);
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  auto d = to_dense();
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols(); ++j) os << (j ? ", " : "") << d[i * cols() + j].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error("hstack row mismatch");
  std::vector<SparseVec> cols = a.columns();
  cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  return IntMatrix::from_columns(a.rows(), std::move(cols));
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw Error("vstack column mismatch");
  std::vector<SparseVec> cols(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::vector<SparseVec::Entry> e = a.column(j).entries();
    for (auto& [i, v] : b.column(j).entries()) e.emplace_back(i + a.rows(), v);
    cols[j] = SparseVec(std::move(e));
  }
  return IntMatrix::from_columns(a.rows() + b.rows(), std::move(cols));
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t r = 0;
  std::vector<SparseVec> cols;
  for (auto& b : blocks) {
    for (auto& c : b.columns()) {
      std::vector<SparseVec::Entry> e;
      for (auto& [i, v] : c.entries()) e.emplace_back(i + r, v);
      cols.emplace_back(std::move(e));
    }
    r += b.rows();
  }
  return IntMatrix::from_columns(r, std::move(cols));
}

Integer determinant(const IntMatrix& m) {
  std::size_t n = m.rows();
  if (m.cols() != n) throw Error("determinant of non-square matrix");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  auto a = m.to_dense();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

}  // namespace ghl
