#include "ghl/smith.hpp"

#include <algorithm>

namespace ghl {

namespace {

struct Dense {
  std::size_t r = 0, c = 0;
  std::vector<Integer> a;
  Dense(std::size_t rr, std::size_t cc) : r(rr), c(cc), a(rr * cc) {}
  Integer& operator()(std::size_t i, std::size_t j) { return a[i * c + j]; }
  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < c; ++j) std::swap(a[i * c + j], a[k * c + j]);
  }
  void swap_cols(std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < r; ++i) std::swap(a[i * c + j], a[i * c + k]);
  }
  // row_i += f * row_k
  void add_row(std::size_t i, std::size_t k, const Integer& f) {
    for (std::size_t j = 0; j < c; ++j)
      if (a[k * c + j] != 0) a[i * c + j] += f * a[k * c + j];
  }
  void add_col(std::size_t j, std::size_t k, const Integer& f) {
    for (std::size_t i = 0; i < r; ++i)
      if (a[i * c + k] != 0) a[i * c + j] += f * a[i * c + k];
  }
  void neg_row(std::size_t i) {
    for (std::size_t j = 0; j < c; ++j) a[i * c + j] = -a[i * c + j];
  }
  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = 1;
    return d;
  }
  IntMatrix to_matrix() const { return IntMatrix::from_dense(r, c, a); }
};

struct Worker {
  Dense m;
  bool tr;
  Dense p, pinv, q;

  Worker(const IntMatrix& in, bool t)
      : m(in.rows(), in.cols()), tr(t),
        p(t ? Dense::identity(in.rows()) : Dense(0, 0)),
        pinv(t ? Dense::identity(in.rows()) : Dense(0, 0)),
        q(t ? Dense::identity(in.cols()) : Dense(0, 0)) {
    m.a = in.to_dense();
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    m.swap_rows(i, k);
    if (tr) {
      p.swap_rows(i, k);
      pinv.swap_cols(i, k);
    }
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    m.swap_cols(j, k);
    if (tr) q.swap_cols(j, k);
  }
  void add_row(std::size_t i, std::size_t k, const Integer& f) {
    m.add_row(i, k, f);
    if (tr) {
      p.add_row(i, k, f);
      pinv.add_col(k, i, -f);
    }
  }
  void add_col(std::size_t j, std::size_t k, const Integer& f) {
    m.add_col(j, k, f);
    if (tr) q.add_col(j, k, f);
  }
  void neg_row(std::size_t i) {
    m.neg_row(i);
    if (tr) {
      p.neg_row(i);
      for (std::size_t x = 0; x < pinv.r; ++x) pinv(x, i) = -pinv(x, i);
    }
  }

  // moves the smallest nonzero entry of the trailing block to (t, t)
  bool place_min(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < m.r; ++i)
      for (std::size_t j = t; j < m.c; ++j) {
        const Integer& v = m(i, j);
        if (v == 0) continue;
        if (!found || abs(v) < best) {
          best = abs(v);
          bi = i;
          bj = j;
          found = true;
          if (best == 1) goto done;
        }
      }
  done:
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void run() {
    std::size_t n = std::min(m.r, m.c);
    for (std::size_t t = 0; t < n; ++t) {
      if (!place_min(t)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m.r; ++i) {
          if (m(i, t) == 0) continue;
          Integer f;
          mpz_fdiv_q(f.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
          add_row(i, t, -f);
          if (m(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < m.c; ++j) {
          if (m(t, j) == 0) continue;
          Integer f;
          mpz_fdiv_q(f.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
          add_col(j, t, -f);
          if (m(t, j) != 0) dirty = true;
        }
        if (dirty) {
          place_min(t);
          continue;
        }
        // pivot must divide the whole trailing block
        bool fixed = true;
        for (std::size_t i = t + 1; i < m.r && fixed; ++i)
          for (std::size_t j = t + 1; j < m.c; ++j)
            if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
              add_row(t, i, 1);
              fixed = false;
              break;
            }
        if (fixed) break;
      }
      if (m(t, t) < 0) neg_row(t);
    }
  }
};

}  // namespace

SmithForm snf(const IntMatrix& in, bool with_transforms) {
  Worker w(in, with_transforms);
  w.run();
  SmithForm out;
  std::size_t n = std::min(in.rows(), in.cols());
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(w.m(i, i));
  out.s = w.m.to_matrix();
  if (with_transforms) {
    out.p = w.p.to_matrix();
    out.q = w.q.to_matrix();
    out.p_inv = w.pinv.to_matrix();
  }
  return out;
}

std::vector<Integer> canonical_factors(const std::vector<Integer>& orders) {
  std::vector<Integer> a;
  for (auto& o : orders) a.push_back(abs(o));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Integer g = gcd(a[i], a[j]);
      Integer l = (g == 0) ? Integer(0) : Integer(a[i] / g * a[j]);
      a[i] = g;
      a[j] = l;
    }
  std::vector<Integer> out;
  for (auto& v : a)
    if (v != 1) out.push_back(v);
  // nonzero entries already form a chain; zeros are moved last
  std::stable_partition(out.begin(), out.end(), [](const Integer& v) { return v != 0; });
  return out;
}

std::vector<Integer> cokernel_invariants(const IntMatrix& rel) {
  SmithForm f = snf(rel, false);
  std::vector<Integer> d = f.diagonal;
  while (d.size() < rel.rows()) d.push_back(0);
  d.resize(rel.rows());
  return canonical_factors(d);
}

}  // namespace ghl
