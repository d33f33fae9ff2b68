#pragma once
// Independent reference computations used only by the tests.

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Mat = std::vector<std::vector<Z>>;  // row-major

// Rational solve of cols * x = v (cols given as column list); returns any solution.
inline std::optional<std::vector<Q>> rational_solve(const std::vector<std::vector<Z>>& cols, const std::vector<Z>& v) {
  std::size_t n = v.size(), k = cols.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
    a[i][k] = v[i];
  }
  std::vector<long> where(k, -1);
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      Q f = a[i][c] / a[row][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    where[c] = static_cast<long>(row);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][k] != 0) return std::nullopt;
  std::vector<Q> x(k, 0);
  for (std::size_t c = 0; c < k; ++c)
    if (where[c] >= 0) x[c] = a[where[c]][k] / a[where[c]][c];
  return x;
}

// Membership in the lattice spanned by independent columns.
inline bool in_lattice(const std::vector<std::vector<Z>>& cols, const std::vector<Z>& v) {
  auto x = rational_solve(cols, v);
  if (!x) return false;
  for (auto& q : *x)
    if (q.get_den() != 1) return false;
  return true;
}

// Elements of the finite group N/D found by breadth-first search over the
// generators of N; D must be given by independent columns of full rank in
// span(N).  Returns nothing if more than `cap` elements are found.
inline std::optional<std::vector<std::vector<Z>>> enumerate_quotient(const std::vector<std::vector<Z>>& ngens,
                                                                    const std::vector<std::vector<Z>>& dcols,
                                                                    std::size_t dim, std::size_t cap) {
  std::vector<std::vector<Z>> elems{std::vector<Z>(dim, 0)};
  auto same = [&](const std::vector<Z>& a, const std::vector<Z>& b) {
    std::vector<Z> d(dim);
    for (std::size_t i = 0; i < dim; ++i) d[i] = a[i] - b[i];
    return in_lattice(dcols, d);
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (auto& g : ngens) {
      std::vector<Z> x = elems[head];
      for (std::size_t i = 0; i < dim; ++i) x[i] += g[i];
      bool seen = false;
      for (auto& e : elems)
        if (same(e, x)) {
          seen = true;
          break;
        }
      if (!seen) {
        elems.push_back(x);
        if (elems.size() > cap) return std::nullopt;
      }
    }
  }
  return elems;
}

// #{x in the group : d x = 0} from invariant factors.
inline Z torsion_count(const std::vector<Z>& factors, const Z& d) {
  Z c = 1;
  for (auto& f : factors) c *= (f == 0) ? d : Z(gcd(d, f));
  return c;
}

inline Z det(Mat a) {
  std::size_t n = a.size();
  std::vector<std::vector<Q>> q(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = a[i][j];
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && q[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(q[p], q[c]);
      d = -d;
    }
    d *= q[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Q f = q[i][c] / q[c][c];
      for (std::size_t j = c; j < n; ++j) q[i][j] -= f * q[c][j];
    }
  }
  return d.get_num();
}

}  // namespace oracle
