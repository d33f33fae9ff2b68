#include "ghl/cochains.hpp"

namespace ghl {

namespace {

using Triplets = std::vector<std::tuple<std::size_t, std::size_t, Integer>>;

void put_block(Triplets& t, std::size_t row_blk, std::size_t col_blk, std::size_t r, const IntMatrix& m,
               const Integer& c) {
  for (auto& [i, j, v] : m.triplets()) t.emplace_back(row_blk * r + i, col_blk * r + j, c * v);
}

// Stacks ops on top of each other; the target lattice repeats each op's relation lattice.
Lattice stacked_preimage(std::size_t cols, const std::vector<std::pair<IntMatrix, Lattice>>& ops) {
  IntMatrix stacked(0, cols);
  std::vector<SparseVec> tgt;
  std::size_t off = 0;
  for (auto& [m, rel] : ops) {
    stacked = vstack(stacked, m);
    for (auto& b : rel.basis()) {
      std::vector<SparseVec::Entry> e;
      for (auto& [i, v] : b.entries()) e.emplace_back(i + off, v);
      tgt.emplace_back(std::move(e));
    }
    off += m.rows();
  }
  if (ops.empty()) return Lattice::full(cols);
  return preimage_lattice(stacked, Lattice::span(off, tgt));
}

}  // namespace

FunctionCochains::FunctionCochains(const GModule& a, int top, std::size_t budget)
    : a_(a.as_side(Side::Left)), top_(top), budget_(budget) {
  if (top < 0) throw Error("negative top degree");
  for (int n = 0; n <= top; ++n)
    if (tuples(n) * std::max<std::size_t>(a_.rank(), 1) > budget_)
      throw BudgetError("function cochains in degree " + std::to_string(n) + " exceed the budget");
}

std::size_t FunctionCochains::tuples(int n) const {
  std::size_t c = 1;
  for (int i = 0; i < n; ++i) c *= static_cast<std::size_t>(a_.group().order());
  return c;
}

std::size_t FunctionCochains::index(const std::vector<int>& g) const {
  std::size_t k = 0;
  for (std::size_t i = g.size(); i-- > 0;) k = k * static_cast<std::size_t>(a_.group().order()) + static_cast<std::size_t>(g[i]);
  return k;
}

std::vector<int> FunctionCochains::tuple(int n, std::size_t idx) const {
  std::vector<int> g(static_cast<std::size_t>(n));
  std::size_t ord = static_cast<std::size_t>(a_.group().order());
  for (int i = 0; i < n; ++i, idx /= ord) g[i] = static_cast<int>(idx % ord);
  return g;
}

FpAbGroup FunctionCochains::group(int n) const {
  std::size_t r = a_.rank(), cnt = tuples(n);
  std::vector<SparseVec> rel;
  for (std::size_t b = 0; b < cnt; ++b)
    for (auto& v : a_.relations().basis()) {
      std::vector<SparseVec::Entry> e;
      for (auto& [i, x] : v.entries()) e.emplace_back(b * r + i, x);
      rel.emplace_back(std::move(e));
    }
  return FpAbGroup(cnt * r, Lattice::span(cnt * r, rel));
}

IntMatrix FunctionCochains::face(int n, int j) const {
  if (n < 0 || j < 0 || j > n + 1) throw Error("face index out of range");
  const FiniteGroup& G = a_.group();
  std::size_t r = a_.rank();
  IntMatrix id = IntMatrix::identity(r);
  Triplets t;
  for (std::size_t row = 0; row < tuples(n + 1); ++row) {
    std::vector<int> g = tuple(n + 1, row), s;
    if (j == 0) {
      s.assign(g.begin() + 1, g.end());
      put_block(t, row, index(s), r, a_.act(g[0]), 1);
      continue;
    }
    if (j == n + 1) {
      s.assign(g.begin(), g.end() - 1);
    } else {
      s.assign(g.begin(), g.begin() + (j - 1));
      s.push_back(G.mul(g[j - 1], g[j]));
      s.insert(s.end(), g.begin() + (j + 1), g.end());
    }
    put_block(t, row, index(s), r, id, 1);
  }
  return IntMatrix::from_triplets(tuples(n + 1) * r, tuples(n) * r, t);
}

IntMatrix FunctionCochains::delta(int n) const {
  // g_1 s(g_2..) + sum_k (-1)^k s(..g_k g_{k+1}..) + (-1)^{n+1} s(g_1..g_n)
  const FiniteGroup& G = a_.group();
  std::size_t r = a_.rank();
  IntMatrix id = IntMatrix::identity(r);
  Triplets t;
  for (std::size_t row = 0; row < tuples(n + 1); ++row) {
    std::vector<int> g = tuple(n + 1, row);
    put_block(t, row, index(std::vector<int>(g.begin() + 1, g.end())), r, a_.act(g[0]), 1);
    for (int k = 1; k <= n; ++k) {
      std::vector<int> s(g.begin(), g.begin() + (k - 1));
      s.push_back(G.mul(g[k - 1], g[k]));
      s.insert(s.end(), g.begin() + (k + 1), g.end());
      put_block(t, row, index(s), r, id, k % 2 ? -1 : 1);
    }
    put_block(t, row, index(std::vector<int>(g.begin(), g.end() - 1)), r, id, (n + 1) % 2 ? -1 : 1);
  }
  return IntMatrix::from_triplets(tuples(n + 1) * r, tuples(n) * r, t);
}

IntMatrix FunctionCochains::tau(int n, int i) const {
  if (i < 1 || i > n) throw Error("tau index out of range");
  const FiniteGroup& G = a_.group();
  std::size_t r = a_.rank();
  IntMatrix id = IntMatrix::identity(r);
  Triplets t;
  for (std::size_t row = 0; row < tuples(n); ++row) {
    std::vector<int> g = tuple(n, row), s = g;
    int k = i - 1;  // zero-based position
    if (n == 1) {
      s[0] = G.inv(g[0]);
      put_block(t, row, index(s), r, a_.act(g[0]), -1);
      continue;
    }
    if (i == 1) {
      s[0] = G.inv(g[0]);
      s[1] = G.mul(g[0], g[1]);
      put_block(t, row, index(s), r, a_.act(g[0]), -1);
      continue;
    }
    s[k - 1] = G.mul(g[k - 1], g[k]);
    s[k] = G.inv(g[k]);
    if (i < n) s[k + 1] = G.mul(g[k], g[k + 1]);
    put_block(t, row, index(s), r, id, -1);
  }
  return IntMatrix::from_triplets(tuples(n) * r, tuples(n) * r, t);
}

ComplexOfFp FunctionCochains::complex() const {
  std::vector<FpAbGroup> groups;
  std::vector<std::optional<IntMatrix>> out;
  for (int n = 0; n <= top_; ++n) {
    groups.push_back(group(n));
    if (n < top_)
      out.emplace_back(delta(n));
    else
      out.emplace_back();
  }
  return ComplexOfFp(Variance::Cochain, std::move(groups), std::move(out), false);
}

std::vector<Lattice> FunctionCochains::symmetric_lattices() const {
  std::vector<Lattice> out;
  for (int n = 0; n <= top_; ++n) {
    FpAbGroup g = group(n);
    std::vector<IntMatrix> ops;
    for (int i = 1; i <= n; ++i) ops.push_back(tau(n, i) - IntMatrix::identity(g.gens()));
    out.push_back(common_kernel_mod(ops, g.relations()) + g.relations());
  }
  return out;
}

Lattice common_kernel_mod(const std::vector<IntMatrix>& ops, const Lattice& rel) {
  std::vector<std::pair<IntMatrix, Lattice>> v;
  for (auto& m : ops) v.emplace_back(m, rel);
  return stacked_preimage(rel.ambient(), v);
}

IntMatrix psi_matrix(const HomComplex& k, const FunctionCochains& c, int n) {
  const FiniteGroup& G = c.module().group();
  std::size_t r = c.module().rank();
  const HomBlocks& hb = k.blocks.at(n);
  Triplets t;
  for (std::size_t row = 0; row < c.tuples(n); ++row) {
    std::vector<int> g = c.tuple(n, row);
    Tag tag{0};
    for (int x : g) tag.push_back(G.mul(tag.back(), x));
    Placement p = k.model->place(n, tag);
    IntMatrix blk = k.a.act(p.g) * hb.basis[p.orbit];
    for (auto& [i, j, v] : blk.triplets()) t.emplace_back(row * r + i, hb.offset[p.orbit] + j, p.sign * v);
  }
  return IntMatrix::from_triplets(c.tuples(n) * r, hb.offset.back(), t);
}

IntMatrix swap_operator(const HomComplex& k, int n, int i) {
  if (i < 0 || i >= n) throw Error("swap position out of range");
  return pullback_matrix(k, k, n, [i](const Tag& y) {
    Tag s = y;
    std::swap(s[i], s[i + 1]);
    return FormalSum{{s, Integer(1)}};
  });
}

std::vector<Lattice> skew_lattices(const HomComplex& k, bool vanish_on_repeats) {
  std::vector<Lattice> out;
  const GModule& a = k.a;
  for (int n = 0; n <= k.cx.top(); ++n) {
    const FpAbGroup& g = k.cx.group(n);
    std::size_t gens = g.gens();
    std::vector<std::pair<IntMatrix, Lattice>> ops;
    for (int i = 0; i < n; ++i) ops.emplace_back(swap_operator(k, n, i) + IntMatrix::identity(gens), g.relations());
    if (vanish_on_repeats) {
      const HomBlocks& hb = k.blocks[n];
      for (std::size_t o = 0; o + 1 < hb.offset.size(); ++o) {
        const Tag& y = k.model->rep(n, o);
        bool rep = false;
        for (std::size_t j = 0; j + 1 < y.size(); ++j) rep = rep || y[j] == y[j + 1];
        if (!rep) continue;
        // evaluation at y as a map to A
        Triplets t;
        for (auto& [i, j, v] : hb.basis[o].triplets()) t.emplace_back(i, hb.offset[o] + j, v);
        ops.emplace_back(IntMatrix::from_triplets(a.rank(), gens, t), a.relations());
      }
    }
    out.push_back(stacked_preimage(gens, ops) + g.relations());
  }
  return out;
}

}  // namespace ghl
