#include "ghl/homology.hpp"

#include <algorithm>

namespace ghl {

Homology homology(const ComplexOfFp& c, int n) {
  if (n < 0) throw Error("negative degree");
  int in_deg = n - c.step();
  if (!c.known(n) || !c.known(in_deg) || !c.has_out(n) || !c.has_out(in_deg))
    throw Error("degree " + std::to_string(n) + " needs neighbouring degrees that were not built");
  const FpAbGroup& cn = c.group(n);
  IntMatrix a = c.out(n);
  Lattice cycles = a.rows() == 0 ? Lattice::full(cn.gens()) : preimage_lattice(a, c.group(n + c.step()).relations());
  Lattice bounds = Lattice::column_span(c.out(in_deg)) + cn.relations();
  Homology h;
  h.degree = n;
  h.sq = subquotient(cn.gens(), cycles, bounds);
  h.group = h.sq.group;
  h.section = h.sq.section;
  return h;
}

namespace {

// Relations of the form d_i e_i; generators with d_i = 1 are dead.
struct DiagInfo {
  bool diag = true;
  bool all_covered = true;  // every live generator carries a relation
  std::vector<Integer> vals;
  std::vector<char> dead;
};

DiagInfo diag_info(const FpAbGroup& g) {
  DiagInfo d;
  d.dead.assign(g.gens(), 0);
  std::vector<char> seen(g.gens(), 0);
  for (auto& b : g.relations().basis()) {
    if (b.nnz() != 1) {
      d.diag = false;
      return d;
    }
    seen[b.last_index()] = 1;
    if (b.last_value() == 1)
      d.dead[b.last_index()] = 1;
    else if (std::find(d.vals.begin(), d.vals.end(), b.last_value()) == d.vals.end())
      d.vals.push_back(b.last_value());
  }
  for (std::size_t i = 0; i < g.gens(); ++i)
    if (!seen[i]) d.all_covered = false;
  return d;
}

bool is_unit(const Integer& v, const Integer& m) {
  if (m == 0) return v == 1 || v == -1;
  Integer g;
  mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return g == 1;
}

Integer unit_inverse(const Integer& v, const Integer& m) {
  if (m == 0) return v;  // +-1
  Integer r;
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Columns of a matrix with a row -> columns index kept up to date lazily.
struct Cols {
  std::vector<SparseVec> col;
  std::vector<std::vector<std::size_t>> rows;  // may hold stale entries
  std::vector<char> col_alive;

  Cols(const IntMatrix& mat, const std::vector<std::size_t>& keep_rows, const std::vector<std::size_t>& keep_cols,
       const Integer& m) {
    std::vector<long> pos(mat.rows(), -1);
    for (std::size_t i = 0; i < keep_rows.size(); ++i) pos[keep_rows[i]] = static_cast<long>(i);
    rows.resize(keep_rows.size());
    for (std::size_t j : keep_cols) {
      std::vector<SparseVec::Entry> e;
      for (auto& [i, v] : mat.column(j).entries())
        if (pos[i] >= 0) e.emplace_back(static_cast<std::size_t>(pos[i]), v);
      SparseVec s(std::move(e));
      if (m > 0) s.reduce_mod(m);
      for (auto& [i, v] : s.entries()) rows[i].push_back(col.size());
      col.push_back(std::move(s));
    }
    col_alive.assign(col.size(), 1);
  }

  // Eliminates row r from every other live column using pivot column p.
  void eliminate(std::size_t p, std::size_t r, const Integer& inv, const Integer& m) {
    std::vector<std::size_t> touched = rows[r];
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    const SparseVec& pc = col[p];
    for (std::size_t k : touched) {
      if (k == p || !col_alive[k]) continue;
      Integer x = col[k].at(r);
      if (x == 0) continue;
      Integer f = -x * inv;
      if (m > 0) f %= m;
      col[k].axpy(f, pc);
      if (m > 0) col[k].reduce_mod(m);
      for (auto& [i, v] : pc.entries()) rows[i].push_back(k);
    }
    rows[r].clear();
  }
};

}  // namespace

std::vector<Integer> homology_factors(const ComplexOfFp& c, int n) {
  if (n < 0) throw Error("negative degree");
  int in_deg = n - c.step(), t = n + c.step();
  if (!c.known(n) || !c.known(in_deg) || !c.has_out(n) || !c.has_out(in_deg))
    throw Error("degree " + std::to_string(n) + " needs neighbouring degrees that were not built");
  DiagInfo it = diag_info(c.group(t)), in = diag_info(c.group(n)), is = diag_info(c.group(in_deg));
  bool fast = it.diag && in.diag && is.diag;
  Integer m = 0;
  if (fast) {
    std::vector<Integer> vals = it.vals;
    for (auto* d : {&in, &is})
      for (auto& v : d->vals)
        if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
    if (vals.size() > 1) fast = false;
    if (vals.size() == 1) {
      m = vals[0];
      for (auto* d : {&it, &in, &is})
        if (!d->all_covered) fast = false;
    }
  }
  if (!fast) return homology(c, n).group.invariant_factors();
  std::vector<char>& dead_t = it.dead;
  std::vector<char>& dead_n = in.dead;
  std::vector<char>& dead_s = is.dead;

  auto live = [](const std::vector<char>& dead) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < dead.size(); ++i)
      if (!dead[i]) v.push_back(i);
    return v;
  };
  std::vector<std::size_t> lt = live(dead_t), ln = live(dead_n), ls = live(dead_s);
  Cols a(c.out(n), lt, ln, m);       // C_n -> C_t
  Cols b(c.out(in_deg), ln, ls, m);  // C_s -> C_n
  std::size_t dn = ln.size(), dt = lt.size();
  std::vector<char> n_alive(dn, 1), t_alive(dt, 1);

  // pairs C_s -> C_n
  for (std::size_t j = 0; j < b.col.size(); ++j) {
    std::size_t best = SIZE_MAX, best_len = SIZE_MAX;
    Integer bv;
    for (auto& [i, v] : b.col[j].entries())
      if (n_alive[i] && is_unit(v, m) && b.rows[i].size() < best_len) {
        best = i;
        best_len = b.rows[i].size();
        bv = v;
      }
    if (best == SIZE_MAX) continue;
    b.eliminate(j, best, unit_inverse(bv, m), m);
    b.col_alive[j] = 0;
    n_alive[best] = 0;
    a.col_alive[best] = 0;
  }
  // pairs C_n -> C_t
  for (std::size_t i = 0; i < a.col.size(); ++i) {
    if (!a.col_alive[i]) continue;
    std::size_t best = SIZE_MAX, best_len = SIZE_MAX;
    Integer av;
    for (auto& [k, v] : a.col[i].entries())
      if (t_alive[k] && is_unit(v, m) && a.rows[k].size() < best_len) {
        best = k;
        best_len = a.rows[k].size();
        av = v;
      }
    if (best == SIZE_MAX) continue;
    a.eliminate(i, best, unit_inverse(av, m), m);
    a.col_alive[i] = 0;
    n_alive[i] = 0;
    t_alive[best] = 0;
  }

  std::vector<long> npos(dn, -1), tpos(dt, -1);
  std::size_t rn = 0, rt = 0;
  for (std::size_t i = 0; i < dn; ++i)
    if (n_alive[i]) npos[i] = static_cast<long>(rn++);
  for (std::size_t k = 0; k < dt; ++k)
    if (t_alive[k]) tpos[k] = static_cast<long>(rt++);
  auto restrict_col = [](const SparseVec& v, const std::vector<long>& pos) {
    std::vector<SparseVec::Entry> e;
    for (auto& [i, x] : v.entries())
      if (pos[i] >= 0) e.emplace_back(static_cast<std::size_t>(pos[i]), x);
    return SparseVec(std::move(e));
  };
  std::vector<SparseVec> acols, bcols;
  for (std::size_t i = 0; i < dn; ++i)
    if (n_alive[i]) acols.push_back(restrict_col(a.col[i], tpos));
  for (std::size_t j = 0; j < b.col.size(); ++j)
    if (b.col_alive[j]) bcols.push_back(restrict_col(b.col[j], npos));
  IntMatrix ar = IntMatrix::from_columns(rt, std::move(acols));
  Lattice rel_t = m == 0 ? Lattice(rt) : FpAbGroup::uniform(rt, m).relations();
  Lattice rel_n = m == 0 ? Lattice(rn) : FpAbGroup::uniform(rn, m).relations();
  Lattice cycles = rt == 0 ? Lattice::full(rn) : preimage_lattice(ar, rel_t);
  Lattice bounds = Lattice::span(rn, bcols) + rel_n;
  return subquotient(rn, cycles, bounds).group.invariant_factors();
}

FpHom induced_on_homology(const Homology& src, const Homology& dst, const IntMatrix& f) {
  std::vector<SparseVec> cols;
  for (auto& s : src.section.columns()) {
    SparseVec v = f * s;
    if (!dst.sq.numerator.contains(v)) throw StructureError("chain map sends a cycle to a non-cycle");
    cols.push_back(dst.classify(v));
  }
  return FpHom(src.group, dst.group, IntMatrix::from_columns(dst.group.gens(), std::move(cols)));
}

FpHom connecting_hom(const ComplexOfFp& whole, const std::vector<IntMatrix>& incl, const Homology& hq,
                     const Homology& hs_next) {
  int n = hq.degree, t = n + whole.step();
  if (hs_next.degree != t) throw Error("connecting map degrees do not match");
  IntMatrix d = whole.out(n);
  std::vector<SparseVec> cols;
  for (auto& x : hq.section.columns()) {
    SparseVec y = d * x;
    if (t < 0 || t >= static_cast<int>(incl.size())) {
      cols.emplace_back();
      continue;
    }
    auto z = solve_mod(incl[t], y, whole.group(t).relations());
    if (!z) throw StructureError("boundary of a lifted cycle is not in the subcomplex");
    cols.push_back(hs_next.classify(*z));
  }
  return FpHom(hq.group, hs_next.group, IntMatrix::from_columns(hs_next.group.gens(), std::move(cols)));
}

bool exact_at(const FpHom& f, const FpHom& g) { return f.image() == g.kernel(); }

LongExactSequence long_exact_sequence(const ComplexOfFp& sub, const ComplexOfFp& whole, const ComplexOfFp& quot,
                                      const std::vector<IntMatrix>& incl, int lo, int hi) {
  if (lo < 0 || hi < lo) throw Error("bad degree window");
  LongExactSequence les;
  les.lo = lo;
  les.hi = hi;
  int st = whole.step();
  les.step = st;
  // degrees lo..hi plus the one the connecting map reaches
  int a = std::min(lo, lo + st), b = std::max(hi, hi + st);
  a = std::max(a, 0);
  std::vector<Homology> hs, hw, hq;
  for (int n = a; n <= b; ++n) {
    hs.push_back(homology(sub, n));
    hw.push_back(homology(whole, n));
    hq.push_back(homology(quot, n));
  }
  auto idx = [&](int n) { return static_cast<std::size_t>(n - a); };
  for (int n = lo; n <= hi; ++n) {
    les.h_sub.push_back(hs[idx(n)]);
    les.h_whole.push_back(hw[idx(n)]);
    les.h_quot.push_back(hq[idx(n)]);
    les.i_star.push_back(induced_on_homology(hs[idx(n)], hw[idx(n)], incl.at(n)));
    les.p_star.push_back(induced_on_homology(hw[idx(n)], hq[idx(n)], IntMatrix::identity(whole.group(n).gens())));
    int t = n + st;
    if (t < 0) {
      les.connecting.emplace_back(hq[idx(n)].group, FpAbGroup::trivial(), IntMatrix(0, hq[idx(n)].group.gens()));
    } else {
      les.connecting.push_back(connecting_hom(whole, incl, hq[idx(n)], hs[idx(t)]));
    }
  }
  return les;
}

bool LongExactSequence::exact(std::string* where) const {
  auto fail = [&](const std::string& w) {
    if (where) *where = w;
    return false;
  };
  int count = hi - lo + 1;
  for (int k = 0; k < count; ++k) {
    int n = lo + k;
    if (!exact_at(i_star[k], p_star[k])) return fail("H(whole) in degree " + std::to_string(n));
    if (!exact_at(p_star[k], connecting[k])) return fail("H(quot) in degree " + std::to_string(n));
  }
  // H(sub) at the degree each connecting map lands in
  for (int k = 0; k < count; ++k) {
    int t = lo + k + step;
    if (t < lo || t > hi) continue;
    if (!exact_at(connecting[k], i_star[t - lo])) return fail("H(sub) in degree " + std::to_string(t));
  }
  return true;
}

}  // namespace ghl
