#include "ghl/transfer.hpp"

#include <cstdint>

namespace ghl {

TransferContext make_transfer_context(const FiniteGroup& g, const std::vector<int>& h_elements, const GModule& a_in,
                                      std::vector<int> reps) {
  GModule a = a_in.as_side(Side::Left);
  if (!(a.group() == g)) throw Error("module is defined over a different group");
  Subgroup h = make_subgroup(g, h_elements);
  CosetSystem cs = reps.empty() ? CosetSystem(g, h) : CosetSystem(g, h, std::move(reps));
  GModule ah = a.restricted(h);
  return TransferContext{g, std::move(h), std::move(cs), std::move(a), std::move(ah)};
}

namespace {

int local(const TransferContext& c, int x) {
  int l = c.h.to_local[x];
  if (l < 0) throw StructureError("transfer argument " + c.g.label(x) + " is not in the subgroup");
  return l;
}

using Triplets = std::vector<std::tuple<std::size_t, std::size_t, Integer>>;

void add_block(Triplets& t, std::size_t row, std::size_t col, const IntMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (auto& [i, v] : m.column(j).entries()) t.emplace_back(row + i, col + j, v);
}

}  // namespace

IntMatrix res_function(const TransferContext& c, int n) {
  FunctionCochains cg(c.a, n, SIZE_MAX), ch(c.ah, n, SIZE_MAX);
  std::size_t r = c.a.rank();
  IntMatrix id = IntMatrix::identity(r);
  Triplets t;
  for (std::size_t k = 0; k < ch.tuples(n); ++k) {
    std::vector<int> tup = ch.tuple(n, k);
    for (int& x : tup) x = c.h.embed[x];
    add_block(t, k * r, cg.index(tup) * r, id);
  }
  return IntMatrix::from_triplets(ch.tuples(n) * r, cg.tuples(n) * r, t);
}

IntMatrix tr_function(const TransferContext& c, int n) {
  FunctionCochains cg(c.a, n, SIZE_MAX), ch(c.ah, n, SIZE_MAX);
  const FiniteGroup& g = c.g;
  std::size_t r = c.a.rank();
  Triplets t;
  for (std::size_t k = 0; k < cg.tuples(n); ++k) {
    std::vector<int> tup = cg.tuple(n, k);
    // x[t] = g_t ... g_n (0-based), x[n] = 1
    std::vector<int> x(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) x[i] = g.mul(tup[i], x[i + 1]);
    for (int ci : c.cosets.reps()) {
      std::vector<int> u(n + 1);
      for (int i = 0; i <= n; ++i) u[i] = c.cosets.bar(g.mul(x[i], ci));
      std::vector<int> h(n);
      for (int i = 0; i < n; ++i) h[i] = local(c, g.mul(g.inv(u[i]), g.mul(tup[i], u[i + 1])));
      add_block(t, k * r, ch.index(h) * r, c.a.act(u[0]));
    }
  }
  return IntMatrix::from_triplets(cg.tuples(n) * r, ch.tuples(n) * r, t);
}

IntMatrix res_equivariant(const TransferContext& c, const HomComplex& kg, const HomComplex& kh, int n) {
  return pullback_matrix(kg, kh, n, [&](const Tag& y) {
    Tag t = y;
    for (int& v : t) v = c.h.embed[v];
    return FormalSum{{t, Integer(1)}};
  });
}

IntMatrix trace_equivariant(const TransferContext& c, const HomComplex& kh, const HomComplex& kg, int n) {
  const FiniteGroup& g = c.g;
  return twisted_pullback_matrix(kh, kg, n, [&](const Tag& y) {
    TwistedSum out;
    int g0i = g.inv(y[0]);
    int gn = y[n];
    for (int ci : c.cosets.reps()) {
      int u = c.cosets.bar(g.mul(g0i, g.mul(gn, ci)));
      int ui = g.inv(u);
      Tag tag(n + 1, 0);
      for (int s = 1; s <= n; ++s) {
        int tail = c.cosets.bar(g.mul(g.inv(y[s]), g.mul(gn, ci)));
        tag[s] = local(c, g.mul(ui, g.mul(g0i, g.mul(y[s], tail))));
      }
      out.emplace_back(c.a.act(g.mul(y[0], u)), std::move(tag));
    }
    return out;
  });
}

bool has_transfer(Theory t) {
  return t == Theory::ClassicalCohomology || t == Theory::SymCohomology || t == Theory::ExtCohomology;
}

TransferMap parse_transfer_map(const std::string& s) {
  if (s == "res") return TransferMap::Res;
  if (s == "cores") return TransferMap::Cores;
  if (s == "cores-res") return TransferMap::CoresRes;
  throw Error("unknown transfer map: " + s);
}

std::string transfer_map_name(TransferMap m) {
  switch (m) {
    case TransferMap::Res: return "res";
    case TransferMap::Cores: return "cores";
    case TransferMap::CoresRes: return "cores-res";
  }
  return "?";
}

namespace {

// Solves incl * z = v modulo the relations of the ambient group, column by column.
IntMatrix lift_through(const IntMatrix& incl, const IntMatrix& v, const FpAbGroup& ambient, const char* what) {
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < v.cols(); ++j) {
    auto z = solve_mod(incl, v.column(j), ambient.relations());
    if (!z) throw StructureError(std::string(what) + " leaves the subcomplex");
    cols.push_back(std::move(*z));
  }
  return IntMatrix::from_columns(incl.cols(), std::move(cols));
}

void check_commutes(const ComplexOfFp& src, const ComplexOfFp& dst, const IntMatrix& f_lo, const IntMatrix& f_hi,
                    int lo, const char* what) {
  if (!congruent_mod(f_hi * src.out(lo), dst.out(lo) * f_lo, dst.group(lo + 1).relations()))
    throw StructureError(std::string(what) + " does not commute with the coboundary in degree " +
                         std::to_string(lo));
}

}  // namespace

FpHom transfer_on_cohomology(Theory t, const TransferContext& c, TransferMap m, int n, std::size_t budget) {
  if (!has_transfer(t)) throw Error("no transfer maps for " + theory_name(t));
  if (n < 0) throw Error("negative degree");
  CochainTower tg = cochain_tower(c.a, n + 1, budget);
  CochainTower th = cochain_tower(c.ah, n + 1, budget);

  const ComplexOfFp* xg = &tg.k.cx;
  const ComplexOfFp* xh = &th.k.cx;
  if (t == Theory::SymCohomology) xg = &tg.ks.cx, xh = &th.ks.cx;
  if (t == Theory::ExtCohomology) xg = &tg.kl.cx, xh = &th.kl.cx;

  auto res = [&](int k) {
    switch (t) {
      case Theory::SymCohomology: return res_equivariant(c, tg.ks, th.ks, k);
      case Theory::ExtCohomology:
        return lift_through(th.kl.incl[k], res_equivariant(c, tg.ks, th.ks, k) * tg.kl.incl[k],
                            th.ks.cx.group(k), "restriction");
      default: return res_equivariant(c, tg.k, th.k, k);
    }
  };
  auto cores = [&](int k) {
    IntMatrix tr = trace_equivariant(c, th.k, tg.k, k);
    switch (t) {
      case Theory::SymCohomology: return lift_through(tg.ks_in_k[k], tr * th.ks_in_k[k], tg.k.cx.group(k), "trace");
      case Theory::ExtCohomology: return lift_through(tg.kl_in_k[k], tr * th.kl_in_k[k], tg.k.cx.group(k), "trace");
      default: return tr;
    }
  };

  Homology hg = homology(*xg, n), hh = homology(*xh, n);
  std::optional<FpHom> r, co;
  if (m != TransferMap::Cores) {
    IntMatrix f = res(n);
    if (n > 0) check_commutes(*xg, *xh, res(n - 1), f, n - 1, "restriction");
    r = induced_on_homology(hg, hh, f);
  }
  if (m != TransferMap::Res) {
    IntMatrix f = cores(n);
    if (n > 0) check_commutes(*xh, *xg, cores(n - 1), f, n - 1, "corestriction");
    co = induced_on_homology(hh, hg, f);
  }
  if (m == TransferMap::Res) return *r;
  if (m == TransferMap::Cores) return *co;
  return co->compose_after(*r);
}

}  // namespace ghl
