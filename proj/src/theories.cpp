#include "ghl/theories.hpp"

#include <algorithm>

namespace ghl {

const std::vector<Theory>& all_theories() {
  static const std::vector<Theory> v{Theory::ClassicalHomology, Theory::ClassicalCohomology, Theory::SymHomology,
                                     Theory::SymCohomology,     Theory::ExtHomology,         Theory::ExtCohomology,
                                     Theory::SLambda,           Theory::CLambda,             Theory::CS};
  return v;
}

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::ClassicalHomology: return "classical-homology";
    case Theory::ClassicalCohomology: return "classical-cohomology";
    case Theory::SymHomology: return "sym-homology";
    case Theory::SymCohomology: return "sym-cohomology";
    case Theory::ExtHomology: return "ext-homology";
    case Theory::ExtCohomology: return "ext-cohomology";
    case Theory::SLambda: return "slambda";
    case Theory::CLambda: return "clambda";
    case Theory::CS: return "cs";
  }
  return "?";
}

Theory parse_theory(const std::string& s) {
  for (Theory t : all_theories())
    if (theory_name(t) == s) return t;
  throw Error("unknown theory: " + s);
}

bool is_homology(Theory t) {
  return t == Theory::ClassicalHomology || t == Theory::SymHomology || t == Theory::ExtHomology;
}

int default_window_top(Theory t, const FiniteGroup& g) {
  if (t == Theory::SymHomology || t == Theory::ExtHomology || t == Theory::ExtCohomology) return g.order() - 1;
  return std::min(g.order(), 5);
}

namespace {

std::size_t orbit_budget(const GModule& a, std::size_t budget) {
  return std::max<std::size_t>(1, budget / std::max<std::size_t>(1, a.rank()));
}

}  // namespace

CochainTower cochain_tower(const GModule& a_in, int top, std::size_t budget) {
  GModule a = a_in.as_side(Side::Left);
  const FiniteGroup& g = a.group();
  std::size_t ob = orbit_budget(a, budget);
  auto bar = std::make_shared<BarModel>(g, top, ob);
  auto skew = std::make_shared<SkewModel>(g, top, ob);
  CochainTower t{hom_over_G(bar, a, top), hom_over_G(skew, a, top), {}, {}, {}};

  std::vector<Lattice> lam;
  for (int n = 0; n <= top; ++n) {
    const HomBlocks& hb = t.ks.blocks[n];
    std::vector<SparseVec> gens;
    for (std::size_t o = 0; o + 1 < hb.offset.size(); ++o) {
      if (has_repeat(skew->rep(n, o))) continue;
      for (std::size_t i = hb.offset[o]; i < hb.offset[o + 1]; ++i) gens.push_back(SparseVec::unit(i));
    }
    lam.push_back(Lattice::span(hb.offset.back(), gens) + t.ks.cx.group(n).relations());
  }
  t.kl = restrict_to(t.ks.cx, lam);
  for (int n = 0; n <= top; ++n) {
    t.ks_in_k.push_back(pullback_matrix(t.ks, t.k, n, [](const Tag& y) { return FormalSum{{y, Integer(1)}}; }));
    t.kl_in_k.push_back(t.ks_in_k.back() * t.kl.incl[n]);
  }
  return t;
}

ComplexOfFp theory_complex(Theory t, const GModule& a, int n, std::size_t budget) {
  if (n < 0) throw Error("negative degree");
  const FiniteGroup& g = a.group();
  std::size_t ob = orbit_budget(a, budget);
  int top = n + 1;
  switch (t) {
    case Theory::ClassicalHomology:
      return tensor_over_G(a, std::make_shared<BarModel>(g, top, ob), top).cx;
    case Theory::ExtHomology:
    case Theory::SymHomology: {
      int m = std::min(top, g.order() - 1);
      auto model = std::make_shared<ExtModel>(g, m, t == Theory::SymHomology, ob);
      return tensor_over_G(a, model, std::max(m, top)).cx;
    }
    case Theory::ClassicalCohomology:
      return hom_over_G(std::make_shared<BarModel>(g, top, ob), a, top).cx;
    case Theory::SymCohomology:
      return hom_over_G(std::make_shared<SkewModel>(g, top, ob), a, top).cx;
    case Theory::ExtCohomology: {
      int m = std::min(top, g.order() - 1);
      return hom_over_G(std::make_shared<ExtModel>(g, m, false, ob), a, m).cx;
    }
    case Theory::SLambda: {
      CochainTower tw = cochain_tower(a, top, budget);
      return quotient_complex(tw.kl.cx, tw.ks.cx, tw.kl.incl);
    }
    case Theory::CLambda: {
      CochainTower tw = cochain_tower(a, top, budget);
      return quotient_complex(tw.kl.cx, tw.k.cx, tw.kl_in_k);
    }
    case Theory::CS: {
      CochainTower tw = cochain_tower(a, top, budget);
      return quotient_complex(tw.ks.cx, tw.k.cx, tw.ks_in_k);
    }
  }
  throw Error("unknown theory");
}

std::vector<Integer> theory_factors(Theory t, const GModule& a, int n, std::size_t budget) {
  if (t == Theory::ExtCohomology && n > a.group().order() - 1) return {};
  if ((t == Theory::ExtHomology || t == Theory::SymHomology) && n > a.group().order() - 1) return {};
  return homology_factors(theory_complex(t, a, n, budget), n);
}

std::vector<Integer> ext_cohomology_via_functions(const GModule& a, int n, std::size_t budget) {
  CochainTower tw = cochain_tower(a, n + 1, budget);
  return homology_factors(tw.kl.cx, n);
}

}  // namespace ghl
