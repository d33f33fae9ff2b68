#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ghl/theories.hpp"
#include "oracles.hpp"

using namespace ghl;

namespace {

std::vector<Integer> ints(std::initializer_list<long> l) {
  std::vector<Integer> v;
  for (long x : l) v.emplace_back(x);
  return v;
}

using Vec = std::vector<long>;

std::vector<Vec> all_vectors(std::size_t n, long m) {
  std::vector<Vec> out{Vec(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (auto& v : out)
      for (long x = 0; x < m; ++x) {
        Vec w = v;
        w[i] = x;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

Vec apply_mod(const std::vector<Vec>& rows, const Vec& v, long m) {
  Vec out(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += rows[i][j] * v[j];
    out[i] = ((s % m) + m) % m;
  }
  return out;
}

bool is_zero(const Vec& v) {
  for (long x : v)
    if (x) return false;
  return true;
}

// Brute force: for each d, #{h in H : d h = 0}.  Determines H up to isomorphism.
std::map<long, long> torsion_profile(std::size_t n, const std::vector<Vec>& d_in, const std::vector<Vec>& d_out,
                                     long m) {
  std::set<Vec> bounds;
  if (d_in.empty())
    bounds.insert(Vec(n, 0));
  else
    for (auto& v : all_vectors(d_in[0].size(), m)) bounds.insert(apply_mod(d_in, v, m));
  std::vector<Vec> cycles;
  for (auto& v : all_vectors(n, m))
    if (d_out.empty() || is_zero(apply_mod(d_out, v, m))) cycles.push_back(v);
  std::map<long, long> prof;
  for (long d = 1; d <= m; ++d) {
    long c = 0;
    for (auto& z : cycles) {
      Vec w = z;
      for (auto& x : w) x = (x * d) % m;
      c += bounds.count(w);
    }
    prof[d] = c / static_cast<long>(bounds.size());
  }
  return prof;
}

std::map<long, long> profile_of(const std::vector<Integer>& f, long m) {
  std::map<long, long> prof;
  for (long d = 1; d <= m; ++d) {
    oracle::Z c = oracle::torsion_count(f, d);
    prof[d] = c.get_si();
  }
  return prof;
}

IntMatrix to_matrix(const std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::vector<long>> r = rows;
  if (rows.empty()) return IntMatrix(0, cols);
  return IntMatrix::from_rows(r);
}

}  // namespace

TEST_CASE("homology of small integer complexes") {
  // chains: Z --2--> Z
  ComplexOfFp c(Variance::Chain, {FpAbGroup::free(1), FpAbGroup::free(1)},
                {IntMatrix(0, 1), IntMatrix::from_rows({{2}})}, true);
  CHECK(homology_factors(c, 0) == ints({2}));
  CHECK(homology_factors(c, 1).empty());
  CHECK(homology(c, 0).group.invariant_factors() == ints({2}));
  // cochains: Z --0--> Z --3--> Z/6
  ComplexOfFp k(Variance::Cochain,
                {FpAbGroup::free(1), FpAbGroup::free(1), FpAbGroup::cyclic_sum(ints({6}))},
                {IntMatrix::from_rows({{0}}), IntMatrix::from_rows({{3}}), std::nullopt}, false);
  CHECK(homology_factors(k, 0) == ints({0}));
  CHECK(homology_factors(k, 1) == ints({0}));
  CHECK_THROWS_AS(homology_factors(k, 2), Error);
  CHECK_THROWS_AS(homology_factors(k, 3), Error);
}

TEST_CASE("homology of random mod-m complexes against enumeration") {
  std::mt19937 rng(20241);
  for (int trial = 0; trial < 40; ++trial) {
    long m = std::vector<long>{2, 3, 4, 6}[trial % 4];
    std::size_t n0 = 1 + rng() % 3, n1 = 1 + rng() % 3, n2 = 1 + rng() % 2;
    if (m == 6) n0 = n1 = n2 = std::min<std::size_t>(n1, 2);
    std::vector<Vec> d0(n1, Vec(n0));
    for (auto& r : d0)
      for (auto& x : r) x = static_cast<long>(rng() % m);
    // rows of d1 from the left null space of d0 mod m
    std::vector<Vec> left;
    for (auto& r : all_vectors(n1, m)) {
      bool ok = true;
      for (std::size_t j = 0; j < n0 && ok; ++j) {
        long s = 0;
        for (std::size_t i = 0; i < n1; ++i) s += r[i] * d0[i][j];
        ok = s % m == 0;
      }
      if (ok) left.push_back(r);
    }
    std::vector<Vec> d1;
    for (std::size_t i = 0; i < n2; ++i) d1.push_back(left[rng() % left.size()]);
    FpAbGroup u0 = FpAbGroup::uniform(n0, m), u1 = FpAbGroup::uniform(n1, m), u2 = FpAbGroup::uniform(n2, m);
    ComplexOfFp c(Variance::Cochain, {u0, u1, u2}, {to_matrix(d0, n0), to_matrix(d1, n1), IntMatrix(0, n2)}, true);
    CAPTURE(trial);
    auto h0 = homology_factors(c, 0), h1 = homology_factors(c, 1), h2 = homology_factors(c, 2);
    CHECK(profile_of(h0, m) == torsion_profile(n0, {}, d0, m));
    CHECK(profile_of(h1, m) == torsion_profile(n1, d0, d1, m));
    CHECK(profile_of(h2, m) == torsion_profile(n2, d1, {}, m));
    CHECK(homology(c, 1).group.invariant_factors() == h1);
  }
}

TEST_CASE("fast path agrees with the general path") {
  for (auto& [name, g] : catalog_groups()) {
    if (g.order() > 6) continue;
    for (Theory t : {Theory::ClassicalHomology, Theory::ExtHomology, Theory::SymHomology, Theory::ClassicalCohomology,
                     Theory::SymCohomology, Theory::ExtCohomology}) {
      for (const GModule& a : {trivial_z(g), trivial_zn(g, 4), regular_module(g, Side::Left)}) {
        int n = std::min(2, g.order() - 1);
        ComplexOfFp c = theory_complex(t, a, n);
        CHECK_MESSAGE(homology(c, n).group.invariant_factors() == homology_factors(c, n), name, " ",
                      theory_name(t), " ", a.describe());
      }
    }
  }
}

TEST_CASE("cycle classification") {
  FiniteGroup z4 = cyclic_group(4);
  auto bar = std::make_shared<BarModel>(z4, 3);
  HomComplex k = hom_over_G(bar, trivial_z(z4), 3);
  Homology h = homology(k.cx, 2);
  REQUIRE(h.group.invariant_factors() == ints({4}));
  SparseVec z = h.section.column(0);
  CHECK(k.cx.group(3).is_zero(k.cx.out(2) * z));
  CHECK(h.classify(z) == SparseVec::unit(0));
  // boundaries classify to zero, multiples wrap
  for (std::size_t j = 0; j < k.cx.group(1).gens(); ++j) {
    SparseVec b = k.cx.out(1) * SparseVec::unit(j);
    CHECK(h.group.is_zero(h.classify(b)));
  }
  IntMatrix four = Integer(4) * IntMatrix::identity(k.cx.group(2).gens());
  CHECK(h.group.is_zero(h.classify(four * z)));
}

TEST_CASE("induced maps on homology") {
  FiniteGroup z2 = cyclic_group(2);
  auto bar = std::make_shared<BarModel>(z2, 3);
  HomComplex k = hom_over_G(bar, trivial_zn(z2, 4), 3);
  for (int n = 0; n <= 2; ++n) {
    Homology h = homology(k.cx, n);
    IntMatrix id = IntMatrix::identity(k.cx.group(n).gens());
    FpHom f = induced_on_homology(h, h, id);
    CHECK(f.equals(FpHom(h.group, h.group, IntMatrix::identity(h.group.gens()))));
    FpHom two = induced_on_homology(h, h, Integer(2) * id);
    // H^n(Z2, Z/4) is Z/4 in degree 0 and Z/2 above
    CHECK(two.is_zero() == (n > 0));
  }
  // exterior cohomology sits inside the skew cohomology via K_lambda -> KS
  CochainTower tw = cochain_tower(trivial_zn(z2, 2), 3);
  for (int n = 0; n <= 2; ++n) {
    Homology a = homology(tw.kl.cx, n), b = homology(tw.ks.cx, n);
    FpHom f = induced_on_homology(a, b, tw.kl.incl[n]);
    CHECK(f.source().invariant_factors() == a.group.invariant_factors());
  }
}

TEST_CASE("exactness checks") {
  FpAbGroup z = FpAbGroup::free(1), z2 = FpAbGroup::cyclic_sum(ints({2}));
  FpHom twice(z, z, IntMatrix::from_rows({{2}}));
  FpHom red(z, z2, IntMatrix::from_rows({{1}}));
  CHECK(exact_at(twice, red));
  FpHom zero(z, z, IntMatrix::from_rows({{0}}));
  CHECK_FALSE(exact_at(zero, zero));
  CHECK_FALSE(exact_at(twice, FpHom(z, z, IntMatrix::from_rows({{1}}))));
}

TEST_CASE("long exact sequences of the cochain tower") {
  for (auto [g, a] : {std::pair{cyclic_group(2), trivial_zn(cyclic_group(2), 2)},
                      std::pair{cyclic_group(3), trivial_z(cyclic_group(3))},
                      std::pair{cyclic_group(4), trivial_z(cyclic_group(4))}}) {
    CochainTower tw = cochain_tower(a, 5);
    ComplexOfFp q1 = quotient_complex(tw.kl.cx, tw.k.cx, tw.kl_in_k);
    LongExactSequence l1 = long_exact_sequence(tw.kl.cx, tw.k.cx, q1, tw.kl_in_k, 0, 3);
    std::string where;
    CHECK_MESSAGE(l1.exact(&where), a.describe(), " ", where);
    ComplexOfFp q2 = quotient_complex(tw.kl.cx, tw.ks.cx, tw.kl.incl);
    LongExactSequence l2 = long_exact_sequence(tw.kl.cx, tw.ks.cx, q2, tw.kl.incl, 0, 3);
    CHECK_MESSAGE(l2.exact(&where), a.describe(), " ", where);
    ComplexOfFp q3 = quotient_complex(tw.ks.cx, tw.k.cx, tw.ks_in_k);
    LongExactSequence l3 = long_exact_sequence(tw.ks.cx, tw.k.cx, q3, tw.ks_in_k, 0, 3);
    CHECK_MESSAGE(l3.exact(&where), a.describe(), " ", where);
  }
}

TEST_CASE("connecting map of the mod-2 reduction") {
  // 0 -> C(Z) --2--> C(Z) -> C(Z/2) -> 0 on the bar cochains of Z2; the connecting map is the Bockstein
  FiniteGroup z2 = cyclic_group(2);
  auto bar = std::make_shared<BarModel>(z2, 5);
  HomComplex k = hom_over_G(bar, trivial_z(z2), 5);
  std::vector<IntMatrix> incl;
  for (int n = 0; n <= 5; ++n) incl.push_back(Integer(2) * IntMatrix::identity(k.cx.group(n).gens()));
  ComplexOfFp q = quotient_complex(k.cx, k.cx, incl);
  for (int n = 0; n <= 3; ++n) CHECK(homology_factors(q, n) == ints({2}));
  LongExactSequence l = long_exact_sequence(k.cx, k.cx, q, incl, 0, 3);
  CHECK(l.exact());
  // H^1(Z/2) = Z/2 -> H^2(Z) = Z/2 is an isomorphism
  CHECK(l.connecting[1].injective());
  CHECK(l.connecting[1].surjective());
  CHECK(l.connecting[0].is_zero());
}

TEST_CASE("named values") {
  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4);
  CHECK(theory_factors(Theory::ClassicalCohomology, trivial_z(z4), 2) == ints({4}));
  CHECK(theory_factors(Theory::ClassicalHomology, trivial_z(z3), 1) == ints({3}));
  CHECK(theory_factors(Theory::SymHomology, trivial_z(z3), 1) == ints({9}));
  CHECK(theory_factors(Theory::ExtHomology, trivial_z(z4), 3) == ints({2}));
  CHECK(theory_factors(Theory::SymCohomology, trivial_zn(z2, 2), 5) == ints({2}));
  CHECK(theory_factors(Theory::SLambda, trivial_zn(z2, 2), 5) == ints({2}));
  CHECK(theory_factors(Theory::ExtCohomology, trivial_z(z3), 7).empty());
  for (int n = 0; n <= 3; ++n)
    CHECK(theory_factors(Theory::ExtCohomology, trivial_z(z3), n) ==
          ext_cohomology_via_functions(trivial_z(z3), n));
  CHECK(parse_theory("clambda") == Theory::CLambda);
  CHECK_THROWS_AS(parse_theory("nope"), Error);
}
