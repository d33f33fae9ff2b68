#include "doctest.h"
#include "ghl/cochains.hpp"
#include "ghl/comparison.hpp"
#include "ghl/homology.hpp"
#include "oracles.hpp"

using namespace ghl;

namespace {

std::vector<Integer> ints(std::initializer_list<long> l) {
  std::vector<Integer> v;
  for (long x : l) v.emplace_back(x);
  return v;
}

FormalSum sum(std::initializer_list<std::pair<Tag, long>> l) {
  FormalSum s;
  for (auto& [t, c] : l) s.emplace_back(t, Integer(c));
  return collect(s);
}

// coefficient of each (orbit, element) when a formal sum is written in the orbit basis
std::map<std::pair<std::size_t, int>, long> in_orbits(const SignedModel& m, int n, const FormalSum& s) {
  std::map<std::pair<std::size_t, int>, long> out;
  for (auto& [t, c] : s) {
    Placement p = m.place(n, t);
    if (p.sign) out[{p.orbit, p.g}] += c.get_si() * p.sign;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_CASE("bar boundary examples") {
  CHECK(collect(bar_boundary({3, 5})) == sum({{{5}, 1}, {{3}, -1}}));
  CHECK(collect(bar_boundary({0, 1, 2})) == sum({{{1, 2}, 1}, {{0, 2}, -1}, {{0, 1}, 1}}));
  BarModel bar(cyclic_group(3), 3);
  CHECK(check_dd_zero(bar, 3).ok);
  CHECK(bar.num_orbits(2) == 9);
  Placement p = bar.place(2, {2, 0, 1});
  CHECK(p.g == 2);
  CHECK(bar.rep(2, p.orbit) == Tag{0, 1, 2});
}

TEST_CASE("exterior boundary of Z3 and Z4 in orbit form") {
  FiniteGroup z3 = cyclic_group(3);
  ExtModel e3(z3, 2);
  REQUIRE(e3.num_orbits(1) == 1);
  CHECK(e3.rep(1, 0) == Tag{0, 1});
  // d(1^g^g2) = (1 + g + g2)(1^g)
  auto got = in_orbits(e3, 1, e3.boundary(2, {0, 1, 2}));
  CHECK(got == std::map<std::pair<std::size_t, int>, long>{{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}});

  FiniteGroup z4 = cyclic_group(4);
  ExtModel e4(z4, 3);
  Placement base = e4.place(2, {0, 1, 2});
  REQUIRE(base.sign == 1);
  REQUIRE(base.g == 0);
  auto got4 = in_orbits(e4, 2, e4.boundary(3, {0, 1, 2, 3}));
  std::map<std::pair<std::size_t, int>, long> want4{
      {{base.orbit, 0}, -1}, {{base.orbit, 1}, 1}, {{base.orbit, 2}, -1}, {{base.orbit, 3}, 1}};
  CHECK(got4 == want4);
}

TEST_CASE("symmetric boundaries") {
  FiniteGroup z3 = cyclic_group(3);
  SymDirectModel sd(z3, 2);
  // d(mu(1 x g)) = 2(g - 1)
  CHECK(collect(sd.boundary(1, {0, 1})) == sum({{{0}, -2}, {{1}, 2}}));
  // d(mu(1 x g x g2)) = 3(mu(1 x g) + mu(g x g2) + mu(g2 x 1))
  FormalSum d2 = sd.boundary(2, {0, 1, 2});
  FormalSum want = normalize(sd, sum({{{0, 1}, 3}, {{1, 2}, 3}, {{2, 0}, 3}}));
  CHECK(normalize(sd, d2) == want);

  for (auto& [name, g] : catalog_groups()) {
    int top = std::min(4, g.order() - 1);
    SymDirectModel d(g, top);
    ExtModel e(g, top);
    for (int n = 1; n <= top; ++n)
      for (std::size_t o = 0; o < e.num_orbits(n); ++o) {
        const Tag& w = e.rep(n, o);
        CHECK_MESSAGE(normalize(d, d.boundary(n, w)) == normalize(e, scaled(e.boundary(n, w), n + 1)), name);
      }
  }
}

TEST_CASE("d o d vanishes on every model") {
  for (auto& [name, g] : catalog_groups()) {
    int top = std::min(g.order() + 1, 5);
    if (g.order() >= 6) top = 4;
    CHECK_MESSAGE(check_dd_zero(BarModel(g, top, 1u << 20), top).ok, name);
    CHECK_MESSAGE(check_dd_zero(ExtModel(g, std::min(top, g.order() - 1)), top).ok, name);
    CHECK_MESSAGE(check_dd_zero(SkewModel(g, top), top).ok, name);
    CHECK_MESSAGE(check_dd_zero(SymDirectModel(g, std::min(top, g.order() - 1)), top).ok, name);
  }
}

TEST_CASE("comparison maps") {
  CHECK(collect(mu_map({0, 1})) == sum({{{0, 1}, 1}, {{1, 0}, -1}}));
  CHECK(lambda_map({1, 0}) == sum({{{0, 1}, -1}}));
  CHECK(lambda_map({1, 1}).empty());
  CHECK(collect(apply_linear(lambda_map, nu_map({0, 1}))) == sum({{{0, 1}, 2}}));
  for (auto& [name, g] : catalog_groups())
    for (int n = 0; n <= 3; ++n) {
      CheckResult r = check_comparison_identities(g, n);
      CHECK_MESSAGE(r.ok, name, " ", r.witness);
    }
}

TEST_CASE("top exterior boundary closed form and mutation") {
  for (auto& [name, g] : catalog_groups()) {
    ExtModel m(g, g.order() - 1);
    CheckResult r = check_top_boundary(m);
    CHECK_MESSAGE(r.ok, name, " ", r.witness);
  }
  FiniteGroup z3 = cyclic_group(3);
  ExtModel bad(z3, 2);
  bad.inject_sign_error(2, 1);
  CheckResult r = check_top_boundary(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("coefficient") != std::string::npos);
  CHECK_FALSE(check_dd_zero(bad, 2).ok);
}

TEST_CASE("top exterior coboundary closed form") {
  for (auto& [name, g] : catalog_groups()) {
    auto m = std::make_shared<ExtModel>(g, g.order() - 1);
    for (const GModule& a : {trivial_z(g), trivial_zn(g, 6), regular_module(g, Side::Left)}) {
      CheckResult r = check_top_coboundary(m, a);
      CHECK_MESSAGE(r.ok, name, " ", a.describe(), " ", r.witness);
    }
  }
}

TEST_CASE("tensor relations from stabilizers") {
  // top wedge of Z4 is negated by the generator, forcing 2(a x alpha) = 0
  FiniteGroup z4 = cyclic_group(4);
  auto e = std::make_shared<ExtModel>(z4, 3);
  TensorComplex t = tensor_over_G(trivial_z(z4), e, 3);
  CHECK(t.cx.group(3).invariant_factors() == ints({2}));
  // degree 0 of the bar tensor with trivial coefficients is A
  auto bar = std::make_shared<BarModel>(z4, 1);
  CHECK(tensor_over_G(trivial_zn(z4, 5), bar, 1).cx.group(0).invariant_factors() == ints({5}));
}

TEST_CASE("hom blocks from stabilizers") {
  FiniteGroup z3 = cyclic_group(3);
  auto e = std::make_shared<ExtModel>(z3, 2);
  REQUIRE(e->num_orbits(2) == 1);
  CHECK(e->stabilizer(2, 0).size() == 3);
  for (auto& [g, s] : e->stabilizer(2, 0)) CHECK(s == 1);
  // single orbit fixed by all of G: block = A^G
  HomComplex h = hom_over_G(e, regular_module(z3, Side::Left), 2);
  CHECK(h.cx.group(2).invariant_factors() == invariants(regular_module(z3, Side::Left)).invariant_factors());
  // sign -1 stabilizer with trivial Z gives nothing, with Z/2 everything
  FiniteGroup z2 = cyclic_group(2);
  auto e2 = std::make_shared<ExtModel>(z2, 1);
  CHECK(hom_over_G(e2, trivial_z(z2), 1).cx.group(1).invariant_factors().empty());
  CHECK(hom_over_G(e2, trivial_zn(z2, 2), 1).cx.group(1).invariant_factors() == ints({2}));
  // bar: one free block per tuple (1, g1, g1 g2, ...)
  auto bar = std::make_shared<BarModel>(z3, 2);
  CHECK(hom_over_G(bar, trivial_z(z3), 2).cx.group(2).gens() == 9);
}

TEST_CASE("periodic oracle agrees with the bar complex on cyclic groups") {
  for (int m = 2; m <= 6; ++m) {
    FiniteGroup g = cyclic_group(m);
    for (const GModule& a : {trivial_z(g), trivial_zn(g, m)}) {
      ComplexOfFp pc = cyclic_periodic_complex(a, Variance::Chain, 5);
      ComplexOfFp pk = cyclic_periodic_complex(a, Variance::Cochain, 5);
      auto bar = std::make_shared<BarModel>(g, 5);
      TensorComplex t = tensor_over_G(a, bar, 5);
      HomComplex h = hom_over_G(bar, a, 5);
      for (int n = 0; n <= 4; ++n) {
        CHECK(homology_factors(t.cx, n) == homology_factors(pc, n));
        CHECK(homology_factors(h.cx, n) == homology_factors(pk, n));
      }
    }
  }
  FiniteGroup z2 = cyclic_group(2), z4 = cyclic_group(4);
  CHECK(homology_factors(cyclic_periodic_complex(trivial_z(z2), Variance::Cochain, 3), 2) == ints({2}));
  CHECK(homology_factors(cyclic_periodic_complex(trivial_z(z4), Variance::Chain, 3), 1) == ints({4}));
}

TEST_CASE("complex construction rejects d o d != 0") {
  std::vector<FpAbGroup> g{FpAbGroup::free(1), FpAbGroup::free(1), FpAbGroup::free(1)};
  std::vector<std::optional<IntMatrix>> out{IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}}), std::nullopt};
  CHECK_THROWS_AS(ComplexOfFp(Variance::Cochain, g, out, false), StructureError);
  out[1] = IntMatrix::from_rows({{0}});
  CHECK_NOTHROW(ComplexOfFp(Variance::Cochain, g, out, false));
}

TEST_CASE("function cochains") {
  FiniteGroup z2 = cyclic_group(2);
  FunctionCochains c(trivial_z(z2), 4);
  // delta^1 sigma at (t, t) = 2 sigma(t) - sigma(1)
  IntMatrix d1 = c.delta(1);
  std::size_t row = c.index({1, 1});
  CHECK(d1.at(row, c.index({1})) == 2);
  CHECK(d1.at(row, c.index({0})) == -1);
  CHECK(c.delta(0).is_zero());
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
    for (const GModule& a : {trivial_z(g), regular_module(g, Side::Left)}) {
      int top = g.order() == 6 ? 2 : 3;
      FunctionCochains fc(a, top + 1, 1u << 20);
      for (int n = 0; n <= top; ++n) {
        IntMatrix alt(fc.group(n + 1).gens(), fc.group(n).gens());
        for (int j = 0; j <= n + 1; ++j) alt = alt + Integer(j % 2 ? -1 : 1) * fc.face(n, j);
        CHECK(alt == fc.delta(n));
      }
      CHECK_NOTHROW(fc.complex().check());
      // psi transports the equivariant coboundary to the function coboundary
      auto bar = std::make_shared<BarModel>(g, top + 1);
      HomComplex k = hom_over_G(bar, a, top + 1);
      for (int n = 0; n <= top; ++n) CHECK(psi_matrix(k, fc, n + 1) * k.cx.out(n) == fc.delta(n) * psi_matrix(k, fc, n));
    }
  }
}

TEST_CASE("tau operators satisfy the symmetric group relations") {
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(3)}) {
    FunctionCochains c(trivial_z(g), 4);
    for (int n = 1; n <= 4; ++n) {
      IntMatrix id = IntMatrix::identity(c.group(n).gens());
      for (int i = 1; i <= n; ++i) {
        CHECK(c.tau(n, i) * c.tau(n, i) == id);
        if (i < n) {
          IntMatrix b = c.tau(n, i) * c.tau(n, i + 1);
          CHECK(b * b * b == id);
        }
        for (int j = i + 2; j <= n; ++j) CHECK(c.tau(n, i) * c.tau(n, j) == c.tau(n, j) * c.tau(n, i));
      }
    }
  }
  FunctionCochains c(trivial_z(cyclic_group(2)), 1);
  // (tau_1 s)(t) = -s(t)
  CHECK(c.tau(1, 1).at(1, 1) == -1);
  CHECK_THROWS_AS(c.tau(1, 2), Error);
}

TEST_CASE("symmetric subcomplex of function cochains matches the skew model") {
  for (auto [g, a, top] : {std::tuple{cyclic_group(2), trivial_zn(cyclic_group(2), 2), 5},
                           std::tuple{cyclic_group(3), trivial_z(cyclic_group(3)), 3},
                           std::tuple{cyclic_group(4), trivial_z(cyclic_group(4)), 3}}) {
    FunctionCochains fc(a, top + 1, 1u << 20);
    ComplexOfFp c = fc.complex();
    Subcomplex cs = restrict_to(c, fc.symmetric_lattices());
    auto skew = std::make_shared<SkewModel>(g, top + 1);
    HomComplex ks = hom_over_G(skew, a, top + 1);
    for (int n = 0; n <= top; ++n) CHECK(homology_factors(cs.cx, n) == homology_factors(ks.cx, n));
  }
}

TEST_CASE("skew functions inside the bar complex") {
  FiniteGroup z3 = cyclic_group(3);
  GModule a = trivial_z(z3);
  auto bar = std::make_shared<BarModel>(z3, 4);
  HomComplex k = hom_over_G(bar, a, 4);
  Subcomplex ks = restrict_to(k.cx, skew_lattices(k, false));
  Subcomplex kl = restrict_to(k.cx, skew_lattices(k, true));
  CHECK(ks.cx.group(0).gens() == k.cx.group(0).gens());
  CHECK(kl.cx.group(0).gens() == k.cx.group(0).gens());
  auto skew = std::make_shared<SkewModel>(z3, 4);
  HomComplex ksm = hom_over_G(skew, a, 4);
  auto ext = std::make_shared<ExtModel>(z3, 2);
  HomComplex ke = hom_over_G(ext, a, 2);
  for (int n = 0; n <= 3; ++n) CHECK(homology_factors(ks.cx, n) == homology_factors(ksm.cx, n));
  for (int n = 0; n <= 2; ++n) CHECK(homology_factors(kl.cx, n) == homology_factors(ke.cx, n));
}

TEST_CASE("quotient complexes") {
  FiniteGroup z2 = cyclic_group(2);
  auto bar = std::make_shared<BarModel>(z2, 3);
  HomComplex k = hom_over_G(bar, trivial_z(z2), 3);
  std::vector<IntMatrix> id;
  for (int n = 0; n <= 3; ++n) id.push_back(IntMatrix::identity(k.cx.group(n).gens()));
  ComplexOfFp q = quotient_complex(k.cx, k.cx, id);
  for (int n = 0; n <= 3; ++n) CHECK(q.group(n).is_trivial());
  // zero subcomplex
  std::vector<FpAbGroup> zg(4, FpAbGroup::trivial());
  std::vector<std::optional<IntMatrix>> zo;
  std::vector<IntMatrix> zi;
  for (int n = 0; n <= 3; ++n) {
    zo.emplace_back(n < 3 ? std::optional<IntMatrix>(IntMatrix(0, 0)) : std::nullopt);
    zi.emplace_back(k.cx.group(n).gens(), 0);
  }
  ComplexOfFp zero(Variance::Cochain, zg, zo, false);
  ComplexOfFp same = quotient_complex(zero, k.cx, zi);
  for (int n = 0; n <= 2; ++n) CHECK(homology_factors(same, n) == homology_factors(k.cx, n));
  // non-injective inclusion
  std::vector<IntMatrix> twice;
  for (int n = 0; n <= 3; ++n) twice.push_back(Integer(0) * IntMatrix::identity(k.cx.group(n).gens()));
  CHECK_THROWS_AS(quotient_complex(k.cx, k.cx, twice), Error);
}

TEST_CASE("budget refusal") {
  CHECK_THROWS_AS(BarModel(dihedral_group(4), 6), BudgetError);
  CHECK_THROWS_AS(FunctionCochains(trivial_z(symmetric_group(3)), 7), BudgetError);
}
