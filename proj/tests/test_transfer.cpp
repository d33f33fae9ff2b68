#include <random>

#include "doctest.h"
#include "ghl/transfer.hpp"

using namespace ghl;

namespace {

struct Pair {
  std::string name;
  FiniteGroup g;
  std::vector<int> h;
};

int element_of_order(const FiniteGroup& g, int k) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) return x;
  return -1;
}

std::vector<Pair> pairs() {
  FiniteGroup s3 = symmetric_group(3), d4 = dihedral_group(4), v4 = klein_four();
  return {{"Z4>Z2", cyclic_group(4), {0, 2}},
          {"Z6>Z3", cyclic_group(6), {0, 2, 4}},
          {"Z6>Z2", cyclic_group(6), {0, 3}},
          {"Z2>1", cyclic_group(2), {0}},
          {"S3>A3", s3, generated_subgroup(s3, {element_of_order(s3, 3)})},
          {"S3>C2", s3, generated_subgroup(s3, {element_of_order(s3, 2)})},
          {"V4>C2", v4, {0, 1}},
          {"D4>C4", d4, generated_subgroup(d4, {element_of_order(d4, 4)})}};
}

std::vector<GModule> modules(const FiniteGroup& g) {
  return {trivial_z(g), trivial_zn(g, 2), regular_module(g, Side::Left)};
}

IntMatrix scalar(std::size_t n, long k) { return Integer(k) * IntMatrix::identity(n); }

FpHom times(const FpAbGroup& a, long k) { return FpHom(a, a, scalar(a.gens(), k)); }

SparseVec random_vec(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::vector<Integer> v(n);
  for (auto& x : v) x = static_cast<long>(lo + static_cast<int>(rng() % (hi - lo + 1)));
  return SparseVec::from_dense(v);
}

}  // namespace

TEST_CASE("transfer over the whole group is the identity") {
  FiniteGroup z3 = cyclic_group(3);
  TransferContext c = make_transfer_context(z3, {0, 1, 2}, trivial_z(z3));
  CHECK(c.cosets.index() == 1);
  for (int n = 0; n <= 3; ++n) {
    CHECK(tr_function(c, n) == IntMatrix::identity(tr_function(c, n).rows()));
    CHECK(res_function(c, n) == IntMatrix::identity(res_function(c, n).rows()));
  }
  CochainTower t = cochain_tower(c.a, 3);
  for (int n = 0; n <= 3; ++n) CHECK(trace_equivariant(c, t.k, t.k, n) == IntMatrix::identity(t.k.cx.group(n).gens()));
}

TEST_CASE("degree zero transfer sums over cosets") {
  for (auto& p : pairs()) {
    TransferContext c = make_transfer_context(p.g, p.h, trivial_z(p.g));
    int k = c.cosets.index();
    CHECK_MESSAGE(tr_function(c, 0) == scalar(1, k), p.name);
    FpHom cr = transfer_on_cohomology(Theory::ClassicalCohomology, c, TransferMap::CoresRes, 0);
    CHECK_MESSAGE(cr.equals(times(cr.source(), k)), p.name);
  }
  // regular module: tr^0(a) = sum_i c_i a
  FiniteGroup z2 = cyclic_group(2);
  TransferContext c = make_transfer_context(z2, {0}, regular_module(z2, Side::Left));
  CHECK(tr_function(c, 0) == IntMatrix::identity(2) + c.a.act(1));
}

TEST_CASE("tr and Tr commute with the coboundary") {
  for (auto& p : pairs())
    for (const GModule& a : modules(p.g)) {
      TransferContext c = make_transfer_context(p.g, p.h, a);
      int top = p.g.order() >= 8 ? 2 : 3;
      FunctionCochains cg(c.a, top + 1, 1u << 22), ch(c.ah, top + 1, 1u << 22);
      auto bg = std::make_shared<BarModel>(p.g, top + 1, 1u << 20);
      auto bh = std::make_shared<BarModel>(c.h.group, top + 1, 1u << 20);
      HomComplex kg = hom_over_G(bg, c.a, top + 1), kh = hom_over_G(bh, c.ah, top + 1);
      for (int n = 0; n <= top; ++n) {
        CAPTURE(n);
        CHECK_MESSAGE(cg.delta(n) * tr_function(c, n) == tr_function(c, n + 1) * ch.delta(n), p.name);
        CHECK_MESSAGE(ch.delta(n) * res_function(c, n) == res_function(c, n + 1) * cg.delta(n), p.name);
        IntMatrix tr_n = trace_equivariant(c, kh, kg, n), tr_n1 = trace_equivariant(c, kh, kg, n + 1);
        CHECK_MESSAGE(congruent_mod(kg.cx.out(n) * tr_n, tr_n1 * kh.cx.out(n), kg.cx.group(n + 1).relations()), p.name);
        // Tr is tr conjugated by psi
        CHECK_MESSAGE(psi_matrix(kg, cg, n) * tr_n == tr_function(c, n) * psi_matrix(kh, ch, n), p.name);
        CHECK_MESSAGE(psi_matrix(kh, ch, n) * res_equivariant(c, kg, kh, n) == res_function(c, n) * psi_matrix(kg, cg, n),
                      p.name);
      }
    }
}

TEST_CASE("Tr preserves skew and exterior cochains") {
  std::mt19937 rng(77);
  for (auto& p : pairs())
    for (const GModule& a : {trivial_z(p.g), trivial_zn(p.g, 2)}) {
      if (p.g.order() >= 8) continue;
      TransferContext c = make_transfer_context(p.g, p.h, a);
      CochainTower tg = cochain_tower(c.a, 3), th = cochain_tower(c.ah, 3);
      for (int n = 0; n <= 3; ++n) {
        IntMatrix tr = trace_equivariant(c, th.k, tg.k, n);
        const Lattice& rel = tg.k.cx.group(n).relations();
        for (int trial = 0; trial < 5; ++trial) {
          SparseVec s = random_vec(rng, th.ks.cx.group(n).gens(), -3, 3);
          CHECK_MESSAGE(solve_mod(tg.ks_in_k[n], tr * (th.ks_in_k[n] * s), rel).has_value(), p.name, " n=", n);
          SparseVec l = random_vec(rng, th.kl.cx.group(n).gens(), -3, 3);
          CHECK_MESSAGE(solve_mod(tg.kl_in_k[n], tr * (th.kl_in_k[n] * l), rel).has_value(), p.name, " n=", n);
        }
      }
    }
}

TEST_CASE("classical cores o res is multiplication by the index") {
  for (auto& p : pairs())
    for (const GModule& a : modules(p.g)) {
      TransferContext c = make_transfer_context(p.g, p.h, a);
      for (int n = 0; n <= 2; ++n) {
        FpHom cr = transfer_on_cohomology(Theory::ClassicalCohomology, c, TransferMap::CoresRes, n);
        CHECK_MESSAGE(cr.equals(times(cr.source(), c.cosets.index())), p.name, " ", a.describe(), " n=", n);
      }
    }
}

TEST_CASE("restriction from Z4 to Z2 in degree two") {
  FiniteGroup z4 = cyclic_group(4), z2 = cyclic_group(2);
  TransferContext c = make_transfer_context(z4, {0, 2}, trivial_z(z4));
  FpHom r = transfer_on_cohomology(Theory::ClassicalCohomology, c, TransferMap::Res, 2);
  std::vector<Integer> f4{Integer(4)}, f2{Integer(2)};
  CHECK(r.source().invariant_factors() == f4);
  CHECK(r.target().invariant_factors() == f2);
  CHECK(homology_factors(cyclic_periodic_complex(trivial_z(z4), Variance::Cochain, 3), 2) == f4);
  CHECK(homology_factors(cyclic_periodic_complex(trivial_z(z2), Variance::Cochain, 3), 2) == f2);
  CHECK(r.surjective());
  FpHom co = transfer_on_cohomology(Theory::ClassicalCohomology, c, TransferMap::Cores, 2);
  CHECK(co.compose_after(r).equals(times(r.source(), 2)));
}

TEST_CASE("corestriction does not depend on coset representatives") {
  FiniteGroup z6 = cyclic_group(6);
  for (Theory t : {Theory::ClassicalCohomology, Theory::SymCohomology, Theory::ExtCohomology})
    for (int n = 0; n <= 2; ++n) {
      TransferContext c1 = make_transfer_context(z6, {0, 3}, trivial_z(z6));
      TransferContext c2 = make_transfer_context(z6, {0, 3}, trivial_z(z6), {0, 4, 5});
      FpHom a = transfer_on_cohomology(t, c1, TransferMap::Cores, n);
      FpHom b = transfer_on_cohomology(t, c2, TransferMap::Cores, n);
      CHECK_MESSAGE(a.equals(b), theory_name(t), " n=", n);
    }
  FiniteGroup s3 = symmetric_group(3);
  int r = element_of_order(s3, 2);
  std::vector<int> a3 = generated_subgroup(s3, {element_of_order(s3, 3)});
  TransferContext c1 = make_transfer_context(s3, a3, regular_module(s3, Side::Left));
  int other = -1;
  for (int x = 0; x < 6; ++x)
    if (x != r && s3.element_order(x) == 2) other = x;
  TransferContext c2 = make_transfer_context(s3, a3, regular_module(s3, Side::Left), {0, other});
  for (int n = 0; n <= 2; ++n)
    CHECK(transfer_on_cohomology(Theory::ClassicalCohomology, c1, TransferMap::Cores, n)
              .equals(transfer_on_cohomology(Theory::ClassicalCohomology, c2, TransferMap::Cores, n)));
}

TEST_CASE("symmetric and exterior transfer are well defined") {
  for (auto& p : pairs()) {
    if (p.g.order() >= 8) continue;
    for (Theory t : {Theory::SymCohomology, Theory::ExtCohomology})
      for (int n = 0; n <= 2; ++n) {
        TransferContext c = make_transfer_context(p.g, p.h, trivial_zn(p.g, 2));
        CHECK_NOTHROW(transfer_on_cohomology(t, c, TransferMap::CoresRes, n));
      }
  }
}

TEST_CASE("transfer argument errors") {
  FiniteGroup z4 = cyclic_group(4);
  CHECK_THROWS_AS(make_transfer_context(z4, {0, 1}, trivial_z(z4)), Error);
  CHECK_THROWS_AS(make_transfer_context(z4, {0, 2}, trivial_z(z4), {0, 2}), Error);
  CHECK_THROWS_AS(make_transfer_context(z4, {0, 2}, trivial_z(cyclic_group(2))), Error);
  TransferContext c = make_transfer_context(z4, {0, 2}, trivial_z(z4));
  CHECK_THROWS_AS(transfer_on_cohomology(Theory::ClassicalHomology, c, TransferMap::Res, 1), Error);
  CHECK(parse_transfer_map("cores-res") == TransferMap::CoresRes);
  CHECK_THROWS_AS(parse_transfer_map("x"), Error);
}
