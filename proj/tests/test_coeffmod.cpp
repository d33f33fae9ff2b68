#include "doctest.h"
#include "ghl/gmodule.hpp"
#include "oracles.hpp"

using namespace ghl;

namespace {

std::vector<Integer> ints(std::initializer_list<long> l) {
  std::vector<Integer> v;
  for (long x : l) v.emplace_back(x);
  return v;
}

// rank over Q of the common fixed space, by independent rational elimination
std::size_t rational_fixed_rank(const GModule& a) {
  std::size_t r = a.rank();
  std::vector<std::vector<oracle::Q>> rows;
  for (int g = 0; g < a.group().order(); ++g)
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<oracle::Q> row(r);
      for (std::size_t j = 0; j < r; ++j) row[j] = a.act(g).at(i, j) - (i == j ? 1 : 0);
      rows.push_back(row);
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < r && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      oracle::Q f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < r; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return r - rank;
}

}  // namespace

TEST_CASE("trivial modules") {
  FiniteGroup z3 = cyclic_group(3);
  GModule a = trivial_z(z3);
  CHECK(a.is_trivial_action());
  CHECK(invariants(a).invariant_factors() == ints({0}));
  CHECK(coinvariants(a).invariant_factors() == ints({0}));
  GModule b = trivial_zn(z3, 9);
  CHECK(b.underlying().invariant_factors() == ints({9}));
  CHECK(coinvariants(b).invariant_factors() == ints({9}));
  CHECK(invariants(trivial_zn(cyclic_group(2), 2)).invariant_factors() == ints({2}));
  CHECK(a.side_converted().is_trivial_action());
}

TEST_CASE("regular modules") {
  FiniteGroup z2 = cyclic_group(2);
  GModule r2 = regular_module(z2, Side::Right);
  CHECK(r2.act(1) == IntMatrix::from_rows({{0, 1}, {1, 0}}));
  FiniteGroup z3 = cyclic_group(3);
  GModule r3 = regular_module(z3, Side::Right);
  CHECK(r3.act(1) * r3.act(2) == IntMatrix::identity(3));
  // e_x . t = e_{x+1}
  CHECK(r3.act(1).at(1, 0) == 1);
  CHECK(r3.act(1).at(2, 1) == 1);
  CHECK(invariants(r2).invariant_factors() == ints({0}));
  CHECK(coinvariants(r2).invariant_factors() == ints({0}));
  CHECK(coinvariants(r3).invariant_factors() == ints({0}));
}

TEST_CASE("augmentation ideal") {
  GModule d2 = augmentation_ideal(cyclic_group(2), Side::Right);
  CHECK(d2.rank() == 1);
  CHECK(d2.act(1) == IntMatrix::from_rows({{-1}}));
  GModule d3 = augmentation_ideal(cyclic_group(3), Side::Right);
  CHECK(d3.rank() == 2);
  // (t - 1) t = (t^2 - 1) - (t - 1)
  CHECK(d3.act(1) == IntMatrix::from_rows({{-1, -1}, {1, 0}}));
  CHECK(augmentation_ideal(cyclic_group(1), Side::Right).rank() == 0);
}

TEST_CASE("side conversion") {
  FiniteGroup z3 = cyclic_group(3);
  GModule r = regular_module(z3, Side::Right);
  GModule l = r.side_converted();
  CHECK(l.side() == Side::Left);
  CHECK(l.act(1) == r.act(2));
  GModule back = l.side_converted();
  for (int g = 0; g < 3; ++g) CHECK(back.act(g) == r.act(g));
  CHECK(back.side() == Side::Right);
}

TEST_CASE("bad actions are rejected") {
  FiniteGroup z2 = cyclic_group(2);
  std::vector<IntMatrix> act{IntMatrix::identity(1), IntMatrix::from_rows({{2}})};
  CHECK_THROWS_AS(GModule(z2, FpAbGroup::free(1), act, Side::Left), Error);
  std::vector<IntMatrix> ok{IntMatrix::identity(1), IntMatrix::from_rows({{2}})};
  // 2*2 = 4 = 1 mod 3, so t -> 2 is an action on Z/3
  CHECK_NOTHROW(GModule(z2, FpAbGroup::cyclic_sum(ints({3})), ok, Side::Left));
}

TEST_CASE("regular invariants are the norm line on every catalog group") {
  for (auto& [name, g] : catalog_groups()) {
    if (g.order() > 6) continue;
    for (Side s : {Side::Left, Side::Right}) {
      GModule r = regular_module(g, s);
      CHECK(invariants(r).invariant_factors() == ints({0}));
      CHECK(rational_fixed_rank(r) == 1);
    }
    // brute force over {-1,0,1}^n: only 0 and +-N are fixed
    GModule r = regular_module(g, Side::Right);
    int n = g.order(), fixed = 0;
    std::vector<int> v(n, -1);
    for (;;) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n; ++y)
          if (v[g.mul(y, x)] != v[y]) {
            ok = false;
            break;
          }
      fixed += ok;
      int i = 0;
      while (i < n && v[i] == 1) v[i++] = -1;
      if (i == n) break;
      ++v[i];
    }
    CHECK(fixed == 3);
  }
}

TEST_CASE("coinvariants of trivial modules are the module itself") {
  for (auto& [name, g] : catalog_groups()) {
    CHECK(coinvariants(trivial_z(g)).invariant_factors() == ints({0}));
    CHECK(coinvariants(trivial_zn(g, 6)).invariant_factors() == ints({6}));
  }
}

TEST_CASE("norm element") {
  FiniteGroup z3 = cyclic_group(3);
  GModule r = regular_module(z3, Side::Right);
  IntMatrix n = GroupRingElement::norm(z3).on(r);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(n.at(i, j) == 1);
  IntMatrix s = GroupRingElement::signed_norm(cyclic_group(2)).on(trivial_z(cyclic_group(2)));
  CHECK(s.at(0, 0) == 0);
}
