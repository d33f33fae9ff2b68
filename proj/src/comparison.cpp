#include "ghl/comparison.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ghl {

FormalSum collect(const FormalSum& s) {
  std::map<Tag, Integer> acc;
  for (auto& [t, c] : s) acc[t] += c;
  FormalSum out;
  for (auto& [t, c] : acc)
    if (c != 0) out.emplace_back(t, c);
  return out;
}

FormalSum scaled(const FormalSum& s, const Integer& c) {
  FormalSum out;
  for (auto& [t, v] : s) out.emplace_back(t, v * c);
  return out;
}

FormalSum apply_linear(const std::function<FormalSum(const Tag&)>& f, const FormalSum& s) {
  FormalSum out;
  for (auto& [t, c] : s)
    for (auto& [u, d] : f(t)) out.emplace_back(u, c * d);
  return out;
}

FormalSum lambda_map(const Tag& t) {
  Tag c = t;
  int s = sort_with_sign(c);
  if (has_repeat(c)) return {};
  return {{c, Integer(s)}};
}

FormalSum mu_map(const Tag& t) {
  FormalSum out;
  std::vector<int> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Tag x(t.size());
    for (std::size_t i = 0; i < perm.size(); ++i) x[i] = t[perm[i]];
    Tag p(perm.begin(), perm.end());
    out.emplace_back(std::move(x), Integer(sort_with_sign(p)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FormalSum nu_map(const Tag& wedge) { return mu_map(wedge); }

FormalSum bar_boundary(const Tag& t) {
  FormalSum out;
  if (t.size() < 2) return out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Tag f = t;
    f.erase(f.begin() + static_cast<long>(i));
    out.emplace_back(std::move(f), Integer(i % 2 ? -1 : 1));
  }
  return out;
}

FormalSum ext_boundary(const FiniteGroup& g, const Tag& wedge) {
  if (wedge.size() > static_cast<std::size_t>(g.order())) throw Error("wedge longer than the group");
  return apply_linear(lambda_map, bar_boundary(wedge));
}

std::string tag_string(const FiniteGroup& g, const Tag& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + g.label(t[i]);
  return s + ")";
}

namespace {

std::string sum_string(const FiniteGroup& g, const FormalSum& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " + " : "") << s[i].second.get_str() << "*" << tag_string(g, s[i].first);
  return os.str();
}

Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

CheckResult check_comparison_identities(const FiniteGroup& g, int n) {
  if (n < 0) throw Error("negative degree");
  int ord = g.order();
  // all maps commute with the diagonal action, so tuples starting at the identity suffice
  Tag t(static_cast<std::size_t>(n) + 1, 0);
  auto lam = [](const Tag& x) { return lambda_map(x); };
  auto ext = [&](const Tag& x) { return ext_boundary(g, x); };
  for (;;) {
    FormalSum dt = bar_boundary(t);
    FormalSum lhs = collect(apply_linear(lam, dt));
    FormalSum rhs = collect(apply_linear(ext, lambda_map(t)));
    if (lhs != rhs)
      return CheckResult::fail("lambda d != d lambda at " + tag_string(g, t) + ": " + sum_string(g, lhs) + " vs " +
                               sum_string(g, rhs));
    lhs = collect(apply_linear(bar_boundary, mu_map(t)));
    rhs = collect(scaled(apply_linear(mu_map, dt), n + 1));
    if (lhs != rhs) return CheckResult::fail("d mu != (n+1) mu d at " + tag_string(g, t));
    std::size_t i = t.size();
    while (i > 1 && t[i - 1] == ord - 1) t[--i] = 0;
    if (i <= 1) break;
    ++t[i - 1];
  }
  if (n + 1 > ord) return CheckResult::pass();
  Integer fact = factorial(n + 1);
  // wedges containing the identity
  Tag w(static_cast<std::size_t>(n) + 1);
  std::iota(w.begin(), w.end(), 0);
  for (;;) {
    FormalSum lhs = collect(apply_linear(lam, nu_map(w)));
    if (lhs != FormalSum{{w, fact}}) return CheckResult::fail("lambda nu != (n+1)! at " + tag_string(g, w));
    lhs = collect(apply_linear(bar_boundary, nu_map(w)));
    FormalSum rhs = collect(scaled(apply_linear(nu_map, ext_boundary(g, w)), n + 1));
    if (lhs != rhs) return CheckResult::fail("d nu != (n+1) nu d at " + tag_string(g, w));
    int k = n;
    while (k >= 1 && w[k] == ord - 1 - (n - k)) --k;
    if (k < 1) break;
    ++w[k];
    for (int j = k + 1; j <= n; ++j) w[j] = w[j - 1] + 1;
  }
  return CheckResult::pass();
}

CheckResult check_top_boundary(const ExtModel& m) {
  const FiniteGroup& g = m.group();
  int n = g.order();
  if (n < 2) return CheckResult::pass();
  if (m.max_degree() < n - 1) throw Error("model does not reach the top degree");
  Tag alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n - 1));
  std::iota(alpha.begin(), alpha.end(), 0);
  std::iota(beta.begin(), beta.end(), 1);
  // coefficient of (orbit, element) in the free orbit basis of degree n-2
  std::map<std::pair<std::size_t, int>, Integer> got, want;
  for (auto& [t, c] : m.boundary(n - 1, alpha)) {
    Placement p = m.place(n - 2, t);
    if (p.sign != 0) got[{p.orbit, p.g}] += c * p.sign;
  }
  for (int x = 0; x < n; ++x) {
    Placement p = m.place(n - 2, m.act(x, beta));
    want[{p.orbit, p.g}] += cayley_sign(g, x) * p.sign;
  }
  for (auto* mp : {&got, &want})
    for (auto it = mp->begin(); it != mp->end();) it = it->second == 0 ? mp->erase(it) : std::next(it);
  if (got == want) return CheckResult::pass();
  for (auto& [k, v] : want) {
    Integer have = got.count(k) ? got[k] : Integer(0);
    if (have != v)
      return CheckResult::fail("coefficient of " + g.label(k.second) + " on orbit " + std::to_string(k.first) +
                               ": boundary gives " + have.get_str() + ", closed form gives " + v.get_str());
  }
  for (auto& [k, v] : got)
    if (!want.count(k))
      return CheckResult::fail("coefficient of " + g.label(k.second) + " on orbit " + std::to_string(k.first) +
                               ": boundary gives " + v.get_str() + ", closed form gives 0");
  return CheckResult::fail("top boundary mismatch");
}

CheckResult check_top_coboundary(std::shared_ptr<const ExtModel> m, const GModule& a_in) {
  GModule a = a_in.as_side(Side::Left);
  const FiniteGroup& g = m->group();
  int n = g.order();
  if (n < 2) return CheckResult::pass();
  HomComplex h = hom_over_G(m, a, n - 1);
  if (m->num_orbits(n - 2) != 1) return CheckResult::fail("degree n-2 is not a single orbit");
  Tag alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n - 1));
  std::iota(alpha.begin(), alpha.end(), 0);
  std::iota(beta.begin(), beta.end(), 1);
  std::size_t r = a.rank();
  bool oriented = is_oriented(g);
  IntMatrix weighted(r, r);
  for (int x = 0; x < n; ++x) weighted = weighted + Integer(oriented ? 1 : cayley_sign(g, x)) * a.act(x);
  Placement pb = m->place(n - 2, beta);
  IntMatrix d = h.cx.out(n - 2);
  for (std::size_t j = 0; j < r; ++j) {
    SparseVec v = SparseVec::unit(j);
    // f(beta) = v
    SparseVec at_rep = a.act(g.inv(pb.g)) * v;
    if (pb.sign < 0) at_rep.negate();
    SparseVec f = from_rep_values(h, n - 2, {at_rep});
    SparseVec df = d * f;
    for (int x = 0; x < n; ++x) {
      SparseVec lhs = value_at(h, n - 1, df, m->act(x, alpha));
      SparseVec rhs = weighted * v;
      if (!oriented && cayley_sign(g, x) < 0) rhs.negate();
      lhs.axpy(-1, rhs);
      if (!a.relations().contains(lhs))
        return CheckResult::fail("coboundary at " + g.label(x) + "*alpha differs for generator " + std::to_string(j));
    }
  }
  return CheckResult::pass();
}

CheckResult check_dd_zero(const SignedModel& m, int top) {
  for (int n = 2; n <= std::min(top, m.top_degree()); ++n)
    for (std::size_t o = 0; o < m.num_orbits(n); ++o) {
      const Tag& y = m.rep(n, o);
      FormalSum dd;
      for (auto& [t, c] : m.boundary(n, y))
        for (auto& [u, e] : m.boundary(n - 1, t)) dd.emplace_back(u, c * e);
      FormalSum rest = normalize(m, dd);
      if (!rest.empty())
        return CheckResult::fail(m.name() + " d o d != 0 at " + tag_string(m.group(), y) + ": " +
                                 sum_string(m.group(), rest));
    }
  return CheckResult::pass();
}

}  // namespace ghl
