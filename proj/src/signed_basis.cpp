#include "ghl/signed_basis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ghl {

int sort_with_sign(Tag& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

bool has_repeat(const Tag& sorted) {
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

SignedModel::SignedModel(FiniteGroup g, int max_degree, std::size_t budget)
    : g_(std::move(g)), max_degree_(max_degree), budget_(budget) {
  if (max_degree < 0) throw Error("negative maximal degree");
  // keys of tags up to one past the top degree must fit in 64 bits
  long double cap = 1;
  for (int i = 0; i < max_degree + 2; ++i) cap *= g_.order();
  if (cap > 1.8e19L) throw BudgetError("tags of degree " + std::to_string(max_degree) + " are too long to index");
}

std::uint64_t SignedModel::key(const Tag& t) const {
  std::uint64_t k = 0;
  for (auto it = t.rbegin(); it != t.rend(); ++it) k = k * static_cast<std::uint64_t>(g_.order()) + static_cast<std::uint64_t>(*it);
  return k * 32 + t.size();
}

Tag SignedModel::act(int g, const Tag& t) const {
  Tag r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = g_.mul(g, t[i]);
  return r;
}

std::size_t SignedModel::num_orbits(int n) const {
  if (n < 0 || n > top_degree()) return 0;
  if (n > max_degree_) throw Error("degree " + std::to_string(n) + " was not built for the " + name() + " model");
  return deg_[n].reps.size();
}

const Tag& SignedModel::rep(int n, std::size_t o) const { return deg_.at(n).reps.at(o); }

const std::vector<std::pair<int, int>>& SignedModel::stabilizer(int n, std::size_t o) const {
  return deg_.at(n).stab.at(o);
}

Placement SignedModel::place(int n, const Tag& t) const {
  if (n < 0 || n > top_degree()) return {};
  auto [c, s] = canonical(t);
  if (s == 0) return {};
  if (n > max_degree_) throw Error("degree " + std::to_string(n) + " was not built for the " + name() + " model");
  auto it = deg_[n].where.find(key(c));
  if (it == deg_[n].where.end()) throw Error("tag outside the " + name() + " model");
  Placement p = it->second;
  p.sign *= s;
  return p;
}

void SignedModel::build_orbits() {
  int top = std::min(max_degree_, top_degree());
  deg_.assign(static_cast<std::size_t>(max_degree_) + 1, {});
  for (int n = 0; n <= top; ++n) {
    std::vector<Tag> tags = enumerate(n);
    if (tags.size() > budget_ * static_cast<std::size_t>(g_.order()))
      throw BudgetError(name() + " model in degree " + std::to_string(n) + " exceeds the budget");
    Degree& d = deg_[n];
    for (const Tag& c : tags) {
      if (d.where.count(key(c))) continue;
      std::size_t o = d.reps.size();
      d.reps.push_back(c);
      d.stab.emplace_back();
      for (int g = 0; g < g_.order(); ++g) {
        auto [img, s] = canonical(act(g, c));
        std::uint64_t k = key(img);
        if (!d.where.count(k)) d.where[k] = Placement{o, g, s};
        if (img == c) d.stab.back().emplace_back(g, s);
      }
      if (torsion(c) == 2) d.stab.back().emplace_back(0, -1);
    }
    if (d.reps.size() > budget_)
      throw BudgetError(name() + " model in degree " + std::to_string(n) + " exceeds the budget");
  }
}

// ---- bar

BarModel::BarModel(FiniteGroup g, int max_degree, std::size_t budget) : SignedModel(std::move(g), max_degree, budget) {
  deg_.assign(static_cast<std::size_t>(max_degree_) + 1, {});
  std::size_t n_el = static_cast<std::size_t>(g_.order());
  std::size_t count = 1;
  for (int n = 0; n <= max_degree_; ++n) {
    if (count > budget_) throw BudgetError("bar model in degree " + std::to_string(n) + " exceeds the budget");
    Degree& d = deg_[n];
    d.reps.reserve(count);
    for (std::size_t o = 0; o < count; ++o) {
      Tag t(static_cast<std::size_t>(n) + 1, 0);
      std::size_t x = o;
      for (int i = 1; i <= n; ++i, x /= n_el) t[i] = static_cast<int>(x % n_el);
      d.reps.push_back(std::move(t));
    }
    d.stab.assign(count, {{0, 1}});
    count *= n_el;
  }
}

std::size_t BarModel::orbit_of_tail(const Tag& rep) const {
  std::size_t o = 0;
  for (std::size_t i = rep.size(); i-- > 1;) o = o * static_cast<std::size_t>(g_.order()) + static_cast<std::size_t>(rep[i]);
  return o;
}

Placement BarModel::place(int n, const Tag& t) const {
  if (n < 0) return {};
  if (n > max_degree_) throw Error("degree " + std::to_string(n) + " was not built for the bar model");
  int g = t.at(0);
  return Placement{orbit_of_tail(act(g_.inv(g), t)), g, 1};
}

FormalSum BarModel::boundary(int n, const Tag& t) const {
  FormalSum out;
  if (n <= 0) return out;
  for (int i = 0; i <= n; ++i) {
    Tag f = t;
    f.erase(f.begin() + i);
    out.emplace_back(std::move(f), Integer(i % 2 ? -1 : 1));
  }
  return out;
}

// ---- exterior

ExtModel::ExtModel(FiniteGroup g, int max_degree, bool scaled, std::size_t budget)
    : SignedModel(std::move(g), max_degree, budget), scaled_(scaled) {
  build_orbits();
}

std::pair<Tag, int> ExtModel::canonical(const Tag& t) const {
  Tag c = t;
  int s = sort_with_sign(c);
  if (has_repeat(c)) return {c, 0};
  return {c, s};
}

std::vector<Tag> ExtModel::enumerate(int n) const {
  std::vector<Tag> out;
  int k = n + 1, total = g_.order();
  if (k > total) return out;
  Tag t(k);
  std::iota(t.begin(), t.end(), 0);
  for (;;) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == total - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

FormalSum ExtModel::boundary(int n, const Tag& t) const {
  FormalSum out;
  if (n <= 0) return out;
  for (int i = 0; i <= n; ++i) {
    Tag f = t;
    f.erase(f.begin() + i);
    int s = i % 2 ? -1 : 1;
    if (n == mut_degree_ && i == mut_face_) s = -s;
    out.emplace_back(std::move(f), Integer(scaled_ ? s * (n + 1) : s));
  }
  return out;
}

// ---- symmetric, computed inside the bar resolution

SymDirectModel::SymDirectModel(FiniteGroup g, int max_degree, std::size_t budget)
    : ExtModel(std::move(g), max_degree, false, budget) {}

FormalSum SymDirectModel::boundary(int n, const Tag& t) const {
  FormalSum out;
  if (n <= 0) return out;
  auto [c, s0] = canonical(t);
  if (s0 == 0) return out;

  std::map<std::uint64_t, std::pair<Tag, Integer>> acc;
  auto add = [&](const Tag& x, const Integer& v) {
    auto [it, fresh] = acc.try_emplace(key(x), x, Integer(0));
    it->second.second += v;
  };
  // mu(c) = sum over permutations of sgn(pi) c.pi
  auto expand = [&](const Tag& base, const Integer& coef, bool take_faces) {
    std::vector<int> perm(base.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Tag x(base.size());
      for (std::size_t i = 0; i < perm.size(); ++i) x[i] = base[perm[i]];
      Tag tmp(perm.begin(), perm.end());
      int sg = sort_with_sign(tmp);
      if (!take_faces) {
        add(x, sg * coef);
        continue;
      }
      for (std::size_t i = 0; i < x.size(); ++i) {
        Tag f = x;
        f.erase(f.begin() + static_cast<long>(i));
        add(f, (i % 2 ? -sg : sg) * coef);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  expand(c, Integer(s0), true);

  // coefficient of mu(S) is the coefficient of the increasing tuple S
  for (auto& [k, tv] : acc) {
    const Tag& x = tv.first;
    if (tv.second != 0 && std::is_sorted(x.begin(), x.end()) && !has_repeat(x)) out.emplace_back(x, tv.second);
  }
  for (auto& [x, v] : out) expand(x, -v, false);
  for (auto& [k, tv] : acc)
    if (tv.second != 0) throw StructureError("symmetric boundary leaves the symmetric subcomplex in degree " + std::to_string(n));
  return out;
}

// ---- skew quotient

SkewModel::SkewModel(FiniteGroup g, int max_degree, std::size_t budget)
    : SignedModel(std::move(g), max_degree, budget) {
  build_orbits();
}

std::pair<Tag, int> SkewModel::canonical(const Tag& t) const {
  Tag c = t;
  int s = sort_with_sign(c);
  return {c, s};
}

int SkewModel::torsion(const Tag& c) const { return has_repeat(c) ? 2 : 0; }

std::vector<Tag> SkewModel::enumerate(int n) const {
  std::vector<Tag> out;
  int k = n + 1, total = g_.order();
  Tag t(k, 0);
  for (;;) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == total - 1) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[i];
  }
  return out;
}

FormalSum SkewModel::boundary(int n, const Tag& t) const {
  FormalSum out;
  if (n <= 0) return out;
  for (int i = 0; i <= n; ++i) {
    Tag f = t;
    f.erase(f.begin() + i);
    out.emplace_back(std::move(f), Integer(i % 2 ? -1 : 1));
  }
  return out;
}

FormalSum normalize(const SignedModel& m, const FormalSum& s) {
  std::map<std::uint64_t, std::pair<Tag, Integer>> acc;
  for (auto& [t, v] : s) {
    auto [c, sg] = m.canonical(t);
    if (sg == 0 || v == 0) continue;
    auto [it, fresh] = acc.try_emplace(m.key(c), c, Integer(0));
    it->second.second += sg * v;
  }
  FormalSum out;
  for (auto& [k, tv] : acc) {
    Integer v = tv.second;
    if (m.torsion(tv.first) == 2) v = v % 2;
    if (v != 0) out.emplace_back(tv.first, v);
  }
  return out;
}

}  // namespace ghl
