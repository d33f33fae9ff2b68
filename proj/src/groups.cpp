#include "ghl/groups.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace ghl {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : n_(static_cast<int>(table.size())), labels_(std::move(labels)) {
  if (n_ == 0) throw Error("group table is empty");
  if (labels_.empty())
    for (int i = 0; i < n_; ++i) labels_.push_back("g" + std::to_string(i));
  if (static_cast<int>(labels_.size()) != n_) throw Error("label count does not match group order");
  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(table[i].size()) != n_) throw Error("group table is not square");
    for (int j = 0; j < n_; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n_) throw Error("group table entry out of range");
      table_[i * n_ + j] = v;
    }
  }
  for (int i = 0; i < n_; ++i)
    if (mul(0, i) != i || mul(i, 0) != i) throw Error("element 0 is not the identity (witness " + std::to_string(i) + ")");
  for (int i = 0; i < n_; ++i) {
    std::vector<char> row(n_, 0), col(n_, 0);
    for (int j = 0; j < n_; ++j) {
      if (row[mul(i, j)]++ || col[mul(j, i)]++)
        throw Error("group table is not a latin square at element " + std::to_string(i));
    }
  }
  inv_.assign(n_, -1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (mul(i, j) == 0) inv_[i] = j;
  auto check = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      std::ostringstream os;
      os << "group table is not associative: witness (" << a << ", " << b << ", " << c << ")";
      throw Error(os.str());
    }
  };
  if (n_ <= 64) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> d(0, n_ - 1);
    for (int t = 0; t < 200000; ++t) check(d(rng), d(rng), d(rng));
  }
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t[i][j] = mul(i, j);
  return t;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::find_label(const std::string& l) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == l) return i;
  return -1;
}

FiniteGroup FiniteGroup::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_ || perm[0] != 0) throw Error("relabeling must fix the identity");
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  std::vector<std::string> l(n_);
  for (int i = 0; i < n_; ++i) {
    l[perm[i]] = labels_[i];
    for (int j = 0; j < n_; ++j) t[perm[i]][perm[j]] = perm[mul(i, j)];
  }
  return FiniteGroup(std::move(t), std::move(l));
}

namespace {

std::string power_label(const std::string& x, int k) {
  if (k == 0) return "1";
  if (k == 1) return x;
  return x + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) {
    l.push_back(power_label("t", i));
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(t), std::move(l));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw Error("dihedral parameter must be positive");
  int N = 2 * n;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> l(N);
  // index i + n*j stands for r^i s^j
  for (int a = 0; a < N; ++a) {
    int i = a % n, j = a / n;
    l[a] = j ? (i ? power_label("r", i) + "s" : "s") : power_label("r", i);
    for (int b = 0; b < N; ++b) {
      int k = b % n, m = b / n;
      int r = ((j ? i - k : i + k) % n + n) % n;
      t[a][b] = r + n * ((j + m) % 2);
    }
  }
  return FiniteGroup(std::move(t), std::move(l));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw Error("symmetric group degree must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  int N = static_cast<int>(perms.size());
  auto index = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> l;
  for (int a = 0; a < N; ++a) {
    std::string s = "[";
    for (int x = 0; x < n; ++x) s += (x ? "," : "") + std::to_string(perms[a][x] + 1);
    l.push_back(s + "]");
    for (int b = 0; b < N; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index(c);
    }
  }
  return FiniteGroup(std::move(t), std::move(l));
}

FiniteGroup klein_four() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return FiniteGroup(std::move(t), {"1", "a", "b", "ab"});
}

FiniteGroup quaternion_group() {
  // units 1,i,j,k with sign: index = 2*unit + (negative ? 1 : 0)
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int u = a / 2, v = b / 2;
      int s = unit_sign[u][v] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      t[a][b] = 2 * unit_mul[u][v] + (s < 0 ? 1 : 0);
    }
  return FiniteGroup(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int na = a.order(), nb = b.order(), N = na * nb;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> l(N);
  for (int x = 0; x < N; ++x) {
    l[x] = "(" + a.label(x % na) + "," + b.label(x / na) + ")";
    for (int y = 0; y < N; ++y) t[x][y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  }
  return FiniteGroup(std::move(t), std::move(l));
}

FiniteGroup group_from_spec(const std::string& spec) {
  auto num = [&](const std::string& prefix) -> int {
    std::string rest = spec.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad group specifier: " + spec);
    return std::stoi(rest);
  };
  if (spec.rfind("cyclic:", 0) == 0) return cyclic_group(num("cyclic:"));
  if (spec.rfind("dihedral:", 0) == 0) return dihedral_group(num("dihedral:"));
  if (spec.rfind("sym:", 0) == 0) return symmetric_group(num("sym:"));
  if (spec == "klein4") return klein_four();
  if (spec == "q8") return quaternion_group();
  throw Error("unknown group specifier: " + spec);
}

std::vector<std::pair<std::string, FiniteGroup>> catalog_groups() {
  std::vector<std::pair<std::string, FiniteGroup>> c;
  for (int n = 2; n <= 6; ++n) c.emplace_back("cyclic:" + std::to_string(n), cyclic_group(n));
  c.emplace_back("klein4", klein_four());
  c.emplace_back("sym:3", symmetric_group(3));
  c.emplace_back("dihedral:4", dihedral_group(4));
  return c;
}

int cayley_sign(const FiniteGroup& g, int element) {
  // every cycle of h -> element*h has length ord(element)
  int k = g.element_order(element);
  int cycles = g.order() / k;
  return ((k - 1) * cycles) % 2 ? -1 : 1;
}

bool is_oriented(const FiniteGroup& g) {
  for (int i = 0; i < g.order(); ++i)
    if (cayley_sign(g, i) != 1) return false;
  return true;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t h = 0; h < elems.size(); ++h)
    for (int s : gens) {
      if (s < 0 || s >= g.order()) throw Error("generator out of range");
      int x = g.mul(elems[h], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

void check_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  std::vector<char> in(g.order(), 0);
  for (int x : h) {
    if (x < 0 || x >= g.order()) throw Error("subgroup element out of range");
    in[x] = 1;
  }
  if (!in[0]) throw Error("subgroup does not contain the identity");
  for (int a : h)
    for (int b : h)
      if (!in[g.mul(a, g.inv(b))])
        throw Error("not a subgroup: witness pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  check_subgroup(g, elements);
  Subgroup s;
  s.embed = elements;
  s.to_local.assign(g.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) s.to_local[elements[i]] = static_cast<int>(i);
  int k = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  std::vector<std::string> l;
  for (int i = 0; i < k; ++i) {
    l.push_back(g.label(elements[i]));
    for (int j = 0; j < k; ++j) t[i][j] = s.to_local[g.mul(elements[i], elements[j])];
  }
  s.group = FiniteGroup(std::move(t), std::move(l));
  return s;
}

CosetSystem::CosetSystem(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> covered(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps_.push_back(x);
    for (int e : h.embed) covered[g.mul(x, e)] = 1;
  }
  build(g, h);
}

CosetSystem::CosetSystem(const FiniteGroup& g, const Subgroup& h, std::vector<int> reps) : reps_(std::move(reps)) {
  build(g, h);
}

void CosetSystem::build(const FiniteGroup& g, const Subgroup& h) {
  bar_.assign(g.order(), -1);
  for (int c : reps_) {
    if (c < 0 || c >= g.order()) throw Error("coset representative out of range");
    if (h.to_local[c] >= 0 && c != 0) throw Error("the coset H must be represented by the identity");
    for (int e : h.embed) {
      int x = g.mul(c, e);
      if (bar_[x] != -1) throw Error("two representatives of the same coset: " + std::to_string(c));
      bar_[x] = c;
    }
  }
  for (int x = 0; x < g.order(); ++x)
    if (bar_[x] == -1) throw Error("coset representatives do not cover element " + std::to_string(x));
}

}  // namespace ghl
