#include "ghl/gmodule.hpp"

namespace ghl {

namespace {

bool congruent(const IntMatrix& a, const IntMatrix& b, const Lattice& rel) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SparseVec d = a.column(j);
    d.axpy(-1, b.column(j));
    if (!rel.contains(d)) return false;
  }
  return true;
}

}  // namespace

GModule::GModule(FiniteGroup g, FpAbGroup underlying, std::vector<IntMatrix> action, Side side)
    : g_(std::move(g)), a_(std::move(underlying)), action_(std::move(action)), side_(side) {
  int n = g_.order();
  std::size_t r = a_.gens();
  if (static_cast<int>(action_.size()) != n) throw Error("module needs one action matrix per group element");
  for (int x = 0; x < n; ++x) {
    if (action_[x].rows() != r || action_[x].cols() != r) throw Error("action matrix has wrong shape");
    for (auto& b : a_.relations().basis())
      if (!a_.relations().contains(action_[x] * b))
        throw Error("action of element " + g_.label(x) + " does not preserve the relations");
  }
  if (!congruent(action_[0], IntMatrix::identity(r), a_.relations()))
    throw Error("identity does not act trivially");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int prod = side_ == Side::Left ? g_.mul(x, y) : g_.mul(y, x);
      if (!congruent(action_[x] * action_[y], action_[prod], a_.relations()))
        throw Error("action is not compatible with the group table at (" + g_.label(x) + ", " + g_.label(y) + ")");
    }
}

bool GModule::is_trivial_action() const {
  for (int x = 0; x < g_.order(); ++x)
    if (!congruent(action_[x], IntMatrix::identity(rank()), relations())) return false;
  return true;
}

GModule GModule::side_converted() const {
  std::vector<IntMatrix> act;
  for (int x = 0; x < g_.order(); ++x) act.push_back(action_[g_.inv(x)]);
  GModule m(g_, a_, std::move(act), side_ == Side::Left ? Side::Right : Side::Left);
  m.description_ = description_;
  return m;
}

GModule GModule::restricted(const Subgroup& h) const {
  std::vector<IntMatrix> act;
  for (int e : h.embed) act.push_back(action_[e]);
  GModule m(h.group, a_, std::move(act), side_);
  m.description_ = description_;
  return m;
}

GModule trivial_module(const FiniteGroup& g, const FpAbGroup& base) {
  std::vector<IntMatrix> act(g.order(), IntMatrix::identity(base.gens()));
  GModule m(g, base, std::move(act), Side::Left);
  m.set_description("trivial:" + base.describe());
  return m;
}

GModule trivial_z(const FiniteGroup& g) {
  GModule m = trivial_module(g, FpAbGroup::free(1));
  m.set_description("trivial:Z");
  return m;
}

GModule trivial_zn(const FiniteGroup& g, long n) {
  if (n < 1) throw Error("trivial:Z/N needs N >= 1");
  GModule m = trivial_module(g, FpAbGroup::cyclic_sum({Integer(n)}));
  m.set_description("trivial:Z/" + std::to_string(n));
  return m;
}

GModule regular_module(const FiniteGroup& g, Side side) {
  int n = g.order();
  std::vector<IntMatrix> act;
  for (int x = 0; x < n; ++x) {
    IntMatrix m(n, n);
    for (int y = 0; y < n; ++y) m.set(side == Side::Right ? g.mul(y, x) : g.mul(x, y), y, 1);
    act.push_back(std::move(m));
  }
  GModule m(g, FpAbGroup::free(n), std::move(act), side);
  m.set_description("regular");
  return m;
}

GModule augmentation_ideal(const FiniteGroup& g, Side side) {
  // generator i-1 stands for g_i - e, i >= 1
  int n = g.order();
  std::size_t r = static_cast<std::size_t>(n - 1);
  auto d = [&](int x, IntMatrix& m, std::size_t col, int sign) {
    if (x != 0) m.add_to(static_cast<std::size_t>(x - 1), col, sign);
  };
  std::vector<IntMatrix> act;
  for (int x = 0; x < n; ++x) {
    IntMatrix m(r, r);
    for (int i = 1; i < n; ++i) {
      int prod = side == Side::Right ? g.mul(i, x) : g.mul(x, i);
      d(prod, m, static_cast<std::size_t>(i - 1), 1);
      d(x, m, static_cast<std::size_t>(i - 1), -1);
    }
    act.push_back(std::move(m));
  }
  GModule m(g, FpAbGroup::free(r), std::move(act), side);
  m.set_description("augideal");
  return m;
}

GModule module_from_spec(const FiniteGroup& g, const std::string& spec, Side side) {
  if (spec == "trivial:Z") return trivial_z(g);
  if (spec.rfind("trivial:Z/", 0) == 0) {
    std::string rest = spec.substr(10);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad module specifier: " + spec);
    return trivial_zn(g, std::stol(rest));
  }
  if (spec == "regular") return regular_module(g, side);
  if (spec == "augideal") return augmentation_ideal(g, side);
  throw Error("unknown module specifier: " + spec);
}

FpAbGroup invariants(const GModule& a) {
  std::size_t r = a.rank();
  int n = a.group().order();
  IntMatrix stacked(0, r);
  for (int x = 0; x < n; ++x) stacked = vstack(stacked, a.act(x) - IntMatrix::identity(r));
  // target lattice: relations repeated in every block
  std::vector<SparseVec> tgt;
  for (int x = 0; x < n; ++x)
    for (auto& b : a.relations().basis()) {
      std::vector<SparseVec::Entry> e;
      for (auto& [i, v] : b.entries()) e.emplace_back(i + r * x, v);
      tgt.emplace_back(std::move(e));
    }
  Lattice fixed = preimage_lattice(stacked, Lattice::span(r * n, tgt));
  return subquotient(r, fixed, a.relations()).group;
}

FpAbGroup coinvariants(const GModule& a) {
  std::size_t r = a.rank();
  std::vector<SparseVec> extra;
  for (int x = 0; x < a.group().order(); ++x) {
    IntMatrix d = a.act(x) - IntMatrix::identity(r);
    for (auto& c : d.columns()) extra.push_back(c);
  }
  return a.underlying().quotient_by(extra);
}

GroupRingElement GroupRingElement::norm(const FiniteGroup& g) {
  return GroupRingElement{std::vector<Integer>(g.order(), 1)};
}

GroupRingElement GroupRingElement::signed_norm(const FiniteGroup& g) {
  GroupRingElement e;
  for (int x = 0; x < g.order(); ++x) e.coeff.emplace_back(cayley_sign(g, x));
  return e;
}

GroupRingElement GroupRingElement::basis(const FiniteGroup& g, int element) {
  GroupRingElement e{std::vector<Integer>(g.order(), 0)};
  e.coeff.at(element) = 1;
  return e;
}

IntMatrix GroupRingElement::on(const GModule& a) const {
  IntMatrix m(a.rank(), a.rank());
  for (int x = 0; x < a.group().order(); ++x)
    if (coeff.at(x) != 0) m = m + coeff[x] * a.act(x);
  return m;
}

}  // namespace ghl
