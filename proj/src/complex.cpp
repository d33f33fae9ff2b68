#include "ghl/complex.hpp"

#include <map>

namespace ghl {

bool congruent_mod(const IntMatrix& a, const IntMatrix& b, const Lattice& rel) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SparseVec d = a.column(j);
    d.axpy(-1, b.column(j));
    if (!rel.contains(d)) return false;
  }
  return true;
}

// ---- ComplexOfFp

ComplexOfFp::ComplexOfFp(Variance v, std::vector<FpAbGroup> groups, std::vector<std::optional<IntMatrix>> out,
                         bool zero_beyond, bool check_now)
    : var_(v), groups_(std::move(groups)), out_(std::move(out)), zero_beyond_(zero_beyond) {
  if (out_.size() != groups_.size()) throw Error("complex needs one differential slot per degree");
  for (int n = 0; n <= top(); ++n) {
    if (!out_[n]) continue;
    int t = n + step();
    std::size_t rows = (t < 0 || t > top()) ? 0 : groups_[t].gens();
    if (out_[n]->cols() != groups_[n].gens() || out_[n]->rows() != rows)
      throw Error("differential out of degree " + std::to_string(n) + " has the wrong shape");
  }
  if (check_now) check();
}

const FpAbGroup& ComplexOfFp::group(int n) const {
  static const FpAbGroup zero = FpAbGroup::trivial();
  if (n < 0) return zero;
  if (n > top()) {
    if (zero_beyond_) return zero;
    throw Error("degree " + std::to_string(n) + " was not built");
  }
  return groups_[n];
}

bool ComplexOfFp::has_out(int n) const {
  if (n < 0) return true;
  if (n > top()) return zero_beyond_;
  if (out_[n]) return true;
  int t = n + step();
  return t < 0;
}

IntMatrix ComplexOfFp::out(int n) const {
  int t = n + step();
  if (n < 0 || n > top()) {
    if (!known(n)) throw Error("degree " + std::to_string(n) + " was not built");
    return IntMatrix(group(t).gens(), 0);
  }
  if (out_[n]) return *out_[n];
  if (t < 0 || (t > top() && zero_beyond_)) return IntMatrix(0, groups_[n].gens());
  throw Error("differential out of degree " + std::to_string(n) + " was not built");
}

void ComplexOfFp::check() const {
  for (int n = 0; n <= top(); ++n) {
    if (!has_out(n)) continue;
    int t = n + step();
    IntMatrix d = out(n);
    const Lattice& rel_t = group(t).relations();
    for (auto& r : groups_[n].relations().basis())
      if (!rel_t.contains(d * r))
        throw StructureError("differential out of degree " + std::to_string(n) + " does not respect relations");
    int tt = t + step();
    if (t < 0 || !known(t) || !has_out(t) || !known(tt)) continue;
    IntMatrix dd = out(t) * d;
    const Lattice& rel_tt = group(tt).relations();
    for (std::size_t j = 0; j < dd.cols(); ++j)
      if (!rel_tt.contains(dd.column(j)))
        throw StructureError("d o d is not zero out of degree " + std::to_string(n) + " (generator " +
                             std::to_string(j) + ")");
  }
}

// ---- helpers shared by the functors

namespace {

using BlockSum = std::map<std::size_t, IntMatrix>;

void accumulate(BlockSum& acc, std::size_t orbit, const Integer& c, const IntMatrix& rho) {
  auto it = acc.find(orbit);
  IntMatrix term = c * rho;
  if (it == acc.end())
    acc.emplace(orbit, std::move(term));
  else
    it->second = it->second + term;
}

// Sum of c * sign * rho(g) per orbit for a formal sum of tags in degree n.
BlockSum contract(const SignedModel& m, const GModule& a, int n, const FormalSum& s) {
  BlockSum acc;
  for (auto& [t, c] : s) {
    if (c == 0) continue;
    Placement p = m.place(n, t);
    if (p.sign == 0) continue;
    accumulate(acc, p.orbit, c * p.sign, a.act(p.g));
  }
  return acc;
}

using Triplets = std::vector<std::tuple<std::size_t, std::size_t, Integer>>;

HomBlocks make_blocks(const SignedModel& m, const GModule& a, int n) {
  HomBlocks hb;
  std::size_t r = a.rank();
  std::map<std::vector<std::pair<int, int>>, std::pair<Lattice, IntMatrix>> cache;
  std::size_t off = 0;
  std::size_t count = m.num_orbits(n);
  for (std::size_t o = 0; o < count; ++o) {
    std::vector<std::pair<int, int>> cons;
    for (auto& gs : m.stabilizer(n, o))
      if (gs != std::pair<int, int>{0, 1}) cons.push_back(gs);
    auto it = cache.find(cons);
    if (it == cache.end()) {
      Lattice l = Lattice::full(r);
      if (!cons.empty()) {
        IntMatrix stacked(0, r);
        std::vector<SparseVec> tgt;
        std::size_t k = 0;
        for (auto& [g, s] : cons) {
          stacked = vstack(stacked, a.act(g) - Integer(s) * IntMatrix::identity(r));
          for (auto& b : a.relations().basis()) {
            std::vector<SparseVec::Entry> e;
            for (auto& [i, v] : b.entries()) e.emplace_back(i + r * k, v);
            tgt.emplace_back(std::move(e));
          }
          ++k;
        }
        l = preimage_lattice(stacked, Lattice::span(r * k, tgt));
      }
      it = cache.emplace(cons, std::make_pair(l, l.basis_matrix())).first;
    }
    hb.offset.push_back(off);
    hb.lattice.push_back(it->second.first);
    hb.basis.push_back(it->second.second);
    off += it->second.first.rank();
  }
  hb.offset.push_back(off);
  return hb;
}

FpAbGroup block_group(const HomBlocks& hb, const GModule& a) {
  std::vector<SparseVec> rel;
  for (std::size_t o = 0; o + 1 < hb.offset.size(); ++o)
    for (auto& b : a.relations().basis()) {
      auto c = hb.lattice[o].coordinates(b);
      if (!c) throw StructureError("module relations are not admissible values");
      std::vector<SparseVec::Entry> e;
      for (auto& [i, v] : c->entries()) e.emplace_back(i + hb.offset[o], v);
      rel.emplace_back(std::move(e));
    }
  return FpAbGroup(hb.offset.back(), Lattice::span(hb.offset.back(), rel));
}

// Writes the columns of sum_o M_o B_o into the target block with the given lattice.
void emit(const BlockSum& acc, const HomBlocks& src, const Lattice& tgt_lat, std::size_t tgt_off, Triplets& out,
          const char* what) {
  for (auto& [o, mat] : acc) {
    IntMatrix prod = mat * src.basis[o];
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      if (prod.column(j).empty()) continue;
      auto c = tgt_lat.coordinates(prod.column(j));
      if (!c) throw StructureError(std::string(what) + " produces a value outside the admissible block");
      for (auto& [i, v] : c->entries()) out.emplace_back(tgt_off + i, src.offset[o] + j, v);
    }
  }
}

}  // namespace

// ---- tensor

TensorComplex tensor_over_G(const GModule& a_in, std::shared_ptr<const SignedModel> m, int top) {
  GModule a = a_in.as_side(Side::Right);
  if (!(a.group() == m->group())) throw Error("module and resolution use different groups");
  if (top < 0) throw Error("negative top degree");
  if (top > m->max_degree() && top <= m->top_degree()) throw Error("resolution was not built far enough");
  std::size_t r = a.rank();
  std::vector<FpAbGroup> groups;
  std::vector<std::optional<IntMatrix>> out;
  for (int n = 0; n <= top; ++n) {
    std::size_t count = m->num_orbits(n);
    std::vector<SparseVec> rel;
    for (std::size_t o = 0; o < count; ++o) {
      std::size_t off = o * r;
      auto shifted = [&](const SparseVec& v) {
        std::vector<SparseVec::Entry> e;
        for (auto& [i, x] : v.entries()) e.emplace_back(i + off, x);
        rel.emplace_back(std::move(e));
      };
      for (auto& b : a.relations().basis()) shifted(b);
      for (auto& [g, s] : m->stabilizer(n, o)) {
        if (g == 0 && s == 1) continue;
        IntMatrix d = a.act(g) - Integer(s) * IntMatrix::identity(r);
        for (auto& c : d.columns())
          if (!c.empty()) shifted(c);
      }
    }
    groups.emplace_back(count * r, Lattice::span(count * r, rel));
    if (n == 0) {
      out.emplace_back(IntMatrix(0, count * r));
      continue;
    }
    Triplets trip;
    for (std::size_t x = 0; x < count; ++x) {
      BlockSum acc = contract(*m, a, n - 1, m->boundary(n, m->rep(n, x)));
      for (auto& [o, mat] : acc)
        for (auto& [i, j, v] : mat.triplets()) trip.emplace_back(o * r + i, x * r + j, v);
    }
    out.emplace_back(IntMatrix::from_triplets(groups[n - 1].gens(), count * r, trip));
  }
  TensorComplex tc{ComplexOfFp(Variance::Chain, std::move(groups), std::move(out), top >= m->top_degree()),
                   std::move(m), a};
  return tc;
}

IntMatrix pushforward_matrix(const TensorComplex& src, const TensorComplex& dst, int n,
                             const std::function<FormalSum(const Tag&)>& phi) {
  std::size_t r = src.a.rank();
  if (dst.a.rank() != r) throw Error("pushforward needs the same module on both sides");
  std::size_t count = src.model->num_orbits(n);
  Triplets trip;
  for (std::size_t x = 0; x < count; ++x) {
    BlockSum acc = contract(*dst.model, dst.a, n, phi(src.model->rep(n, x)));
    for (auto& [o, mat] : acc)
      for (auto& [i, j, v] : mat.triplets()) trip.emplace_back(o * r + i, x * r + j, v);
  }
  return IntMatrix::from_triplets(dst.cx.group(n).gens(), src.cx.group(n).gens(), trip);
}

// ---- hom

HomComplex hom_over_G(std::shared_ptr<const SignedModel> m, const GModule& a_in, int top) {
  GModule a = a_in.as_side(Side::Left);
  if (!(a.group() == m->group())) throw Error("module and resolution use different groups");
  if (top < 0) throw Error("negative top degree");
  if (top > m->max_degree() && top <= m->top_degree()) throw Error("resolution was not built far enough");
  bool zero_beyond = top >= m->top_degree();

  std::vector<HomBlocks> blocks;
  for (int n = 0; n <= top; ++n) blocks.push_back(make_blocks(*m, a, n));
  std::vector<FpAbGroup> groups;
  for (int n = 0; n <= top; ++n) groups.push_back(block_group(blocks[n], a));

  std::vector<std::optional<IntMatrix>> out;
  for (int n = 0; n <= top; ++n) {
    if (n == top) {
      if (zero_beyond)
        out.emplace_back(IntMatrix(0, blocks[n].offset.back()));
      else
        out.emplace_back();
      continue;
    }
    const HomBlocks& tb = blocks[n + 1];
    Triplets trip;
    for (std::size_t y = 0; y + 1 < tb.offset.size(); ++y) {
      BlockSum acc = contract(*m, a, n, m->boundary(n + 1, m->rep(n + 1, y)));
      emit(acc, blocks[n], tb.lattice[y], tb.offset[y], trip, "coboundary");
    }
    out.emplace_back(IntMatrix::from_triplets(tb.offset.back(), blocks[n].offset.back(), trip));
  }
  HomComplex h{ComplexOfFp(Variance::Cochain, std::move(groups), std::move(out), zero_beyond), std::move(blocks),
               std::move(m), a};
  return h;
}

SparseVec value_at(const HomComplex& h, int n, const SparseVec& x, const Tag& t) {
  Placement p = h.model->place(n, t);
  if (p.sign == 0) return {};
  const HomBlocks& hb = h.blocks.at(n);
  std::size_t lo = hb.offset[p.orbit], hi = hb.offset[p.orbit + 1];
  std::vector<SparseVec::Entry> e;
  for (auto& [i, v] : x.entries())
    if (i >= lo && i < hi) e.emplace_back(i - lo, v);
  SparseVec v = h.a.act(p.g) * (hb.basis[p.orbit] * SparseVec(std::move(e)));
  if (p.sign < 0) v.negate();
  return v;
}

SparseVec from_rep_values(const HomComplex& h, int n, const std::vector<SparseVec>& values) {
  const HomBlocks& hb = h.blocks.at(n);
  if (values.size() + 1 != hb.offset.size()) throw Error("one value per orbit representative expected");
  std::vector<SparseVec::Entry> e;
  for (std::size_t o = 0; o < values.size(); ++o) {
    auto c = hb.lattice[o].coordinates(values[o]);
    if (!c) throw StructureError("value at representative " + std::to_string(o) + " violates the stabilizer condition");
    for (auto& [i, v] : c->entries()) e.emplace_back(hb.offset[o] + i, v);
  }
  return SparseVec(std::move(e));
}

IntMatrix pullback_matrix(const HomComplex& src, const HomComplex& dst, int n,
                          const std::function<FormalSum(const Tag&)>& phi) {
  const HomBlocks& sb = src.blocks.at(n);
  const HomBlocks& db = dst.blocks.at(n);
  Triplets trip;
  for (std::size_t y = 0; y + 1 < db.offset.size(); ++y) {
    BlockSum acc = contract(*src.model, src.a, n, phi(dst.model->rep(n, y)));
    emit(acc, sb, db.lattice[y], db.offset[y], trip, "pullback");
  }
  return IntMatrix::from_triplets(db.offset.back(), sb.offset.back(), trip);
}

IntMatrix twisted_pullback_matrix(const HomComplex& src, const HomComplex& dst, int n,
                                  const std::function<TwistedSum(const Tag&)>& phi) {
  const HomBlocks& sb = src.blocks.at(n);
  const HomBlocks& db = dst.blocks.at(n);
  Triplets trip;
  for (std::size_t y = 0; y + 1 < db.offset.size(); ++y) {
    BlockSum acc;
    for (auto& [m, t] : phi(dst.model->rep(n, y))) {
      Placement p = src.model->place(n, t);
      if (p.sign == 0) continue;
      accumulate(acc, p.orbit, Integer(p.sign), m * src.a.act(p.g));
    }
    emit(acc, sb, db.lattice[y], db.offset[y], trip, "twisted pullback");
  }
  return IntMatrix::from_triplets(db.offset.back(), sb.offset.back(), trip);
}

// ---- sub and quotient complexes

Subcomplex restrict_to(const ComplexOfFp& whole, const std::vector<Lattice>& sub) {
  int top = whole.top();
  if (static_cast<int>(sub.size()) != top + 1) throw Error("one sublattice per degree expected");
  std::vector<FpAbGroup> groups;
  std::vector<IntMatrix> incl;
  for (int n = 0; n <= top; ++n) {
    const Lattice& l = sub[n];
    if (!l.contains(whole.group(n).relations()))
      throw Error("sublattice in degree " + std::to_string(n) + " does not contain the relations");
    std::vector<SparseVec> rel;
    for (auto& b : whole.group(n).relations().basis()) rel.push_back(*l.coordinates(b));
    groups.emplace_back(l.rank(), Lattice::span(l.rank(), rel));
    incl.push_back(l.basis_matrix());
  }
  std::vector<std::optional<IntMatrix>> out;
  for (int n = 0; n <= top; ++n) {
    int t = n + whole.step();
    if (!whole.has_out(n)) {
      out.emplace_back();
      continue;
    }
    if (t < 0 || t > top) {
      out.emplace_back(IntMatrix(0, sub[n].rank()));
      continue;
    }
    IntMatrix img = whole.out(n) * incl[n];
    std::vector<SparseVec> cols;
    for (auto& c : img.columns()) {
      auto z = sub[t].coordinates(c);
      if (!z) throw StructureError("differential leaves the subcomplex out of degree " + std::to_string(n));
      cols.push_back(std::move(*z));
    }
    out.emplace_back(IntMatrix::from_columns(sub[t].rank(), std::move(cols)));
  }
  return Subcomplex{ComplexOfFp(whole.variance(), std::move(groups), std::move(out), whole.zero_beyond()),
                    std::move(incl)};
}

bool is_chain_map(const ComplexOfFp& src, const ComplexOfFp& dst, const std::vector<IntMatrix>& f) {
  int top = static_cast<int>(f.size()) - 1;
  for (int n = 0; n <= top; ++n) {
    int t = n + src.step();
    if (t < 0 || t > top || !src.has_out(n) || !dst.has_out(n)) continue;
    if (!congruent_mod(dst.out(n) * f[n], f[t] * src.out(n), dst.group(t).relations())) return false;
  }
  return true;
}

ComplexOfFp quotient_complex(const ComplexOfFp& sub, const ComplexOfFp& whole, const std::vector<IntMatrix>& incl) {
  int top = whole.top();
  if (sub.top() != top || static_cast<int>(incl.size()) != top + 1 || sub.variance() != whole.variance())
    throw Error("subcomplex and complex have different shapes");
  if (!is_chain_map(sub, whole, incl)) throw Error("inclusion is not a chain map");
  std::vector<FpAbGroup> groups;
  std::vector<std::optional<IntMatrix>> out;
  for (int n = 0; n <= top; ++n) {
    FpHom i(sub.group(n), whole.group(n), incl[n]);
    if (!i.injective()) throw Error("inclusion is not injective in degree " + std::to_string(n));
    groups.push_back(whole.group(n).quotient_by(incl[n].columns()));
    if (whole.has_out(n))
      out.emplace_back(whole.out(n));
    else
      out.emplace_back();
  }
  return ComplexOfFp(whole.variance(), std::move(groups), std::move(out), whole.zero_beyond());
}

ComplexOfFp cyclic_periodic_complex(const GModule& a_in, Variance v, int top) {
  int m = a_in.group().order();
  if (!(a_in.group() == cyclic_group(m))) throw Error("periodic complex needs the standard cyclic group");
  GModule a = a_in.as_side(v == Variance::Chain ? Side::Right : Side::Left);
  std::size_t r = a.rank();
  IntMatrix tm1 = a.act(m > 1 ? 1 : 0) - IntMatrix::identity(r);
  IntMatrix norm(r, r);
  for (int g = 0; g < m; ++g) norm = norm + a.act(g);
  std::vector<FpAbGroup> groups(static_cast<std::size_t>(top) + 1, a.underlying());
  std::vector<std::optional<IntMatrix>> out;
  for (int n = 0; n <= top; ++n) {
    if (v == Variance::Chain)
      out.emplace_back(n == 0 ? IntMatrix(0, r) : (n % 2 ? tm1 : norm));
    else if (n == top)
      out.emplace_back();
    else
      out.emplace_back(n % 2 ? norm : tm1);
  }
  return ComplexOfFp(v, std::move(groups), std::move(out), false);
}

}  // namespace ghl
