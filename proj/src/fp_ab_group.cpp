#include "ghl/fp_ab_group.hpp"

#include <sstream>

namespace ghl {

Cokernel::Cokernel(std::size_t k, const std::vector<SparseVec>& rel_cols, bool with_maps) : k_(k) {
  std::vector<SparseVec> cols = rel_cols;
  std::size_t l = cols.size();
  std::vector<bool> col_alive(l, true), row_alive(k, true);
  std::vector<std::vector<std::size_t>> row_cols(k);
  for (std::size_t j = 0; j < l; ++j)
    for (auto& [i, v] : cols[j].entries()) row_cols.at(i).push_back(j);

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j < l; ++j) {
      if (!col_alive[j] || cols[j].empty()) continue;
      std::size_t best = k;
      for (auto& [i, v] : cols[j].entries())
        if ((v == 1 || v == -1) && (best == k || row_cols[i].size() < row_cols[best].size())) best = i;
      if (best == k) continue;
      std::size_t i = best;
      Integer u = cols[j].at(i);
      std::vector<std::size_t> touched = std::move(row_cols[i]);
      row_cols[i].clear();
      for (auto x : touched) {
        if (x == j || !col_alive[x]) continue;
        Integer e = cols[x].at(i);
        if (e == 0) continue;
        cols[x].axpy(-e * u, cols[j]);
        for (auto& [r, v] : cols[j].entries())
          if (r != i) row_cols[r].push_back(x);
      }
      SparseVec keep;
      {
        std::vector<SparseVec::Entry> en;
        for (auto& [r, v] : cols[j].entries())
          if (r != i) en.emplace_back(r, v);
        keep = SparseVec(std::move(en));
      }
      if (with_maps) subst_.push_back({i, u, std::move(keep)});
      col_alive[j] = false;
      row_alive[i] = false;
      cols[j] = SparseVec();
      progress = true;
    }
    // drop stale duplicates so row counts stay meaningful
    if (progress)
      for (auto& rc : row_cols) {
        std::sort(rc.begin(), rc.end());
        rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
      }
  }

  core_pos_.assign(k, -1);
  for (std::size_t i = 0; i < k; ++i)
    if (row_alive[i]) {
      core_pos_[i] = static_cast<long>(core_rows_.size());
      core_rows_.push_back(i);
    }
  std::vector<SparseVec> core_cols;
  for (std::size_t j = 0; j < l; ++j) {
    if (!col_alive[j] || cols[j].empty()) continue;
    std::vector<SparseVec::Entry> en;
    for (auto& [i, v] : cols[j].entries()) en.emplace_back(static_cast<std::size_t>(core_pos_[i]), v);
    core_cols.emplace_back(std::move(en));
  }
  std::size_t kr = core_rows_.size();
  IntMatrix core = IntMatrix::from_columns(kr, std::move(core_cols));
  SmithForm sf = snf(core, with_maps);
  for (std::size_t i = 0; i < kr; ++i) {
    Integer d = i < sf.diagonal.size() ? sf.diagonal[i] : Integer(0);
    if (d == 1) continue;
    kept_.push_back(i);
    orders_.push_back(d);
  }
  if (with_maps) {
    p_ = sf.p;
    for (auto i : kept_) {
      std::vector<SparseVec::Entry> en;
      for (std::size_t r = 0; r < kr; ++r) {
        Integer v = sf.p_inv.at(r, i);
        if (v != 0) en.emplace_back(core_rows_[r], v);
      }
      section_.emplace_back(std::move(en));
    }
  }
}

SparseVec Cokernel::retract(const SparseVec& x) const {
  std::vector<Integer> d(k_);
  for (auto& [i, v] : x.entries()) d.at(i) = v;
  for (auto& s : subst_) {
    Integer c = d[s.row];
    if (c == 0) continue;
    Integer f = -c * s.unit;
    for (auto& [r, v] : s.col.entries()) d[r] += f * v;
    d[s.row] = 0;
  }
  std::vector<SparseVec::Entry> core;
  for (std::size_t r = 0; r < core_rows_.size(); ++r)
    if (d[core_rows_[r]] != 0) core.emplace_back(r, d[core_rows_[r]]);
  SparseVec y = p_ * SparseVec(std::move(core));
  std::vector<SparseVec::Entry> out;
  for (std::size_t t = 0; t < kept_.size(); ++t) {
    Integer v = y.at(kept_[t]);
    if (orders_[t] != 0) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), orders_[t].get_mpz_t());
    if (v != 0) out.emplace_back(t, v);
  }
  return SparseVec(std::move(out));
}

FpAbGroup::FpAbGroup(std::size_t gens, Lattice relations) : gens_(gens), rel_(std::move(relations)) {
  if (rel_.ambient() != gens_) throw Error("relation lattice ambient mismatch");
  std::vector<Integer> f;
  Integer m;
  bool diag = true;
  for (auto& b : rel_.basis())
    if (b.nnz() != 1) diag = false;
  if (rel_.is_uniform(&m)) {
    if (m != 1) f.assign(gens_, m);
  } else if (diag) {
    std::vector<Integer> orders(gens_, 0);
    for (auto& b : rel_.basis()) orders[b.last_index()] = b.last_value();
    f = canonical_factors(orders);
  } else {
    f = Cokernel(gens_, rel_.basis(), false).orders();
  }
  factors_ = std::make_shared<const std::vector<Integer>>(std::move(f));
}

FpAbGroup FpAbGroup::free(std::size_t rank) { return FpAbGroup(rank, Lattice(rank)); }

FpAbGroup FpAbGroup::cyclic_sum(const std::vector<Integer>& orders) {
  std::vector<SparseVec> rel;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) rel.push_back(SparseVec::unit(i, orders[i]));
  return FpAbGroup(orders.size(), Lattice::span(orders.size(), rel));
}

FpAbGroup FpAbGroup::uniform(std::size_t gens, const Integer& m) {
  return cyclic_sum(std::vector<Integer>(gens, m));
}

bool FpAbGroup::equal(const SparseVec& a, const SparseVec& b) const {
  SparseVec d = a;
  d.axpy(-1, b);
  return is_zero(d);
}

FpAbGroup FpAbGroup::quotient_by(const std::vector<SparseVec>& extra) const {
  return FpAbGroup(gens_, rel_ + Lattice::span(gens_, extra));
}

std::string describe_factors(const std::vector<Integer>& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << " + ";
    if (f[i] == 0)
      os << "Z";
    else
      os << "Z/" << f[i].get_str();
  }
  return os.str();
}

std::string FpAbGroup::describe() const { return describe_factors(invariant_factors()); }

FpHom::FpHom(FpAbGroup src, FpAbGroup dst, IntMatrix m) : src_(std::move(src)), dst_(std::move(dst)), m_(std::move(m)) {
  if (m_.rows() != dst_.gens() || m_.cols() != src_.gens())
    throw Error("homomorphism matrix has shape " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) +
                ", expected " + std::to_string(dst_.gens()) + "x" + std::to_string(src_.gens()));
  for (auto& r : src_.relations().basis())
    if (!dst_.is_zero(m_ * r)) {
      std::ostringstream os;
      os << "homomorphism not well defined: relation";
      for (auto& [i, v] : r.entries()) os << " " << i << ":" << v.get_str();
      os << " maps outside the target relations";
      throw Error(os.str());
    }
}

bool FpHom::is_zero() const {
  for (auto& c : m_.columns())
    if (!dst_.is_zero(c)) return false;
  return true;
}

bool FpHom::equals(const FpHom& o) const {
  if (m_.rows() != o.m_.rows() || m_.cols() != o.m_.cols()) return false;
  for (std::size_t j = 0; j < m_.cols(); ++j)
    if (!dst_.equal(m_.column(j), o.m_.column(j))) return false;
  return true;
}

FpHom FpHom::compose_after(const FpHom& first) const {
  if (first.dst_.gens() != src_.gens()) throw Error("composition shape mismatch");
  return FpHom(first.src_, dst_, m_ * first.m_);
}

Lattice FpHom::kernel() const { return preimage_lattice(m_, dst_.relations()); }

Lattice FpHom::image() const { return Lattice::column_span(m_) + dst_.relations(); }

bool FpHom::injective() const { return src_.relations().contains(kernel()); }

bool FpHom::surjective() const { return image().contains(Lattice::full(dst_.gens())); }

FpHom induced_hom(const IntMatrix& f, const FpAbGroup& src, const FpAbGroup& dst) { return FpHom(src, dst, f); }

SparseVec SubquotientResult::retract(const SparseVec& v) const {
  auto c = numerator.coordinates(v);
  if (!c) throw Error("vector is not in the numerator lattice");
  return coker->retract(*c);
}

SubquotientResult subquotient(std::size_t ambient, const Lattice& num, const Lattice& den) {
  if (num.ambient() != ambient || den.ambient() != ambient) throw Error("subquotient ambient mismatch");
  if (auto w = num.witness_outside(den)) {
    std::ostringstream os;
    os << "denominator not contained in numerator; witness";
    for (auto& [i, v] : w->entries()) os << " " << i << ":" << v.get_str();
    throw Error(os.str());
  }
  std::vector<SparseVec> coords;
  for (auto& d : den.basis()) coords.push_back(*num.coordinates(d));
  auto ck = std::make_shared<const Cokernel>(num.rank(), coords, true);
  SubquotientResult r;
  r.group = FpAbGroup::cyclic_sum(ck->orders());
  IntMatrix nb = num.basis_matrix();
  std::vector<SparseVec> sec;
  for (auto& s : ck->section()) sec.push_back(nb * s);
  r.section = IntMatrix::from_columns(ambient, std::move(sec));
  r.coker = ck;
  r.numerator = num;
  return r;
}

}  // namespace ghl
