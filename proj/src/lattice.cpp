#include "ghl/lattice.hpp"

#include <algorithm>

namespace ghl {

void Echelon::insert(SparseVec v, std::size_t tag) {
  if (!v.empty() && v.last_index() >= n_) throw Error("echelon insert out of range");
  SparseVec t = track_ ? SparseVec::unit(tag) : SparseVec();
  while (!v.empty()) {
    std::size_t p = v.last_index();
    auto it = piv_.find(p);
    if (it == piv_.end()) {
      if (v.last_value() < 0) {
        v.negate();
        t.negate();
      }
      piv_.emplace(p, Col{std::move(v), std::move(t)});
      return;
    }
    Col& c = it->second;
    Integer a = v.last_value();
    const Integer& b = c.v.last_value();
    if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
      Integer q = a / b;
      v.axpy(-q, c.v);
      if (track_) t.axpy(-q, c.t);
      continue;
    }
    Integer g, x, y;
    gcdext(g, x, y, b, a);
    Integer bg = b / g, ag = a / g;
    SparseVec nc = c.v.scaled(x);
    nc.axpy(y, v);
    SparseVec nv = v.scaled(bg);
    nv.axpy(-ag, c.v);
    if (track_) {
      SparseVec nct = c.t.scaled(x);
      nct.axpy(y, t);
      SparseVec nvt = t.scaled(bg);
      nvt.axpy(-ag, c.t);
      c.t = std::move(nct);
      t = std::move(nvt);
    }
    c.v = std::move(nc);
    v = std::move(nv);
  }
  if (track_) kernel_.push_back(std::move(t));
}

SparseVec Echelon::reduce(SparseVec v, SparseVec* combo) const {
  while (!v.empty()) {
    auto it = piv_.find(v.last_index());
    if (it == piv_.end()) return v;
    const Col& c = it->second;
    const Integer& a = v.last_value();
    const Integer& b = c.v.last_value();
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return v;
    Integer q = a / b;
    v.axpy(-q, c.v);
    if (combo) combo->axpy(q, c.t);
  }
  return v;
}

std::optional<SparseVec> Echelon::solve(const SparseVec& v) const {
  if (!track_) throw Error("echelon solve needs transform tracking");
  SparseVec combo;
  if (!reduce(v, &combo).empty()) return std::nullopt;
  return combo;
}

std::vector<SparseVec> Echelon::basis() const {
  std::vector<SparseVec> cols;
  for (auto& [p, c] : piv_) cols.push_back(c.v);
  for (std::size_t j = cols.size(); j-- > 0;) {
    std::size_t p = cols[j].last_index();
    const Integer& d = cols[j].last_value();
    for (std::size_t k = j + 1; k < cols.size(); ++k) {
      Integer e = cols[k].at(p);
      if (e == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), e.get_mpz_t(), d.get_mpz_t());
      if (q != 0) cols[k].axpy(-q, cols[j]);
    }
  }
  return cols;
}

Lattice Lattice::span(std::size_t ambient, const std::vector<SparseVec>& gens) {
  Lattice l(ambient);
  l.rebuild(gens);
  return l;
}

Lattice Lattice::column_span(const IntMatrix& m) { return span(m.rows(), m.columns()); }

Lattice Lattice::full(std::size_t ambient) {
  Lattice l(ambient);
  for (std::size_t i = 0; i < ambient; ++i) l.basis_.push_back(SparseVec::unit(i));
  return l;
}

void Lattice::rebuild(const std::vector<SparseVec>& gens) {
  Echelon e(n_);
  for (auto& g : gens) e.insert(g);
  basis_ = e.basis();
}

bool Lattice::contains(const SparseVec& v) const { return coordinates(v).has_value(); }

std::optional<SparseVec> Lattice::coordinates(const SparseVec& v) const {
  // basis_ is sorted by pivot (last index)
  SparseVec r = v;
  std::vector<SparseVec::Entry> out;
  while (!r.empty()) {
    std::size_t p = r.last_index();
    auto it = std::lower_bound(basis_.begin(), basis_.end(), p,
                               [](const SparseVec& c, std::size_t k) { return c.last_index() < k; });
    if (it == basis_.end() || it->last_index() != p) return std::nullopt;
    const Integer& b = it->last_value();
    if (!mpz_divisible_p(r.last_value().get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    Integer q = r.last_value() / b;
    r.axpy(-q, *it);
    out.emplace_back(static_cast<std::size_t>(it - basis_.begin()), q);
  }
  return SparseVec(std::move(out));
}

bool Lattice::contains(const Lattice& other) const { return !witness_outside(other).has_value(); }

std::optional<SparseVec> Lattice::witness_outside(const Lattice& other) const {
  for (auto& b : other.basis_)
    if (!contains(b)) return b;
  return std::nullopt;
}

Lattice Lattice::operator+(const Lattice& other) const {
  if (n_ != other.n_) throw Error("lattice sum ambient mismatch");
  std::vector<SparseVec> g = basis_;
  g.insert(g.end(), other.basis_.begin(), other.basis_.end());
  return span(n_, g);
}

bool Lattice::is_uniform(Integer* m) const {
  if (basis_.empty()) {
    if (m) *m = 0;
    return true;
  }
  if (basis_.size() != n_) return false;
  const Integer& d = basis_[0].last_value();
  for (auto& b : basis_)
    if (b.nnz() != 1 || b.last_value() != d) return false;
  if (m) *m = d;
  return true;
}

std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& m) {
  Echelon e(m.rows(), true);
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j), j);
  std::vector<SparseVec> h = e.basis();
  std::vector<SparseVec> u;
  for (auto& col : h) {
    auto x = e.solve(col);
    if (!x) throw StructureError("hnf: basis column not in span");
    u.push_back(*x);
  }
  for (auto& k : e.kernel()) {
    u.push_back(k);
    h.emplace_back();
  }
  // solved preimages differ from tracked ones by kernel vectors, so u stays unimodular
  return {IntMatrix::from_columns(m.rows(), std::move(h)), IntMatrix::from_columns(m.cols(), std::move(u))};
}

Lattice kernel_lattice(const IntMatrix& m) {
  Echelon e(m.rows(), true);
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j), j);
  return Lattice::span(m.cols(), e.kernel());
}

Lattice preimage_lattice(const IntMatrix& m, const Lattice& target) {
  if (target.ambient() != m.rows()) throw Error("preimage ambient mismatch");
  std::size_t c = m.cols();
  Echelon e(m.rows(), true);
  for (std::size_t j = 0; j < c; ++j) e.insert(m.column(j), j);
  for (std::size_t k = 0; k < target.rank(); ++k) e.insert(target.basis()[k], c + k);
  std::vector<SparseVec> proj;
  for (auto& k : e.kernel()) {
    std::vector<SparseVec::Entry> en;
    for (auto& [i, v] : k.entries())
      if (i < c) en.emplace_back(i, v);
    proj.emplace_back(std::move(en));
  }
  return Lattice::span(c, proj);
}

std::optional<SparseVec> solve(const IntMatrix& m, const SparseVec& v) {
  Echelon e(m.rows(), true);
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j), j);
  return e.solve(v);
}

std::optional<SparseVec> solve_mod(const IntMatrix& m, const SparseVec& v, const Lattice& rel) {
  std::size_t c = m.cols();
  Echelon e(m.rows(), true);
  for (std::size_t j = 0; j < c; ++j) e.insert(m.column(j), j);
  for (std::size_t k = 0; k < rel.rank(); ++k) e.insert(rel.basis()[k], c + k);
  auto x = e.solve(v);
  if (!x) return std::nullopt;
  std::vector<SparseVec::Entry> en;
  for (auto& [i, val] : x->entries())
    if (i < c) en.emplace_back(i, val);
  return SparseVec(std::move(en));
}

}  // namespace ghl
