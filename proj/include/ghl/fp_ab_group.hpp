#pragma once

#include <memory>

#include "ghl/lattice.hpp"
#include "ghl/smith.hpp"

namespace ghl {

/*
 * Z^k modulo the column span of a k x l matrix, reduced by cancelling unit
 * entries and then a dense Smith form on what is left.  Gives the invariant
 * factors plus, on request, a retraction Z^k -> Z^g onto the canonical
 * generators and a section back.
 */
class Cokernel {
 public:
  Cokernel(std::size_t k, const std::vector<SparseVec>& rel_cols, bool with_maps);

  const std::vector<Integer>& orders() const { return orders_; }  // one per output generator
  /// canonical generator j as a vector of Z^k
  const std::vector<SparseVec>& section() const { return section_; }
  SparseVec retract(const SparseVec& x) const;

 private:
  struct Subst {
    std::size_t row;
    Integer unit;
    SparseVec col;
  };
  std::size_t k_;
  std::vector<Subst> subst_;
  std::vector<std::size_t> core_rows_;
  std::vector<long> core_pos_;
  IntMatrix p_;
  std::vector<std::size_t> kept_;
  std::vector<Integer> orders_;
  std::vector<SparseVec> section_;
};

/* Finitely presented abelian group Z^gens / relations. */
class FpAbGroup {
 public:
  FpAbGroup() = default;
  FpAbGroup(std::size_t gens, Lattice relations);

  static FpAbGroup free(std::size_t rank);
  static FpAbGroup trivial() { return free(0); }
  /// One generator per entry with relation order*e_i (0 = free).
  static FpAbGroup cyclic_sum(const std::vector<Integer>& orders);
  static FpAbGroup uniform(std::size_t gens, const Integer& m);

  std::size_t gens() const { return gens_; }
  const Lattice& relations() const { return rel_; }
  const std::vector<Integer>& invariant_factors() const { return *factors_; }
  bool is_trivial() const { return factors_->empty(); }
  /// m when the relations are exactly m*Z^gens (m = 0 for free groups).
  bool uniform_order(Integer* m) const { return rel_.is_uniform(m); }

  bool is_zero(const SparseVec& v) const { return rel_.contains(v); }
  bool equal(const SparseVec& a, const SparseVec& b) const;
  bool isomorphic(const FpAbGroup& o) const { return invariant_factors() == o.invariant_factors(); }

  /// Same generators, extra relations.
  FpAbGroup quotient_by(const std::vector<SparseVec>& extra) const;

  std::string describe() const;

 private:
  std::size_t gens_ = 0;
  Lattice rel_{0};
  std::shared_ptr<const std::vector<Integer>> factors_ = std::make_shared<std::vector<Integer>>();
};

std::string describe_factors(const std::vector<Integer>& f);

class FpHom {
 public:
  FpHom(FpAbGroup src, FpAbGroup dst, IntMatrix m);

  const FpAbGroup& source() const { return src_; }
  const FpAbGroup& target() const { return dst_; }
  const IntMatrix& matrix() const { return m_; }

  SparseVec apply(const SparseVec& v) const { return m_ * v; }
  bool is_zero() const;
  bool equals(const FpHom& o) const;
  FpHom compose_after(const FpHom& first) const;  // this o first

  /// Lattice of source vectors mapping into the target relations (contains source relations).
  Lattice kernel() const;
  /// Image plus target relations, in target generator space.
  Lattice image() const;
  bool injective() const;
  bool surjective() const;

 private:
  FpAbGroup src_, dst_;
  IntMatrix m_;
};

FpHom induced_hom(const IntMatrix& f, const FpAbGroup& src, const FpAbGroup& dst);

struct SubquotientResult {
  FpAbGroup group;
  IntMatrix section;  // ambient x group.gens()
  std::shared_ptr<const Cokernel> coker;
  Lattice numerator;
  /// Class of a numerator vector in group coordinates.
  SparseVec retract(const SparseVec& v) const;
};

SubquotientResult subquotient(std::size_t ambient, const Lattice& numerator, const Lattice& denominator);

}  // namespace ghl
