#pragma once

#include "ghl/fp_ab_group.hpp"
#include "ghl/groups.hpp"

namespace ghl {

enum class Side { Left, Right };

/*
 * Finitely generated G-module: Z^r / R with one integer matrix per group
 * element acting on generator coordinates.  Left: rho(g) rho(h) = rho(gh).
 * Right (a.g = rho(g) a): rho(g) rho(h) = rho(hg).
 */
class GModule {
 public:
  GModule(FiniteGroup g, FpAbGroup underlying, std::vector<IntMatrix> action, Side side);

  const FiniteGroup& group() const { return g_; }
  const FpAbGroup& underlying() const { return a_; }
  std::size_t rank() const { return a_.gens(); }
  const Lattice& relations() const { return a_.relations(); }
  const IntMatrix& act(int g) const { return action_.at(g); }
  Side side() const { return side_; }
  bool is_trivial_action() const;

  /// Same module seen from the other side: rho'(g) = rho(g^-1).
  GModule side_converted() const;
  GModule as_side(Side s) const { return s == side_ ? *this : side_converted(); }
  /// Restriction to a subgroup (same side).
  GModule restricted(const Subgroup& h) const;

  std::string describe() const { return description_; }
  void set_description(std::string d) { description_ = std::move(d); }

 private:
  FiniteGroup g_;
  FpAbGroup a_;
  std::vector<IntMatrix> action_;
  Side side_;
  std::string description_;
};

GModule trivial_module(const FiniteGroup& g, const FpAbGroup& base);
GModule trivial_z(const FiniteGroup& g);
GModule trivial_zn(const FiniteGroup& g, long n);
GModule regular_module(const FiniteGroup& g, Side side);
GModule augmentation_ideal(const FiniteGroup& g, Side side);

/// trivial:Z, trivial:Z/N, regular, augideal (file: handled by the caller).
GModule module_from_spec(const FiniteGroup& g, const std::string& spec, Side side);

FpAbGroup invariants(const GModule& a);
FpAbGroup coinvariants(const GModule& a);

/* Element of the integral group ring. */
struct GroupRingElement {
  std::vector<Integer> coeff;  // indexed by group element

  static GroupRingElement norm(const FiniteGroup& g);
  static GroupRingElement signed_norm(const FiniteGroup& g);  // sum of cayley_sign(g) g
  static GroupRingElement basis(const FiniteGroup& g, int element);

  /// Matrix of the action of this element on A (sum of c_g rho(g)).
  IntMatrix on(const GModule& a) const;
};

}  // namespace ghl
