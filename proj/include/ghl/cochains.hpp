#pragma once

#include "ghl/complex.hpp"

namespace ghl {

/*
 * Inhomogeneous cochains C^n = A^{G^n}: one block of rank(A) generators per
 * n-tuple, tuples indexed with g_1 as the least significant digit.
 */
class FunctionCochains {
 public:
  FunctionCochains(const GModule& a, int top, std::size_t budget = kDefaultBudget);

  const GModule& module() const { return a_; }
  int top() const { return top_; }
  std::size_t tuples(int n) const;
  std::size_t index(const std::vector<int>& g) const;
  std::vector<int> tuple(int n, std::size_t idx) const;

  FpAbGroup group(int n) const;
  /// Face operator d^j : C^n -> C^{n+1}, 0 <= j <= n+1.
  IntMatrix face(int n, int j) const;
  /// Coboundary C^n -> C^{n+1} from the inhomogeneous formula.
  IntMatrix delta(int n) const;
  /// Involution tau_i on C^n, 1 <= i <= n.
  IntMatrix tau(int n, int i) const;

  /// Degrees 0..top; the coboundary out of top is built only when top + 1 fits the budget.
  ComplexOfFp complex() const;
  /// Per degree, the common fixed lattice of the tau_i (modulo relations).
  std::vector<Lattice> symmetric_lattices() const;

 private:
  // block matrix from a map (row tuple) -> list of (column tuple, coefficient matrix)
  GModule a_;
  int top_;
  std::size_t budget_;
};

/// psi^n : Hom_G(B_n, A) -> C^n, (psi f)(g_1..g_n) = f(1, g_1, g_1 g_2, ...). Needs a bar hom complex.
IntMatrix psi_matrix(const HomComplex& k, const FunctionCochains& c, int n);

/// Operator f -> f o (swap of positions i, i+1) on a bar hom complex in degree n, 0 <= i < n.
IntMatrix swap_operator(const HomComplex& k, int n, int i);

/// Inside the bar hom complex: skew functions, optionally also vanishing on tuples with a repeat.
std::vector<Lattice> skew_lattices(const HomComplex& k, bool vanish_on_repeats);

/// Lattice {x : M_k x in rel for all k} for a family of square operators.
Lattice common_kernel_mod(const std::vector<IntMatrix>& ops, const Lattice& rel);

}  // namespace ghl
