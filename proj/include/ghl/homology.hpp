#pragma once

#include "ghl/complex.hpp"

namespace ghl {

/* H_n of a complex with cycle representatives and a classifier for cycles. */
struct Homology {
  int degree = 0;
  FpAbGroup group;   // canonical: one generator per invariant factor
  IntMatrix section; // complex generators x group generators
  SubquotientResult sq;
  /// Class of a cycle, in group coordinates.
  SparseVec classify(const SparseVec& cycle) const { return sq.retract(cycle); }
};

Homology homology(const ComplexOfFp& c, int n);

/// Invariant factors of H_n; uses unit-pivot cancellation when all relations are uniform.
std::vector<Integer> homology_factors(const ComplexOfFp& c, int n);

/// Map H_n(src) -> H_n(dst) induced by the chain map component f_n.
FpHom induced_on_homology(const Homology& src, const Homology& dst, const IntMatrix& f);

/*
 * Connecting map of 0 -> sub -> whole -> quot -> 0 where quot shares the
 * generators of whole.  Goes H_n(quot) -> H_{n-1}(sub) for chains and
 * H^n(quot) -> H^{n+1}(sub) for cochains.
 */
FpHom connecting_hom(const ComplexOfFp& whole, const std::vector<IntMatrix>& incl, const Homology& hq,
                     const Homology& hs_next);

/// im(f) == ker(g) inside the middle group (f: A -> B, g: B -> C).
bool exact_at(const FpHom& f, const FpHom& g);

struct LongExactSequence {
  // per degree in the window: H(sub) -> H(whole) -> H(quot) -> H(sub, next degree)
  std::vector<Homology> h_sub, h_whole, h_quot;
  std::vector<FpHom> i_star, p_star, connecting;
  int lo = 0, hi = 0, step = 1;
  /// Exactness at every interior position of the window.
  bool exact(std::string* where = nullptr) const;
};

/// Cohomology (or homology) long exact sequence over degrees lo..hi.
LongExactSequence long_exact_sequence(const ComplexOfFp& sub, const ComplexOfFp& whole, const ComplexOfFp& quot,
                                      const std::vector<IntMatrix>& incl, int lo, int hi);

}  // namespace ghl
