#pragma once

#include "ghl/int_matrix.hpp"

namespace ghl {

struct SmithForm {
  IntMatrix s;
  IntMatrix p;
  IntMatrix q;
  IntMatrix p_inv;
  std::vector<Integer> diagonal;  // length min(rows, cols), nonnegative, divisibility chain
};

/// s = p*m*q with p, q unimodular.  Transforms are skipped when with_transforms is false.
SmithForm snf(const IntMatrix& m, bool with_transforms = true);

/// Canonical invariant factors of Z^gens / (column span of rel): 1s dropped, 0s last.
std::vector<Integer> cokernel_invariants(const IntMatrix& rel);

/// Sorts a list of cyclic orders into canonical invariant factors (merging via SNF).
std::vector<Integer> canonical_factors(const std::vector<Integer>& cyclic_orders);

}  // namespace ghl
