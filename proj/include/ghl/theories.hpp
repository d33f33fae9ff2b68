#pragma once

#include "ghl/cochains.hpp"
#include "ghl/homology.hpp"

namespace ghl {

enum class Theory {
  ClassicalHomology,
  ClassicalCohomology,
  SymHomology,
  SymCohomology,
  ExtHomology,
  ExtCohomology,
  SLambda,
  CLambda,
  CS,
};

const std::vector<Theory>& all_theories();
std::string theory_name(Theory t);
Theory parse_theory(const std::string& s);
bool is_homology(Theory t);
/// Default top of the degree window.
int default_window_top(Theory t, const FiniteGroup& g);

/* K (bar), KS (skew quotient) and K_lambda (inside KS) with their inclusions. */
struct CochainTower {
  HomComplex k, ks;
  Subcomplex kl;                   // inside ks
  std::vector<IntMatrix> ks_in_k;  // KS -> K
  std::vector<IntMatrix> kl_in_k;  // K_lambda -> K
};
CochainTower cochain_tower(const GModule& a, int top, std::size_t budget = kDefaultBudget);

/// Complex whose degree-n (co)homology is the theory, built far enough to compute degree n.
ComplexOfFp theory_complex(Theory t, const GModule& a, int n, std::size_t budget = kDefaultBudget);
std::vector<Integer> theory_factors(Theory t, const GModule& a, int n, std::size_t budget = kDefaultBudget);

/// Exterior cohomology through K_lambda inside the skew model (the function route).
std::vector<Integer> ext_cohomology_via_functions(const GModule& a, int n, std::size_t budget = kDefaultBudget);

}  // namespace ghl
