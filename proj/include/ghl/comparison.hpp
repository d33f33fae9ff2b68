#pragma once

#include "ghl/complex.hpp"

namespace ghl {

struct CheckResult {
  bool ok = true;
  std::string witness;  // first counterexample when !ok
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

/// Formal sum with equal tags merged and zero terms dropped (tags compared exactly).
FormalSum collect(const FormalSum& s);
FormalSum scaled(const FormalSum& s, const Integer& c);
/// Linear extension of f.
FormalSum apply_linear(const std::function<FormalSum(const Tag&)>& f, const FormalSum& s);

/// Projection B_n -> Lambda_n: a tuple goes to its sorted wedge with parity sign, or 0.
FormalSum lambda_map(const Tag& t);
/// Alternating sum over all orderings of t (B_n -> B_n).
FormalSum mu_map(const Tag& t);
/// Lambda_n -> B_n, wedge to the alternating sum of its orderings.
FormalSum nu_map(const Tag& wedge);

FormalSum bar_boundary(const Tag& t);
/// Exterior boundary with faces re-sorted to canonical wedges.
FormalSum ext_boundary(const FiniteGroup& g, const Tag& wedge);

std::string tag_string(const FiniteGroup& g, const Tag& t);

/// The four comparison-map identities in degree n, on tuples starting with the identity.
CheckResult check_comparison_identities(const FiniteGroup& g, int n);

/// Top exterior boundary d(alpha) against sum sign(kappa(g)) g beta, read in the model's orbit basis.
CheckResult check_top_boundary(const ExtModel& m);

/// Top-degree exterior coboundary evaluated at g alpha against the closed form, for a left module A.
CheckResult check_top_coboundary(std::shared_ptr<const ExtModel> m, const GModule& a);

/// d o d = 0 in the module M_*: boundaries of boundaries of representatives, up to degree top.
CheckResult check_dd_zero(const SignedModel& m, int top);

}  // namespace ghl
