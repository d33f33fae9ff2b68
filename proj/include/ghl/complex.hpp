#pragma once

#include <functional>
#include <optional>

#include "ghl/gmodule.hpp"
#include "ghl/signed_basis.hpp"

namespace ghl {

enum class Variance { Chain, Cochain };

/*
 * Complex of finitely presented abelian groups in degrees 0..top.  out(n) is
 * the differential leaving degree n (to n-1 for chains, n+1 for cochains),
 * as a matrix on generators.  Degrees below 0 are zero; degrees above top are
 * zero only when zero_beyond is set, otherwise they are simply not built.
 */
class ComplexOfFp {
 public:
  ComplexOfFp() = default;
  ComplexOfFp(Variance v, std::vector<FpAbGroup> groups, std::vector<std::optional<IntMatrix>> out, bool zero_beyond,
              bool check = true);

  Variance variance() const { return var_; }
  int top() const { return static_cast<int>(groups_.size()) - 1; }
  bool zero_beyond() const { return zero_beyond_; }
  int step() const { return var_ == Variance::Chain ? -1 : 1; }

  /// Whether degree n is known (built, or known to be zero).
  bool known(int n) const { return n < 0 || n <= top() || zero_beyond_; }
  const FpAbGroup& group(int n) const;
  /// Differential leaving degree n; a zero matrix when either end is zero.
  IntMatrix out(int n) const;
  bool has_out(int n) const;

  /// Re-runs the structural checks (well-defined differentials, d o d = 0).
  void check() const;

 private:
  Variance var_ = Variance::Chain;
  std::vector<FpAbGroup> groups_;
  std::vector<std::optional<IntMatrix>> out_;
  bool zero_beyond_ = false;
};

/* Orbit block data of a Hom_G complex in one degree. */
struct HomBlocks {
  std::vector<std::size_t> offset;  // first generator of each orbit block
  std::vector<Lattice> lattice;     // admissible values at the representative
  std::vector<IntMatrix> basis;     // lattice basis as columns (A coordinates)
};

struct HomComplex {
  ComplexOfFp cx;
  std::vector<HomBlocks> blocks;
  std::shared_ptr<const SignedModel> model;
  GModule a;  // left module
};

struct TensorComplex {
  ComplexOfFp cx;
  std::shared_ptr<const SignedModel> model;
  GModule a;  // right module; block o occupies generators [o*r, (o+1)*r)
};

/// A (x)_G M_* in degrees 0..top (top <= model max degree).
TensorComplex tensor_over_G(const GModule& a, std::shared_ptr<const SignedModel> m, int top);

/// Hom_G(M_*, A) in degrees 0..top; the coboundary out of top exists only past the model's top degree.
HomComplex hom_over_G(std::shared_ptr<const SignedModel> m, const GModule& a, int top);

/// Value in A coordinates of the cochain x (degree n) at an arbitrary tag.
SparseVec value_at(const HomComplex& h, int n, const SparseVec& x, const Tag& t);
/// Cochain whose value at each representative is given; throws when a value is not admissible.
SparseVec from_rep_values(const HomComplex& h, int n, const std::vector<SparseVec>& values);

/*
 * Matrix of f -> f o phi from src degree n to dst degree n, where phi sends
 * each dst representative to a formal sum of src tags.  Both modules share
 * A coordinates (the dst module may be a restriction of the src one).
 */
IntMatrix pullback_matrix(const HomComplex& src, const HomComplex& dst, int n,
                          const std::function<FormalSum(const Tag&)>& phi);

/// Terms M_j, t_j of a value sum_j M_j f(t_j), with M_j acting on A coordinates.
using TwistedSum = std::vector<std::pair<IntMatrix, Tag>>;

/// Like pullback_matrix, but each dst representative gets a twisted sum of src values.
IntMatrix twisted_pullback_matrix(const HomComplex& src, const HomComplex& dst, int n,
                                  const std::function<TwistedSum(const Tag&)>& phi);

/// Matrix of a (x) x -> a (x) phi(x) on tensor complexes over the same group and module.
IntMatrix pushforward_matrix(const TensorComplex& src, const TensorComplex& dst, int n,
                             const std::function<FormalSum(const Tag&)>& phi);

struct Subcomplex {
  ComplexOfFp cx;
  std::vector<IntMatrix> incl;  // per degree, sub generators -> whole generators
};

/// Subcomplex on the given lattices (each containing the relations); throws if d does not preserve them.
Subcomplex restrict_to(const ComplexOfFp& whole, const std::vector<Lattice>& sub);

/// whole / image(incl) degree-wise; incl must be an injective chain map.
ComplexOfFp quotient_complex(const ComplexOfFp& sub, const ComplexOfFp& whole, const std::vector<IntMatrix>& incl);

/// Checks that f_n (one matrix per degree) commutes with the differentials modulo relations.
bool is_chain_map(const ComplexOfFp& src, const ComplexOfFp& dst, const std::vector<IntMatrix>& f);

/// 2-periodic resolution of Z over Z[Z_m] tensored with / mapped into A (group must be cyclic_group(m)).
ComplexOfFp cyclic_periodic_complex(const GModule& a, Variance v, int top);

/// Matrix columns congruent modulo a lattice.
bool congruent_mod(const IntMatrix& a, const IntMatrix& b, const Lattice& rel);

}  // namespace ghl
