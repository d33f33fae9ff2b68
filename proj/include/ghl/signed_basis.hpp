#pragma once

#include <limits>
#include <memory>
#include <unordered_map>

#include "ghl/groups.hpp"

namespace ghl {

using Tag = std::vector<int>;
using FormalSum = std::vector<std::pair<Tag, Integer>>;

/// tag = sign * g * rep(orbit); sign 0 means the tag is zero in the module.
struct Placement {
  std::size_t orbit = 0;
  int g = 0;
  int sign = 0;
};

inline constexpr std::size_t kDefaultBudget = 100000;

/*
 * One family of G-modules M_n spanned by tags (tuples of group elements) on
 * which G acts by left multiplication up to sign, with a boundary
 * M_n -> M_{n-1}.  Orbit representatives and stabilizers are what the
 * tensor and hom functors consume.
 */
class SignedModel {
 public:
  SignedModel(FiniteGroup g, int max_degree, std::size_t budget);
  virtual ~SignedModel() = default;

  const FiniteGroup& group() const { return g_; }
  int max_degree() const { return max_degree_; }
  virtual std::string name() const = 0;
  /// M_n = 0 for n above this (unbounded unless overridden).
  virtual int top_degree() const { return std::numeric_limits<int>::max(); }

  std::size_t num_orbits(int n) const;
  const Tag& rep(int n, std::size_t o) const;
  /// Pairs (g, s) with g . rep = s . rep (always includes (e, +1)).
  const std::vector<std::pair<int, int>>& stabilizer(int n, std::size_t o) const;
  virtual Placement place(int n, const Tag& t) const;

  /// Boundary of an arbitrary tag as a formal sum of (raw) tags of degree n-1.
  virtual FormalSum boundary(int n, const Tag& t) const = 0;

  /// Canonical basis tag and sign with t = sign * canonical (sign 0: t is zero).
  virtual std::pair<Tag, int> canonical(const Tag& t) const = 0;
  /// 2 when the canonical tag spans a copy of Z/2, else 0.
  virtual int torsion(const Tag& canonical_tag) const { (void)canonical_tag; return 0; }

  Tag act(int g, const Tag& t) const;
  std::uint64_t key(const Tag& t) const;

 protected:
  /// All canonical tags of degree n, in a fixed order (first of each orbit becomes its rep).
  virtual std::vector<Tag> enumerate(int n) const = 0;
  void build_orbits();

  FiniteGroup g_;
  int max_degree_;
  std::size_t budget_;

  struct Degree {
    std::vector<Tag> reps;
    std::vector<std::vector<std::pair<int, int>>> stab;
    std::unordered_map<std::uint64_t, Placement> where;
  };
  std::vector<Degree> deg_;
};

/* Standard bar resolution: tags are (n+1)-tuples, trivial stabilizers. */
class BarModel : public SignedModel {
 public:
  BarModel(FiniteGroup g, int max_degree, std::size_t budget = kDefaultBudget);
  std::string name() const override { return "bar"; }
  Placement place(int n, const Tag& t) const override;
  FormalSum boundary(int n, const Tag& t) const override;
  std::pair<Tag, int> canonical(const Tag& t) const override { return {t, 1}; }
  /// Orbit index of the representative (1, h_1, ..., h_n).
  std::size_t orbit_of_tail(const Tag& rep) const;

 protected:
  std::vector<Tag> enumerate(int) const override { return {}; }
};

/*
 * Exterior complex on strictly increasing tags.  With scaled = true the
 * boundary out of degree n is multiplied by n+1, which models the symmetric
 * subcomplex of the bar resolution through the alternating-sum embedding.
 */
class ExtModel : public SignedModel {
 public:
  ExtModel(FiniteGroup g, int max_degree, bool scaled = false, std::size_t budget = kDefaultBudget);
  std::string name() const override { return scaled_ ? "sym-scaled" : "ext"; }
  int top_degree() const override { return g_.order() - 1; }
  FormalSum boundary(int n, const Tag& t) const override;
  std::pair<Tag, int> canonical(const Tag& t) const override;
  /// Testing hook: flips the sign of face `face` in the boundary out of degree `degree`.
  void inject_sign_error(int degree, int face) {
    mut_degree_ = degree;
    mut_face_ = face;
  }

 protected:
  std::vector<Tag> enumerate(int n) const override;
  bool scaled_;
  int mut_degree_ = -1, mut_face_ = -1;
};

/*
 * Symmetric subcomplex generated by alternating sums mu(S) inside the bar
 * resolution; boundaries are computed by expanding mu in tuples, applying
 * the bar boundary and decomposing back (residual checked to vanish).
 */
class SymDirectModel : public ExtModel {
 public:
  SymDirectModel(FiniteGroup g, int max_degree, std::size_t budget = kDefaultBudget);
  std::string name() const override { return "sym-direct"; }
  FormalSum boundary(int n, const Tag& t) const override;
};

/*
 * Skew quotient of the bar resolution: tuples modulo t.pi = sgn(pi) t.
 * Sorted tuples are the basis; tuples with a repeated entry span Z/2.
 */
class SkewModel : public SignedModel {
 public:
  SkewModel(FiniteGroup g, int max_degree, std::size_t budget = kDefaultBudget);
  std::string name() const override { return "skew"; }
  FormalSum boundary(int n, const Tag& t) const override;
  std::pair<Tag, int> canonical(const Tag& t) const override;
  int torsion(const Tag& c) const override;

 protected:
  std::vector<Tag> enumerate(int n) const override;
};

/// Parity sign of the permutation sorting t (ties broken stably); sorts t in place.
int sort_with_sign(Tag& t);
bool has_repeat(const Tag& sorted);

/// Reduces a formal sum to canonical tags; coefficients of 2-torsion tags are taken mod 2.
FormalSum normalize(const SignedModel& m, const FormalSum& s);

}  // namespace ghl
