#pragma once

#include <string>
#include <vector>

#include "ghl/int_matrix.hpp"

namespace ghl {

/* Finite group as a multiplication table; element 0 is the identity. */
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates the table (identity, latin square, inverses, associativity).
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& label(int a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<int>> table() const;
  int element_order(int a) const;
  int find_label(const std::string& l) const;  // -1 if absent

  /// Same group with element i renamed to perm[i] (perm[0] must be 0).
  FiniteGroup relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup symmetric_group(int n);
FiniteGroup klein_four();
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Parses cyclic:N, dihedral:N, sym:N, klein4, q8 (file: handled by the caller).
FiniteGroup group_from_spec(const std::string& spec);

/// cyclic 2..6, klein4, S3, D4 with their specifiers.
std::vector<std::pair<std::string, FiniteGroup>> catalog_groups();

/// Sign of the permutation h -> g h of the element set.
int cayley_sign(const FiniteGroup& g, int element);
bool is_oriented(const FiniteGroup& g);

/// Subgroup generated by the given elements, as a sorted element list.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

/// Checks closure; throws with a witness pair when H is not a subgroup.
void check_subgroup(const FiniteGroup& g, const std::vector<int>& h);

struct Subgroup {
  FiniteGroup group;          // H with its own indices
  std::vector<int> embed;     // H index -> G index
  std::vector<int> to_local;  // G index -> H index or -1
};
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);

/* Left coset representatives with the identity representing H itself. */
class CosetSystem {
 public:
  /// Smallest element index in each coset.
  CosetSystem(const FiniteGroup& g, const Subgroup& h);
  /// Caller-chosen representatives (one per coset, identity for H).
  CosetSystem(const FiniteGroup& g, const Subgroup& h, std::vector<int> reps);

  int index() const { return static_cast<int>(reps_.size()); }
  const std::vector<int>& reps() const { return reps_; }
  int bar(int g) const { return bar_[g]; }

 private:
  void build(const FiniteGroup& g, const Subgroup& h);
  std::vector<int> reps_;
  std::vector<int> bar_;
};

}  // namespace ghl
