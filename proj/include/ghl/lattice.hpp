#pragma once

#include <map>
#include <optional>

#include "ghl/int_matrix.hpp"

namespace ghl {

/*
 * Incremental column echelon form.  Each stored column has a distinct pivot,
 * its last nonzero index, with a positive pivot entry.  With tracking enabled
 * every stored column remembers its combination of the inserted inputs, and
 * inputs that reduce to zero are kept as kernel vectors.
 */
class Echelon {
 public:
  explicit Echelon(std::size_t ambient, bool track = false) : n_(ambient), track_(track) {}

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return piv_.size(); }

  /// Inserts v as input number `tag` (the tag indexes transform coordinates).
  void insert(SparseVec v, std::size_t tag = 0);

  /// Reduces v against the stored columns; returns the remainder and, when
  /// tracking, accumulates in *combo the input combination subtracted.
  SparseVec reduce(SparseVec v, SparseVec* combo = nullptr) const;

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Some x with sum x_tag * input_tag = v, if v is in the span (needs tracking).
  std::optional<SparseVec> solve(const SparseVec& v) const;

  /// Stored columns ordered by increasing pivot, fully reduced (canonical HNF).
  std::vector<SparseVec> basis() const;
  const std::vector<SparseVec>& kernel() const { return kernel_; }

 private:
  struct Col {
    SparseVec v;
    SparseVec t;
  };

  std::size_t n_;
  bool track_;
  std::map<std::size_t, Col> piv_;
  std::vector<SparseVec> kernel_;
};

/* Sublattice of Z^n held as a canonical column HNF basis. */
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient) : n_(ambient) {}
  static Lattice span(std::size_t ambient, const std::vector<SparseVec>& gens);
  static Lattice column_span(const IntMatrix& m);
  static Lattice full(std::size_t ambient);

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<SparseVec>& basis() const { return basis_; }
  IntMatrix basis_matrix() const { return IntMatrix::from_columns(n_, basis_); }

  bool contains(const SparseVec& v) const;
  bool contains(const Lattice& other) const;
  /// First generator of `other` that is not in this lattice.
  std::optional<SparseVec> witness_outside(const Lattice& other) const;
  /// Coordinates of v in basis(); empty optional when v is not a member.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

  Lattice operator+(const Lattice& other) const;
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

  /// True when the lattice is m*Z^n (m = 0 meaning the zero lattice); sets *m.
  bool is_uniform(Integer* m = nullptr) const;

 private:
  void rebuild(const std::vector<SparseVec>& gens);
  std::size_t n_ = 0;
  std::vector<SparseVec> basis_;
};

/// Column HNF: h = m*u with u unimodular.  Zero columns of h come last.
std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& m);

Lattice kernel_lattice(const IntMatrix& m);

/// {x : m*x in target}.
Lattice preimage_lattice(const IntMatrix& m, const Lattice& target);

/// Some integer x with m*x = v, or nothing.
std::optional<SparseVec> solve(const IntMatrix& m, const SparseVec& v);

/// Some integer x with m*x - v in rel, or nothing.
std::optional<SparseVec> solve_mod(const IntMatrix& m, const SparseVec& v, const Lattice& rel);

}  // namespace ghl
