#pragma once

#include "ghl/theories.hpp"

namespace ghl {

/* G, a subgroup H of finite index, coset representatives and the module on both sides. */
struct TransferContext {
  FiniteGroup g;
  Subgroup h;
  CosetSystem cosets;
  GModule a;   // left G-module
  GModule ah;  // its restriction to H
};

/// Empty reps selects the canonical representatives (smallest element of each coset).
TransferContext make_transfer_context(const FiniteGroup& g, const std::vector<int>& h_elements, const GModule& a,
                                      std::vector<int> reps = {});

// ---- function cochains C^n (tuples indexed as in FunctionCochains)

/// C^n(G, A) -> C^n(H, A), restriction along H^n in G^n.
IntMatrix res_function(const TransferContext& c, int n);
/// C^n(H, A) -> C^n(G, A), the coset transfer tr^n.
IntMatrix tr_function(const TransferContext& c, int n);

// ---- equivariant cochains Hom_G(M_n, A) on any signed model

/// Restriction Hom_G(M_n(G), A) -> Hom_H(M_n(H), A) along the subgroup embedding.
IntMatrix res_equivariant(const TransferContext& c, const HomComplex& kg, const HomComplex& kh, int n);
/// Tr^n on bar hom complexes: Hom_H(B_n(H), A) -> Hom_G(B_n(G), A).
IntMatrix trace_equivariant(const TransferContext& c, const HomComplex& kh, const HomComplex& kg, int n);

/// Theories with restriction and corestriction: classical, sym and ext cohomology.
bool has_transfer(Theory t);

enum class TransferMap { Res, Cores, CoresRes };
TransferMap parse_transfer_map(const std::string& s);
std::string transfer_map_name(TransferMap m);

/*
 * Induced map on degree-n cohomology.  Res goes G -> H, Cores goes H -> G and
 * CoresRes is the composite on H^n(G, A).  Throws StructureError when the
 * trace leaves the skew or exterior subcomplex.
 */
FpHom transfer_on_cohomology(Theory t, const TransferContext& c, TransferMap m, int n,
                             std::size_t budget = kDefaultBudget);

}  // namespace ghl
