#pragma once

// Pieces of a product of two groups cut out by a pair of triples: index
// enumeration, dimension formulas for both radical variants, per-level fiber
// dimensions of the inductive refinement, and the closure criteria.

#include <optional>
#include <vector>

#include "wcalc/triples.hpp"

namespace wcalc {

enum class GGVariant { plus, minus };

struct GGPieceIndex {
  WeylElt v1, v2;
  GGVariant variant = GGVariant::plus;
};

// All |W1^{C1}| x |^{A2}W2| indices, canonical order.
std::vector<GGPieceIndex> enumerate_gg(const PairContext& ctx,
                                       GGVariant variant = GGVariant::plus);

// Dimension of the piece modulo the right-acting subgroup.  The minus variant
// replaces the unipotent-overlap term by l(v1).
int dim_gg_piece(const PairContext& ctx, const GGPieceIndex& idx);

// Dimension of the right-acting subgroup itself (adjoint model); add this to
// the piece dimension to land in the ambient product.
int dim_rc(const PairContext& ctx);

// |{ roots of the unipotent radical of P_S sent positive by w }|.
int dim_u_cap_ad(const WeylGroup& g, WeylElt w, NodeSet S);

// Fiber dimensions of the refinement maps, one entry per level.  Entries are
// nonnegative and telescope to dim_u(A1(v1,v2)) - dim_u_cap_ad(v1, C1).
std::vector<int> fiber_dim_trace(const PairContext& ctx, WeylElt v1, WeylElt v2);

struct GGWitness {
  WeylElt x1, y1;
};

// Query piece lies in the closure of the target double coset; the target pair
// may be any (w1, w2), the query must be canonical.
bool closure_leq_gg(const PairContext& ctx, WeylElt target1, WeylElt target2,
                    const GGPieceIndex& query, GGWitness* witness = nullptr);

// Same for the opposite-radical pieces.
bool closure_leq_gg_minus(const PairContext& ctx, WeylElt target1, WeylElt target2,
                          const GGPieceIndex& query, GGWitness* witness = nullptr);

// Borel-times-subgroup double coset closures: (w1, w2) lies under (v1, v2)
// iff some u1 in W_{C1} has w1 u1 <= v1 and w2 c(u1) <= v2.
bool bbrc_closure_contains(const PairContext& ctx, WeylElt v1, WeylElt v2,
                           WeylElt w1, WeylElt w2, WeylElt* witness = nullptr);

// Opposite-radical form: some u1 in W_{C1} has v1 u1^-1 <= w1 and
// w2 c(u1) <= v2.
bool bbrc_minus_closure_contains(const PairContext& ctx, WeylElt v1, WeylElt v2,
                                 WeylElt w1, WeylElt w2, WeylElt* witness = nullptr);

// Closure matrix over the canonical indices: entry (q, t) says piece q lies in
// the closure of piece t.
BitMatrix gg_closure_matrix(const PairContext& ctx, GGVariant variant);

}  // namespace wcalc
