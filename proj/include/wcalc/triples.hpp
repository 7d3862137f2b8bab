#pragma once

// Admissible triples between two root systems: a type-preserving bijection of
// Dynkin subdiagrams plus a two-valued torus-dimension preset.  This module
// also carries the stable-subset computations, derived triples, the inductive
// refinement sequence, and the dual triple.

#include <optional>
#include <string>
#include <vector>

#include "wcalc/rootdata.hpp"
#include "wcalc/weyl.hpp"

namespace wcalc {

// Partial bijection of node indices, preserving the Cartan matrix entries.
struct DiagramIso {
  NodeSet domain, codomain;
  std::vector<int> fwd;  // size rank1, -1 outside domain
  std::vector<int> rev;  // size rank2, -1 outside codomain

  static DiagramIso empty(int rank1, int rank2);
  static DiagramIso identity(NodeSet s, int rank);
  static DiagramIso from_pairs(int rank1, int rank2,
                               const std::vector<std::pair<int, int>>& pairs);

  int apply(int i) const { return fwd[i]; }
  int preimage(int j) const { return rev[j]; }
  NodeSet image_of(NodeSet s) const;

  bool operator==(const DiagramIso&) const = default;
};

// Dimension preset for the fiber torus Y2 attached to the second factor:
//   identification -> dim Y2 = rank2 - |A2|  (Levi-identified subgroups)
//   product        -> dim Y2 = rank2         (full torus, Borel-type subgroups)
enum class Y2Preset { identification, product };

struct Triple {
  NodeSet a1, a2;
  DiagramIso iso;
  Y2Preset preset = Y2Preset::identification;

  bool same_data(const Triple& o) const {
    return a1 == o.a1 && a2 == o.a2 && iso == o.iso;
  }
};

Triple make_empty_triple(int rank1, int rank2, Y2Preset preset = Y2Preset::product);
Triple make_identity_triple(int rank, Y2Preset preset = Y2Preset::identification);

struct TripleViolation {
  int node1 = -1, node2 = -1;
  std::string message;
};

// Bijectivity plus Cartan-entry preservation in both directions.
std::optional<TripleViolation> validate_triple(const RootSystem& rs1,
                                               const RootSystem& rs2,
                                               const Triple& t);

int y2_dim(const RootSystem& rs2, const Triple& t);

// Image of x under the group isomorphism W_{dom} -> W_{cod} induced by the
// diagram map (generators map to generators).  Requires x in W_{dom}.
WeylElt map_through(const WeylGroup& src, WeylElt x, const DiagramIso& iso,
                    const WeylGroup& dst);

// A validated pair of triples between the same two groups, with cached
// parabolic subgroup listings.  Caches are built on first use; build them
// from a single thread before sharing.
class PairContext {
 public:
  PairContext(const WeylGroup& g1, const WeylGroup& g2, Triple a, Triple c);

  const WeylGroup& g1() const { return *g1_; }
  const WeylGroup& g2() const { return *g2_; }
  const Triple& a() const { return a_; }
  const Triple& c() const { return c_; }

  // (x1, a(x1)) over W_{A1}; (y1, c(y1)) over W_{C1}; canonical order.
  const std::vector<std::pair<WeylElt, WeylElt>>& wa_pairs() const;
  const std::vector<std::pair<WeylElt, WeylElt>>& wc_pairs() const;

  void require_canonical(WeylElt v1, WeylElt v2) const;

 private:
  const WeylGroup* g1_;
  const WeylGroup* g2_;
  Triple a_, c_;
  mutable std::vector<std::pair<WeylElt, WeylElt>> wa_pairs_, wc_pairs_;
};

// One application of the partial composite v2^-1 a v1 c^-1 to a node of C2
// (and the analogous composite v1 c^-1 v2^-1 a on A1).  Defined only when
// every intermediate image is a simple root in the required subset.
std::optional<int> twist_step_c2(const PairContext& ctx, WeylElt v1, WeylElt v2, int beta);
std::optional<int> twist_step_a1(const PairContext& ctx, WeylElt v1, WeylElt v2, int alpha);

// Largest subset of C2 (resp. A1) on which the composite iterates forever.
NodeSet stable_subset_c2(const PairContext& ctx, WeylElt v1, WeylElt v2);
NodeSet stable_subset_a1(const PairContext& ctx, WeylElt v1, WeylElt v2);

// Derived triple for a subset E1 and y1 in ^{E1} W^{C1}:
//   C1' = { a in E1 : y1^-1 a in C1 },  C2' = c(C1 n y1^-1(E1)),  c' = c y1^-1.
Triple derived_triple(const WeylGroup& g1, const Triple& c, NodeSet e1, WeylElt y1);

struct InductiveStep {
  Triple c;     // refined triple at this level
  WeylElt u1;   // residual first-factor element, in W^{C1 at this level}
  // factorization data; absent on the final record
  std::optional<WeylElt> x1, x2, u2;
};

struct InductiveTrace {
  std::vector<InductiveStep> steps;  // levels 0 .. terminal+1
  int terminal = 0;                  // first level whose C2 no longer shrinks
};

// Refine (C, v1) level by level until C2 stabilizes.  The record after the
// stabilizing level carries the limiting triple, which coincides with
// (stable_subset_a1, stable_subset_c2, c v1^-1) and residual u1 = e.
InductiveTrace inductive_sequence(const PairContext& ctx, WeylElt v1, WeylElt v2);

// Dual triple: C1 replaced by its image under the diagram involution induced
// by -w0, with the map corrected by w0 w0_{C1}; C2 unchanged.
Triple dual_triple(const WeylGroup& g1, const Triple& c);

// The longest-element shift w0_{Gamma} w0_{C1} implementing the duality.
WeylElt dual_shift(const WeylGroup& g1, NodeSet c1);

}  // namespace wcalc
