#pragma once

// Stable pieces of the compactified group for a single triple: enumeration,
// dimensions, three equivalent closure criteria, the boundary criterion, and
// the closure poset with its exports.

#include <string>
#include <vector>

#include "wcalc/pieces_gg.hpp"
#include "wcalc/triples.hpp"

namespace wcalc {

struct WonderfulPieceIndex {
  NodeSet j;
  WeylElt v1, v2;
  bool operator==(const WonderfulPieceIndex&) const = default;
};

// A triple from a group to itself, validated, with cached subgroup listings.
class WonderfulContext {
 public:
  WonderfulContext(const WeylGroup& g, Triple a);

  const WeylGroup& g() const { return *g_; }
  const Triple& a() const { return a_; }

  const std::vector<std::pair<WeylElt, WeylElt>>& wa_pairs() const;
  const std::vector<WeylElt>& v2_reps() const;  // ^{A2} W

  bool is_canonical(const WonderfulPieceIndex& idx) const;
  void require_canonical(const WonderfulPieceIndex& idx) const;

 private:
  const WeylGroup* g_;
  Triple a_;
  mutable std::vector<std::pair<WeylElt, WeylElt>> wa_pairs_;
};

// Largest subset of J stable under the composite v2^-1 a v1.
NodeSet stable_j(const WonderfulContext& ctx, NodeSet j, WeylElt v1, WeylElt v2);

// All (J, v1 in W^J, v2 in ^{A2}W), ordered by (|J|, l(v1), l(v2), label).
std::vector<WonderfulPieceIndex> enumerate_wonderful(const WonderfulContext& ctx);

int dim_wonderful_piece(const WonderfulContext& ctx, const WonderfulPieceIndex& idx);

enum class ClosureCriterion { first = 1, second = 2, third = 3 };

struct WonderfulWitness {
  WeylElt x, z;
  WeylElt y;        // used by the first criterion only
  bool has_y = false;
};

// Query piece lies in the closure of the target piece.  The target's v2 may
// be any group element; v1 must be minimal for its J and the query index must
// be canonical.
bool closure_leq(const WonderfulContext& ctx, ClosureCriterion crit,
                 const WonderfulPieceIndex& target, const WonderfulPieceIndex& query,
                 WonderfulWitness* witness = nullptr);

// Containment tested through the closed boundary orbit: the query re-rooted
// at the empty subset, plus the subset condition.
bool boundary_criterion(const WonderfulContext& ctx, const WonderfulPieceIndex& target,
                        const WonderfulPieceIndex& query);

// Independent specialization formulas.
bool springer_closure_leq(const WeylGroup& g, const WonderfulPieceIndex& target,
                          const WonderfulPieceIndex& query);
bool diagonal_closure_leq(const WeylGroup& g, const WonderfulPieceIndex& target,
                          const WonderfulPieceIndex& query);

struct ClosurePoset {
  std::vector<WonderfulPieceIndex> nodes;
  std::vector<int> dims;
  BitMatrix leq;                              // (q, t): q below t
  std::vector<std::pair<int, int>> hasse;     // cover edges (lower, upper)
};

// Pairwise criterion evaluation; verifies the partial-order axioms and
// computes the transitive reduction.  Throws on an axiom violation, naming
// the offending pair.
ClosurePoset build_poset(const WonderfulContext& ctx, ClosureCriterion crit);

std::string piece_label(const WeylGroup& g, const WonderfulPieceIndex& idx);
// Parses "J={1};v1=s2 s1;v2=e".  Does not check canonicality.
WonderfulPieceIndex parse_piece(const WeylGroup& g, std::string_view text);

std::string poset_to_dot(const WonderfulContext& ctx, const ClosurePoset& p);
std::string poset_to_json(const WonderfulContext& ctx, const ClosurePoset& p,
                          ClosureCriterion crit);
std::string poset_to_tsv(const WonderfulContext& ctx, const ClosurePoset& p);

// Shared matrix writers (also used for product-group closure matrices).
std::string matrix_to_tsv(const std::vector<std::string>& labels, const BitMatrix& m);
std::string matrix_to_dot(const std::vector<std::string>& labels, const BitMatrix& m);

}  // namespace wcalc
