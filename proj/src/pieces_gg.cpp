#include "wcalc/pieces_gg.hpp"

namespace wcalc {

std::vector<GGPieceIndex> enumerate_gg(const PairContext& ctx, GGVariant variant) {
  std::vector<GGPieceIndex> out;
  const auto& reps1 = ctx.g1().min_coset_reps(ctx.c().a1, Side::right);
  const auto& reps2 = ctx.g2().min_coset_reps(ctx.a().a2, Side::left);
  out.reserve(reps1.size() * reps2.size());
  for (WeylElt v1 : reps1)
    for (WeylElt v2 : reps2) out.push_back(GGPieceIndex{v1, v2, variant});
  return out;
}

int dim_u_cap_ad(const WeylGroup& g, WeylElt w, NodeSet S) {
  const RootSystem& rs = g.rs();
  int n = 0;
  for (const Root& beta : rs.positive_roots()) {
    bool in_span = true;
    for (int j = 0; j < rs.rank() && in_span; ++j)
      if (beta.coeff[j] != 0 && !S.contains(j)) in_span = false;
    if (in_span) continue;  // not a radical root
    if (rs.is_positive(g.act(w, beta))) ++n;
  }
  return n;
}

int dim_gg_piece(const PairContext& ctx, const GGPieceIndex& idx) {
  ctx.require_canonical(idx.v1, idx.v2);
  const RootSystem& rs1 = ctx.g1().rs();
  const RootSystem& rs2 = ctx.g2().rs();
  NodeSet c2s = stable_subset_c2(ctx, idx.v1, idx.v2);
  NodeSet a1s = stable_subset_a1(ctx, idx.v1, idx.v2);
  int flag = rs1.pos_roots_in_span(ctx.a().a1) - rs1.pos_roots_in_span(a1s);
  int fiber = rs2.rank() + 2 * rs2.pos_roots_in_span(c2s) - y2_dim(rs2, ctx.c());
  int affine;
  if (idx.variant == GGVariant::plus)
    affine = rs1.dim_u(a1s) - dim_u_cap_ad(ctx.g1(), idx.v1, ctx.c().a1) +
             ctx.g2().length(idx.v2);
  else
    affine = rs1.dim_u(a1s) - ctx.g1().length(idx.v1) + ctx.g2().length(idx.v2);
  return flag + fiber + affine;
}

int dim_rc(const PairContext& ctx) {
  const RootSystem& rs1 = ctx.g1().rs();
  const RootSystem& rs2 = ctx.g2().rs();
  int levi1 = rs1.rank() + 2 * rs1.pos_roots_in_span(ctx.c().a1);
  return levi1 + y2_dim(rs2, ctx.c()) + rs1.dim_u(ctx.c().a1) + rs2.dim_u(ctx.c().a2);
}

std::vector<int> fiber_dim_trace(const PairContext& ctx, WeylElt v1, WeylElt v2) {
  InductiveTrace trace = inductive_sequence(ctx, v1, v2);
  std::vector<int> dims;
  for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
    const InductiveStep& lo = trace.steps[i];
    const InductiveStep& hi = trace.steps[i + 1];
    dims.push_back(dim_u_cap_ad(ctx.g1(), hi.u1, hi.c.a1) -
                   dim_u_cap_ad(ctx.g1(), lo.u1, lo.c.a1));
  }
  return dims;
}

bool closure_leq_gg(const PairContext& ctx, WeylElt target1, WeylElt target2,
                    const GGPieceIndex& query, GGWitness* witness) {
  ctx.require_canonical(query.v1, query.v2);
  const WeylGroup& g1 = ctx.g1();
  const WeylGroup& g2 = ctx.g2();
  for (const auto& [x1, ax1] : ctx.wa_pairs()) {
    WeylElt left1 = g1.mul(x1, query.v1);
    WeylElt left2 = g2.mul(ax1, query.v2);
    for (const auto& [y1, cy1] : ctx.wc_pairs()) {
      if (g1.bruhat_leq(g1.mul(left1, y1), target1) &&
          g2.bruhat_leq(g2.mul(left2, cy1), target2)) {
        if (witness) *witness = GGWitness{x1, y1};
        return true;
      }
    }
  }
  return false;
}

bool closure_leq_gg_minus(const PairContext& ctx, WeylElt target1, WeylElt target2,
                          const GGPieceIndex& query, GGWitness* witness) {
  ctx.require_canonical(query.v1, query.v2);
  const WeylGroup& g1 = ctx.g1();
  const WeylGroup& g2 = ctx.g2();
  WeylElt w0c = g1.longest_element(ctx.c().a1);
  WeylElt rhs1 = g1.mul(target1, w0c);
  for (const auto& [x1, ax1] : ctx.wa_pairs()) {
    WeylElt left1 = g1.mul(x1, query.v1);
    WeylElt left2 = g2.mul(ax1, query.v2);
    for (const auto& [y1, cy1] : ctx.wc_pairs()) {
      if (g1.bruhat_leq(rhs1, g1.mul(g1.mul(left1, y1), w0c)) &&
          g2.bruhat_leq(g2.mul(left2, cy1), target2)) {
        if (witness) *witness = GGWitness{x1, y1};
        return true;
      }
    }
  }
  return false;
}

bool bbrc_closure_contains(const PairContext& ctx, WeylElt v1, WeylElt v2,
                           WeylElt w1, WeylElt w2, WeylElt* witness) {
  const WeylGroup& g1 = ctx.g1();
  const WeylGroup& g2 = ctx.g2();
  for (const auto& [u1, cu1] : ctx.wc_pairs()) {
    if (g1.bruhat_leq(g1.mul(w1, u1), v1) && g2.bruhat_leq(g2.mul(w2, cu1), v2)) {
      if (witness) *witness = u1;
      return true;
    }
  }
  return false;
}

bool bbrc_minus_closure_contains(const PairContext& ctx, WeylElt v1, WeylElt v2,
                                 WeylElt w1, WeylElt w2, WeylElt* witness) {
  const WeylGroup& g1 = ctx.g1();
  const WeylGroup& g2 = ctx.g2();
  for (const auto& [u1, cu1] : ctx.wc_pairs()) {
    if (g1.bruhat_leq(g1.mul(v1, g1.inv(u1)), w1) &&
        g2.bruhat_leq(g2.mul(w2, cu1), v2)) {
      if (witness) *witness = u1;
      return true;
    }
  }
  return false;
}

BitMatrix gg_closure_matrix(const PairContext& ctx, GGVariant variant) {
  std::vector<GGPieceIndex> idx = enumerate_gg(ctx, variant);
  BitMatrix m(idx.size());
  for (std::size_t t = 0; t < idx.size(); ++t)
    for (std::size_t q = 0; q < idx.size(); ++q) {
      bool in = (variant == GGVariant::plus)
                    ? closure_leq_gg(ctx, idx[t].v1, idx[t].v2, idx[q])
                    : closure_leq_gg_minus(ctx, idx[t].v1, idx[t].v2, idx[q]);
      if (in) m.set(q, t);
    }
  return m;
}

}  // namespace wcalc
