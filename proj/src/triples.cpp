#include "wcalc/triples.hpp"

#include <algorithm>

namespace wcalc {

DiagramIso DiagramIso::empty(int rank1, int rank2) {
  DiagramIso iso;
  iso.fwd.assign(rank1, -1);
  iso.rev.assign(rank2, -1);
  return iso;
}

DiagramIso DiagramIso::identity(NodeSet s, int rank) {
  DiagramIso iso = empty(rank, rank);
  iso.domain = iso.codomain = s;
  for (int i : s) {
    iso.fwd[i] = i;
    iso.rev[i] = i;
  }
  return iso;
}

DiagramIso DiagramIso::from_pairs(int rank1, int rank2,
                                  const std::vector<std::pair<int, int>>& pairs) {
  DiagramIso iso = empty(rank1, rank2);
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= rank1 || j < 0 || j >= rank2)
      throw Error("diagram map index out of range");
    if (iso.fwd[i] != -1 || iso.rev[j] != -1)
      throw Error("diagram map is not a bijection");
    iso.fwd[i] = j;
    iso.rev[j] = i;
    iso.domain.add(i);
    iso.codomain.add(j);
  }
  return iso;
}

NodeSet DiagramIso::image_of(NodeSet s) const {
  NodeSet out;
  for (int i : s)
    if (fwd[i] >= 0) out.add(fwd[i]);
  return out;
}

Triple make_empty_triple(int rank1, int rank2, Y2Preset preset) {
  return Triple{NodeSet::none(), NodeSet::none(), DiagramIso::empty(rank1, rank2), preset};
}

Triple make_identity_triple(int rank, Y2Preset preset) {
  NodeSet all = NodeSet::all(rank);
  return Triple{all, all, DiagramIso::identity(all, rank), preset};
}

std::optional<TripleViolation> validate_triple(const RootSystem& rs1,
                                               const RootSystem& rs2,
                                               const Triple& t) {
  if (static_cast<int>(t.iso.fwd.size()) != rs1.rank() ||
      static_cast<int>(t.iso.rev.size()) != rs2.rank())
    return TripleViolation{-1, -1, "diagram map has wrong rank"};
  if (t.iso.domain != t.a1 || t.iso.codomain != t.a2)
    return TripleViolation{-1, -1, "diagram map domain/codomain do not match the subsets"};
  for (int i = 0; i < rs1.rank(); ++i) {
    if (t.a1.contains(i) != (t.iso.fwd[i] >= 0))
      return TripleViolation{i, -1, "map undefined on a domain node"};
    if (t.iso.fwd[i] >= 0 && !t.a2.contains(t.iso.fwd[i]))
      return TripleViolation{i, t.iso.fwd[i], "image node outside the codomain"};
  }
  for (int j = 0; j < rs2.rank(); ++j) {
    if (t.a2.contains(j) != (t.iso.rev[j] >= 0))
      return TripleViolation{-1, j, "map misses a codomain node"};
    if (t.iso.rev[j] >= 0 && t.iso.fwd[t.iso.rev[j]] != j)
      return TripleViolation{t.iso.rev[j], j, "map is not a bijection"};
  }
  for (int i : t.a1)
    for (int k : t.a1) {
      int ai = t.iso.fwd[i], ak = t.iso.fwd[k];
      if (rs1.cartan(i, k) != rs2.cartan(ai, ak))
        return TripleViolation{i, k, "Cartan entry not preserved"};
    }
  return std::nullopt;
}

int y2_dim(const RootSystem& rs2, const Triple& t) {
  switch (t.preset) {
    case Y2Preset::product: return rs2.rank();
    case Y2Preset::identification: return rs2.rank() - t.a2.size();
  }
  return 0;
}

WeylElt map_through(const WeylGroup& src, WeylElt x, const DiagramIso& iso,
                    const WeylGroup& dst) {
  WeylElt out = dst.identity();
  for (int s : src.word(x)) {
    if (!iso.domain.contains(s))
      throw Error("map_through: element leaves the parabolic subgroup of the domain");
    out = dst.right_mul_gen(out, iso.fwd[s]);
  }
  return out;
}

PairContext::PairContext(const WeylGroup& g1, const WeylGroup& g2, Triple a, Triple c)
    : g1_(&g1), g2_(&g2), a_(std::move(a)), c_(std::move(c)) {
  if (auto v = validate_triple(g1.rs(), g2.rs(), a_))
    throw Error("invalid first triple: " + v->message);
  if (auto v = validate_triple(g1.rs(), g2.rs(), c_))
    throw Error("invalid second triple: " + v->message);
}

const std::vector<std::pair<WeylElt, WeylElt>>& PairContext::wa_pairs() const {
  if (wa_pairs_.empty()) {
    for (WeylElt x : g1_->parabolic_elements(a_.a1))
      wa_pairs_.emplace_back(x, map_through(*g1_, x, a_.iso, *g2_));
  }
  return wa_pairs_;
}

const std::vector<std::pair<WeylElt, WeylElt>>& PairContext::wc_pairs() const {
  if (wc_pairs_.empty()) {
    for (WeylElt y : g1_->parabolic_elements(c_.a1))
      wc_pairs_.emplace_back(y, map_through(*g1_, y, c_.iso, *g2_));
  }
  return wc_pairs_;
}

void PairContext::require_canonical(WeylElt v1, WeylElt v2) const {
  if (!g1_->is_min_rep(v1, c_.a1, Side::right))
    throw Error("v1 must be a minimal representative for the right quotient by C1");
  if (!g2_->is_min_rep(v2, a_.a2, Side::left))
    throw Error("v2 must be a minimal representative for the left quotient by A2");
}

std::optional<int> twist_step_c2(const PairContext& ctx, WeylElt v1, WeylElt v2, int beta) {
  if (!ctx.c().a2.contains(beta)) throw Error("twist_step: node not in C2");
  int gamma = ctx.c().iso.preimage(beta);
  int d = ctx.g1().simple_to_simple(v1, gamma);
  if (d < 0 || !ctx.a().a1.contains(d)) return std::nullopt;
  int mu = ctx.a().iso.apply(d);
  int eps = ctx.g2().simple_to_simple(ctx.g2().inv(v2), mu);
  if (eps < 0 || !ctx.c().a2.contains(eps)) return std::nullopt;
  return eps;
}

std::optional<int> twist_step_a1(const PairContext& ctx, WeylElt v1, WeylElt v2, int alpha) {
  if (!ctx.a().a1.contains(alpha)) throw Error("twist_step: node not in A1");
  int mu = ctx.a().iso.apply(alpha);
  int beta = ctx.g2().simple_to_simple(ctx.g2().inv(v2), mu);
  if (beta < 0 || !ctx.c().a2.contains(beta)) return std::nullopt;
  int gamma = ctx.c().iso.preimage(beta);
  int d = ctx.g1().simple_to_simple(v1, gamma);
  if (d < 0 || !ctx.a().a1.contains(d)) return std::nullopt;
  return d;
}

namespace {

template <typename Step>
NodeSet greatest_stable_subset(NodeSet start, Step step) {
  NodeSet cur = start;
  for (;;) {
    NodeSet next;
    for (int b : cur) {
      std::optional<int> img = step(b);
      if (img && cur.contains(*img)) next.add(b);
    }
    if (next == cur) return cur;
    cur = next;
  }
}

}  // namespace

NodeSet stable_subset_c2(const PairContext& ctx, WeylElt v1, WeylElt v2) {
  ctx.require_canonical(v1, v2);
  return greatest_stable_subset(ctx.c().a2, [&](int b) {
    return twist_step_c2(ctx, v1, v2, b);
  });
}

NodeSet stable_subset_a1(const PairContext& ctx, WeylElt v1, WeylElt v2) {
  ctx.require_canonical(v1, v2);
  return greatest_stable_subset(ctx.a().a1, [&](int a) {
    return twist_step_a1(ctx, v1, v2, a);
  });
}

Triple derived_triple(const WeylGroup& g1, const Triple& c, NodeSet e1, WeylElt y1) {
  if (!g1.is_min_rep(y1, e1, Side::left) || !g1.is_min_rep(y1, c.a1, Side::right))
    throw Error("derived_triple: y1 must be minimal on both sides");
  WeylElt y1i = g1.inv(y1);
  Triple out;
  out.preset = c.preset;
  out.iso = DiagramIso::empty(static_cast<int>(c.iso.fwd.size()),
                              static_cast<int>(c.iso.rev.size()));
  for (int a : e1) {
    int d = g1.simple_to_simple(y1i, a);
    if (d < 0 || !c.a1.contains(d)) continue;
    out.a1.add(a);
    int img = c.iso.apply(d);
    out.a2.add(img);
    out.iso.fwd[a] = img;
    out.iso.rev[img] = a;
  }
  out.iso.domain = out.a1;
  out.iso.codomain = out.a2;
  return out;
}

InductiveTrace inductive_sequence(const PairContext& ctx, WeylElt v1, WeylElt v2) {
  ctx.require_canonical(v1, v2);
  const WeylGroup& g1 = ctx.g1();
  const WeylGroup& g2 = ctx.g2();
  InductiveTrace trace;
  Triple cur = ctx.c();
  WeylElt u1 = v1;
  const int max_steps = g1.rank() + 2;
  for (int i = 0; i <= max_steps; ++i) {
    auto [x2, u2] = g2.carter_factor(v2, ctx.a().a2, cur.a2);
    NodeSet hit = ctx.a().a2.intersect(g2.simple_image_set(x2, cur.a2));
    NodeSet e1;
    for (int j : hit) e1.add(ctx.a().iso.preimage(j));
    auto [xq, uq] = g1.carter_factor(g1.inv(u1), cur.a1, e1);
    WeylElt x1 = g1.inv(xq);
    WeylElt next_u1 = g1.inv(uq);
    Triple next = derived_triple(g1, cur, e1, x1);
    trace.steps.push_back(InductiveStep{cur, u1, x1, x2, u2});
    if (next.a2 == cur.a2) {
      trace.steps.push_back(InductiveStep{next, next_u1, {}, {}, {}});
      trace.terminal = i;
      return trace;
    }
    cur = next;
    u1 = next_u1;
  }
  throw std::logic_error("inductive_sequence did not stabilize");
}

WeylElt dual_shift(const WeylGroup& g1, NodeSet c1) {
  return g1.mul(g1.longest_element(NodeSet::all(g1.rank())), g1.longest_element(c1));
}

Triple dual_triple(const WeylGroup& g1, const Triple& c) {
  const RootSystem& rs = g1.rs();
  WeylElt w0 = g1.longest_element(NodeSet::all(g1.rank()));
  WeylElt shift_inv = g1.inv(dual_shift(g1, c.a1));  // w0_{C1} w0
  Triple out;
  out.preset = c.preset;
  out.a2 = c.a2;
  out.iso = DiagramIso::empty(static_cast<int>(c.iso.fwd.size()),
                              static_cast<int>(c.iso.rev.size()));
  for (int gamma : c.a1) {
    Root img = g1.act(w0, rs.simple_root(gamma));
    for (int& v : img.coeff) v = -v;
    int star = rs.simple_index(img);
    if (star < 0) throw std::logic_error("-w0 does not permute the simple roots");
    out.a1.add(star);
    int back = g1.simple_to_simple(shift_inv, star);
    if (back < 0 || !c.a1.contains(back))
      throw std::logic_error("dual shift does not map the dual subset back");
    int c_img = c.iso.apply(back);
    out.iso.fwd[star] = c_img;
    out.iso.rev[c_img] = star;
  }
  out.iso.domain = out.a1;
  out.iso.codomain = out.a2;
  return out;
}

}  // namespace wcalc
