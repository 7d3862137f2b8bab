#include "wcalc/pieces_wonderful.hpp"

#include <algorithm>
#include <json.hpp>

#include "wcalc/text.hpp"

namespace wcalc {

WonderfulContext::WonderfulContext(const WeylGroup& g, Triple a)
    : g_(&g), a_(std::move(a)) {
  if (auto v = validate_triple(g.rs(), g.rs(), a_))
    throw Error("invalid triple: " + v->message);
}

const std::vector<std::pair<WeylElt, WeylElt>>& WonderfulContext::wa_pairs() const {
  if (wa_pairs_.empty()) {
    for (WeylElt x : g_->parabolic_elements(a_.a1))
      wa_pairs_.emplace_back(x, map_through(*g_, x, a_.iso, *g_));
  }
  return wa_pairs_;
}

const std::vector<WeylElt>& WonderfulContext::v2_reps() const {
  return g_->min_coset_reps(a_.a2, Side::left);
}

bool WonderfulContext::is_canonical(const WonderfulPieceIndex& idx) const {
  return g_->is_min_rep(idx.v1, idx.j, Side::right) &&
         g_->is_min_rep(idx.v2, a_.a2, Side::left);
}

void WonderfulContext::require_canonical(const WonderfulPieceIndex& idx) const {
  if (!is_canonical(idx)) throw Error("piece index is not in canonical form");
}

NodeSet stable_j(const WonderfulContext& ctx, NodeSet j, WeylElt v1, WeylElt v2) {
  const WeylGroup& g = ctx.g();
  WeylElt v2i = g.inv(v2);
  NodeSet cur = j;
  for (;;) {
    NodeSet next;
    for (int b : cur) {
      int d = g.simple_to_simple(v1, b);
      if (d < 0 || !ctx.a().a1.contains(d)) continue;
      int e = g.simple_to_simple(v2i, ctx.a().iso.apply(d));
      if (e >= 0 && cur.contains(e)) next.add(b);
    }
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<WonderfulPieceIndex> enumerate_wonderful(const WonderfulContext& ctx) {
  const WeylGroup& g = ctx.g();
  std::vector<WonderfulPieceIndex> out;
  for (std::uint32_t bits = 0; bits < (1u << g.rank()); ++bits) {
    NodeSet j = NodeSet::from_bits(bits);
    for (WeylElt v1 : g.min_coset_reps(j, Side::right))
      for (WeylElt v2 : ctx.v2_reps()) out.push_back(WonderfulPieceIndex{j, v1, v2});
  }
  // order: (|J|, l(v1), l(v2), label); keys computed once
  std::vector<std::pair<std::string, std::size_t>> keyed(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const WonderfulPieceIndex& p = out[i];
    std::string key;
    key += static_cast<char>('0' + p.j.size());
    key += static_cast<char>('a' + g.length(p.v1));
    key += static_cast<char>('a' + g.length(p.v2));
    key += piece_label(g, p);
    keyed[i] = {std::move(key), i};
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<WonderfulPieceIndex> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : keyed) sorted.push_back(out[i]);
  return sorted;
}

int dim_wonderful_piece(const WonderfulContext& ctx, const WonderfulPieceIndex& idx) {
  ctx.require_canonical(idx);
  const WeylGroup& g = ctx.g();
  const RootSystem& rs = g.rs();
  NodeSet js = stable_j(ctx, idx.j, idx.v1, idx.v2);
  NodeSet a1s = g.simple_image_set(idx.v1, js);
  if (!a1s.subset_of(ctx.a().a1) || a1s.size() != js.size())
    throw std::logic_error("stable subset does not transport into A1");
  int flag = rs.pos_roots_in_span(ctx.a().a1) - rs.pos_roots_in_span(a1s);
  int fiber = idx.j.size() + 2 * rs.pos_roots_in_span(js);
  int affine = rs.dim_u(a1s) - g.length(idx.v1) + g.length(idx.v2);
  return flag + fiber + affine;
}

bool closure_leq(const WonderfulContext& ctx, ClosureCriterion crit,
                 const WonderfulPieceIndex& target, const WonderfulPieceIndex& query,
                 WonderfulWitness* witness) {
  const WeylGroup& g = ctx.g();
  if (!g.is_min_rep(target.v1, target.j, Side::right))
    throw Error("target v1 is not minimal for its subset");
  ctx.require_canonical(query);
  if (!query.j.subset_of(target.j)) return false;

  if (crit == ClosureCriterion::first) {
    WeylElt w0i = g.longest_element(query.j);
    // z runs over W_J n W^I, y over W_I.
    for (WeylElt z : g.parabolic_elements(target.j)) {
      if (!g.is_min_rep(z, query.j, Side::right)) continue;
      if (g.length(g.mul(target.v2, z)) != g.length(target.v2) + g.length(z)) continue;
      WeylElt rhs1 = g.mul(g.mul(target.v1, z), w0i);
      WeylElt rhs2 = g.mul(target.v2, z);
      for (const auto& [x, ax] : ctx.wa_pairs()) {
        WeylElt xv = g.mul(x, query.v1);
        WeylElt av = g.mul(ax, query.v2);
        for (WeylElt y : g.parabolic_elements(query.j)) {
          if (g.bruhat_leq(rhs1, g.mul(g.mul(xv, y), w0i)) &&
              g.bruhat_leq(g.mul(av, y), rhs2)) {
            if (witness) *witness = WonderfulWitness{x, z, y, true};
            return true;
          }
        }
      }
    }
    return false;
  }

  const bool need_length = (crit == ClosureCriterion::second);
  for (WeylElt z : g.parabolic_elements(target.j)) {
    if (need_length &&
        g.length(g.mul(target.v2, z)) != g.length(target.v2) + g.length(z))
      continue;
    WeylElt rhs1 = g.mul(target.v1, z);
    WeylElt rhs2 = g.mul(target.v2, z);
    for (const auto& [x, ax] : ctx.wa_pairs()) {
      if (g.bruhat_leq(rhs1, g.mul(x, query.v1)) &&
          g.bruhat_leq(g.mul(ax, query.v2), rhs2)) {
        if (witness) *witness = WonderfulWitness{x, z, g.identity(), false};
        return true;
      }
    }
  }
  return false;
}

bool boundary_criterion(const WonderfulContext& ctx, const WonderfulPieceIndex& target,
                        const WonderfulPieceIndex& query) {
  if (!query.j.subset_of(target.j)) return false;
  WonderfulPieceIndex floor{NodeSet::none(), query.v1, query.v2};
  return closure_leq(ctx, ClosureCriterion::third, target, floor);
}

bool springer_closure_leq(const WeylGroup& g, const WonderfulPieceIndex& target,
                          const WonderfulPieceIndex& query) {
  if (!query.j.subset_of(target.j)) return false;
  for (WeylElt z : g.parabolic_elements(target.j)) {
    if (g.bruhat_leq(g.mul(target.v1, z), query.v1) &&
        g.bruhat_leq(query.v2, g.mul(target.v2, z)))
      return true;
  }
  return false;
}

bool diagonal_closure_leq(const WeylGroup& g, const WonderfulPieceIndex& target,
                          const WonderfulPieceIndex& query) {
  if (!query.j.subset_of(target.j)) return false;
  for (WeylElt z : g.parabolic_elements(target.j)) {
    WeylElt rhs = g.mul(target.v1, z);
    for (std::size_t e = 0; e < g.order(); ++e) {
      WeylElt x = g.at(e);
      if (!g.bruhat_leq(x, z)) continue;
      if (g.bruhat_leq(rhs, g.mul(x, query.v1))) return true;
    }
  }
  return false;
}

ClosurePoset build_poset(const WonderfulContext& ctx, ClosureCriterion crit) {
  ClosurePoset p;
  p.nodes = enumerate_wonderful(ctx);
  const std::size_t n = p.nodes.size();
  p.dims.reserve(n);
  for (const auto& node : p.nodes) p.dims.push_back(dim_wonderful_piece(ctx, node));
  p.leq = BitMatrix(n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t q = 0; q < n; ++q)
      if (closure_leq(ctx, crit, p.nodes[t], p.nodes[q])) p.leq.set(q, t);

  const WeylGroup& g = ctx.g();
  auto bad = [&](std::size_t a, std::size_t b, const char* what) {
    throw std::logic_error(std::string("closure relation is not a partial order (") +
                           what + ") at " + piece_label(g, p.nodes[a]) + " / " +
                           piece_label(g, p.nodes[b]));
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!p.leq.get(i, i)) bad(i, i, "reflexivity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.leq.get(i, j) && p.leq.get(j, i)) bad(i, j, "antisymmetry");
      if (p.leq.get(i, j) && !p.leq.row_subset(j, i)) bad(i, j, "transitivity");
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq.get(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && p.leq.get(i, k) && p.leq.get(k, j)) cover = false;
      if (cover) p.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return p;
}

std::string piece_label(const WeylGroup& g, const WonderfulPieceIndex& idx) {
  return "J=" + node_set_to_string(idx.j) + ";v1=" + g.to_string(idx.v1) +
         ";v2=" + g.to_string(idx.v2);
}

WonderfulPieceIndex parse_piece(const WeylGroup& g, std::string_view text) {
  WonderfulPieceIndex idx{NodeSet::none(), g.identity(), g.identity()};
  bool saw_j = false, saw_v1 = false, saw_v2 = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(';', pos);
    std::string_view field = text.substr(
        pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    std::size_t eq = field.find('=');
    if (eq == std::string_view::npos)
      throw Error("piece index: missing '=' at offset " + std::to_string(pos));
    std::string_view key = field.substr(0, eq);
    std::string_view val = field.substr(eq + 1);
    if (key == "J") {
      if (val.size() < 2 || val.front() != '{' || val.back() != '}')
        throw Error("piece index: J wants {..} at offset " + std::to_string(pos));
      std::string_view body = val.substr(1, val.size() - 2);
      std::size_t p = 0;
      while (p < body.size()) {
        std::size_t comma = body.find(',', p);
        std::string_view num = body.substr(
            p, comma == std::string_view::npos ? std::string_view::npos : comma - p);
        int v = 0;
        if (num.empty()) throw Error("piece index: empty node in J");
        for (char ch : num) {
          if (ch < '0' || ch > '9')
            throw Error("piece index: bad node '" + std::string(num) + "'");
          v = v * 10 + (ch - '0');
        }
        if (v < 1 || v > g.rank())
          throw Error("piece index: node " + std::to_string(v) + " out of range");
        idx.j.add(v - 1);
        if (comma == std::string_view::npos) break;
        p = comma + 1;
      }
      saw_j = true;
    } else if (key == "v1") {
      idx.v1 = g.parse(val);
      saw_v1 = true;
    } else if (key == "v2") {
      idx.v2 = g.parse(val);
      saw_v2 = true;
    } else {
      throw Error("piece index: unknown field '" + std::string(key) + "' at offset " +
                  std::to_string(pos));
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (!saw_j || !saw_v1 || !saw_v2)
    throw Error("piece index needs fields J, v1, v2");
  return idx;
}

std::string poset_to_dot(const WonderfulContext& ctx, const ClosurePoset& p) {
  const WeylGroup& g = ctx.g();
  std::string out = "digraph closure {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + piece_label(g, p.nodes[i]) +
           "\\ndim=" + std::to_string(p.dims[i]) + "\"];\n";
  for (auto [lo, hi] : p.hasse)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

std::string poset_to_json(const WonderfulContext& ctx, const ClosurePoset& p,
                          ClosureCriterion crit) {
  const WeylGroup& g = ctx.g();
  nlohmann::ordered_json doc;
  doc["type"] = g.rs().type_string();
  doc["criterion"] = static_cast<int>(crit);
  doc["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    nlohmann::ordered_json node;
    node["index"] = i;
    node["J"] = node_set_to_string(p.nodes[i].j);
    node["v1"] = g.to_string(p.nodes[i].v1);
    node["v2"] = g.to_string(p.nodes[i].v2);
    node["dim"] = p.dims[i];
    doc["nodes"].push_back(node);
  }
  doc["hasse"] = nlohmann::ordered_json::array();
  for (auto [lo, hi] : p.hasse) doc["hasse"].push_back({lo, hi});
  return doc.dump(2) + "\n";
}

std::string poset_to_tsv(const WonderfulContext& ctx, const ClosurePoset& p) {
  const WeylGroup& g = ctx.g();
  std::vector<std::string> labels;
  labels.reserve(p.nodes.size());
  for (const auto& node : p.nodes) labels.push_back(piece_label(g, node));
  return matrix_to_tsv(labels, p.leq);
}

std::string matrix_to_tsv(const std::vector<std::string>& labels, const BitMatrix& m) {
  // Cell (row, col) = 1 when the row piece lies in the closure of the column
  // piece.
  std::string out;
  for (const std::string& l : labels) {
    out += '\t';
    out += l;
  }
  out += '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += labels[i];
    for (std::size_t j = 0; j < labels.size(); ++j) {
      out += '\t';
      out += m.get(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_dot(const std::vector<std::string>& labels, const BitMatrix& m) {
  const std::size_t n = labels.size();
  std::string out = "digraph closure {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < n; ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + labels[i] + "\"];\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !m.get(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && m.get(i, k) && m.get(k, j)) cover = false;
      if (cover) out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace wcalc
