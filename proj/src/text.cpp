#include "wcalc/text.hpp"

#include <cctype>

namespace wcalc {

std::string node_set_to_string(NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  out += '}';
  return out;
}

NodeSet parse_node_set(std::string_view text, int rank) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw Error("node set must be written as {..}, got '" + std::string(text) + "'");
  NodeSet out;
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t p = 0;
  while (p < body.size()) {
    std::size_t comma = body.find(',', p);
    std::string_view num = body.substr(
        p, comma == std::string_view::npos ? std::string_view::npos : comma - p);
    if (num.empty()) throw Error("node set: empty entry at offset " + std::to_string(p));
    int v = 0;
    for (char ch : num) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error("node set: bad entry '" + std::string(num) + "' at offset " +
                    std::to_string(p));
      v = v * 10 + (ch - '0');
    }
    if (v < 1 || v > rank)
      throw Error("node set: index " + std::to_string(v) + " out of range 1.." +
                  std::to_string(rank));
    out.add(v - 1);
    if (comma == std::string_view::npos) break;
    p = comma + 1;
  }
  return out;
}

namespace {

Triple parse_triple_literal(const RootSystem& rs1, const RootSystem& rs2,
                            std::string_view spec) {
  NodeSet a1, a2;
  std::vector<std::pair<int, int>> pairs;
  Y2Preset preset = Y2Preset::identification;
  bool saw_a1 = false, saw_a2 = false, saw_map = false;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t next = spec.find(';', pos);
    std::string_view field = spec.substr(
        pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    std::size_t eq = field.find('=');
    if (eq == std::string_view::npos)
      throw Error("triple literal: missing '=' at offset " + std::to_string(pos));
    std::string_view key = field.substr(0, eq);
    std::string_view val = field.substr(eq + 1);
    if (key == "A1") {
      a1 = parse_node_set(val, rs1.rank());
      saw_a1 = true;
    } else if (key == "A2") {
      a2 = parse_node_set(val, rs2.rank());
      saw_a2 = true;
    } else if (key == "a") {
      if (val.size() < 2 || val.front() != '{' || val.back() != '}')
        throw Error("triple literal: map wants {..} at offset " + std::to_string(pos));
      std::string_view body = val.substr(1, val.size() - 2);
      std::size_t p = 0;
      while (p < body.size()) {
        std::size_t comma = body.find(',', p);
        std::string_view ent = body.substr(
            p, comma == std::string_view::npos ? std::string_view::npos : comma - p);
        std::size_t arrow = ent.find("->");
        if (arrow == std::string_view::npos)
          throw Error("triple literal: map entry '" + std::string(ent) +
                      "' wants i->j at offset " + std::to_string(pos + p));
        auto read_num = [&](std::string_view t) {
          if (t.empty()) throw Error("triple literal: empty map index");
          int v = 0;
          for (char ch : t) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
              throw Error("triple literal: bad map index '" + std::string(t) + "'");
            v = v * 10 + (ch - '0');
          }
          return v;
        };
        int i = read_num(ent.substr(0, arrow));
        int j = read_num(ent.substr(arrow + 2));
        if (i < 1 || i > rs1.rank() || j < 1 || j > rs2.rank())
          throw Error("triple literal: map index out of range in '" + std::string(ent) + "'");
        pairs.emplace_back(i - 1, j - 1);
        if (comma == std::string_view::npos) break;
        p = comma + 1;
      }
      saw_map = true;
    } else if (key == "preset") {
      if (val == "identification")
        preset = Y2Preset::identification;
      else if (val == "product")
        preset = Y2Preset::product;
      else
        throw Error("triple literal: unknown preset '" + std::string(val) + "'");
    } else {
      throw Error("triple literal: unknown field '" + std::string(key) +
                  "' at offset " + std::to_string(pos));
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (!saw_a1 || !saw_a2 || !saw_map)
    throw Error("triple literal needs fields A1, A2, a");
  Triple t{a1, a2, DiagramIso::from_pairs(rs1.rank(), rs2.rank(), pairs), preset};
  if (auto v = validate_triple(rs1, rs2, t)) throw Error("invalid triple: " + v->message);
  return t;
}

}  // namespace

Triple resolve_triple(const RootSystem& rs1, const RootSystem& rs2,
                      std::string_view spec) {
  if (spec == "trivial")
    return make_empty_triple(rs1.rank(), rs2.rank(), Y2Preset::product);
  if (spec == "diag") {
    if (rs1.type_string() != rs2.type_string())
      throw Error("preset 'diag' needs both factors of the same type");
    return make_identity_triple(rs1.rank(), Y2Preset::identification);
  }
  if (spec == "swap") {
    if (rs1.type_string() != "A2" || rs2.type_string() != "A2")
      throw Error("preset 'swap' is defined for type A2 only");
    Triple t{NodeSet::of({0}), NodeSet::of({1}),
             DiagramIso::from_pairs(2, 2, {{0, 1}}), Y2Preset::identification};
    return t;
  }
  if (spec.find('=') == std::string_view::npos)
    throw Error("unknown triple preset '" + std::string(spec) +
                "' (expected trivial, diag, swap, or a literal)");
  return parse_triple_literal(rs1, rs2, spec);
}

std::string triple_to_string(const Triple& t) {
  std::string out = "A1=" + node_set_to_string(t.a1) + ";A2=" + node_set_to_string(t.a2) + ";a={";
  bool first = true;
  for (int i : t.a1) {
    if (!first) out += ',';
    out += std::to_string(i + 1) + "->" + std::to_string(t.iso.apply(i) + 1);
    first = false;
  }
  out += "};preset=";
  out += (t.preset == Y2Preset::identification ? "identification" : "product");
  return out;
}

std::string gg_label(const WeylGroup& g1, const WeylGroup& g2, WeylElt v1, WeylElt v2) {
  return "v1=" + g1.to_string(v1) + ";v2=" + g2.to_string(v2);
}

std::pair<WeylElt, WeylElt> parse_gg_index(const WeylGroup& g1, const WeylGroup& g2,
                                           std::string_view text) {
  WeylElt v1 = g1.identity(), v2 = g2.identity();
  bool saw1 = false, saw2 = false;
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
    if (key == "v1") {
      v1 = g1.parse(val);
      saw1 = true;
    } else if (key == "v2") {
      v2 = g2.parse(val);
      saw2 = true;
    } else {
      throw Error("piece index: unknown field '" + std::string(key) + "'");
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (!saw1 || !saw2) throw Error("piece index needs fields v1 and v2");
  return {v1, v2};
}

}  // namespace wcalc
