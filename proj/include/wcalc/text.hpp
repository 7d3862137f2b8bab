#pragma once

// Textual forms used by the CLI and the file formats: node subsets, triple
// literals and presets, and product-piece labels.

#include <string>
#include <string_view>
#include <utility>

#include "wcalc/triples.hpp"

namespace wcalc {

std::string node_set_to_string(NodeSet s);  // "{}", "{1,3}" (1-based)
NodeSet parse_node_set(std::string_view text, int rank);

// Accepts a preset name (trivial, diag, swap) or a literal of the form
//   A1={1};A2={2};a={1->2};preset=identification
// Node indices are 1-based.  Errors carry the offset of the bad token.
Triple resolve_triple(const RootSystem& rs1, const RootSystem& rs2,
                      std::string_view spec);

std::string triple_to_string(const Triple& t);

std::string gg_label(const WeylGroup& g1, const WeylGroup& g2, WeylElt v1, WeylElt v2);
std::pair<WeylElt, WeylElt> parse_gg_index(const WeylGroup& g1, const WeylGroup& g2,
                                           std::string_view text);

}  // namespace wcalc
