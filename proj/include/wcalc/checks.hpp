#pragma once

// Named verification checks over a configured context.  Each check runs an
// exhaustive (desk-scale) scan and reports pass/fail with a short detail
// line.  The subword-based Bruhat oracle lives here, independent of the
// descent-recursion path used by the library itself.

#include <optional>
#include <string>
#include <vector>

#include "wcalc/pieces_gg.hpp"
#include "wcalc/pieces_wonderful.hpp"

namespace wcalc::checks {

struct Result {
  std::string name;
  bool pass = false;
  std::string detail;
};

// u <= w decided by searching for a reduced subword inside the canonical
// reduced word of w.
bool subword_leq_oracle(const WeylGroup& g, WeylElt u, WeylElt w);

// Every reduced word of w (right-descent recursion); throws past the cap.
std::vector<std::vector<int>> all_reduced_words(const WeylGroup& g, WeylElt w,
                                                std::size_t cap = 100000);

// Empty when the matrix is reflexive, antisymmetric and transitive;
// otherwise a description of the first violation.
std::string order_axiom_violation(const BitMatrix& m);

std::vector<Result> appendix_suite(const WeylGroup& g);
std::vector<Result> counting_suite(const WonderfulContext& ctx,
                                   std::optional<std::size_t> expected = {});
std::vector<Result> closures_suite(const WonderfulContext& ctx);
std::vector<Result> specialization_suite(const WonderfulContext& ctx);
std::vector<Result> dims_suite(const WonderfulContext& ctx);
std::vector<Result> induction_suite(const PairContext& ctx);
std::vector<Result> gg_suite(const PairContext& ctx);
std::vector<Result> wc_identity_suite(const WeylGroup& g);

bool all_pass(const std::vector<Result>& results);

}  // namespace wcalc::checks
