#pragma once

// Finite Weyl groups, enumerated explicitly.  An element is canonically
// represented by its action table on the simple roots; the enumeration is
// sorted by (length, lexicographically least reduced word), which fixes a
// deterministic index for every element.  Bruhat order is decided by the
// descent recursion over a memoized table.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcalc/rootdata.hpp"
#include "wcalc/util.hpp"

namespace wcalc {

// Handle to an element of one WeylGroup.  `group` is the owning group's
// serial, `idx` the canonical index.
struct WeylElt {
  std::uint32_t group = 0;
  std::uint32_t idx = 0;
  friend bool operator==(WeylElt, WeylElt) = default;
  friend std::strong_ordering operator<=>(WeylElt, WeylElt) = default;
};

enum class Side {
  right,  // quotient W / W_J; minimal reps send every alpha in J positive
  left,   // quotient W_J \ W; inverses of the above
};

enum class WwuKind {
  lower,  // find u1 <= u with w_small * u1 <= w_big * u
  upper,  // find u2 <= u with w_small * u  <= w_big * u2
};

class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const RootSystem& rs() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t order() const { return n_; }
  std::uint32_t id() const { return id_; }

  WeylElt at(std::size_t i) const { return WeylElt{id_, static_cast<std::uint32_t>(i)}; }
  std::size_t index(WeylElt w) const { check(w); return w.idx; }
  WeylElt identity() const { return at(0); }
  WeylElt simple(int i) const;

  int length(WeylElt w) const { check(w); return length_[w.idx]; }
  const std::vector<int>& word(WeylElt w) const { check(w); return word_[w.idx]; }
  const Root& simple_image(WeylElt w, int i) const {
    check(w);
    return images_[w.idx * rank_ + i];
  }

  Root act(WeylElt w, const Root& r) const;
  WeylElt mul(WeylElt u, WeylElt w) const;
  WeylElt inv(WeylElt w) const { check(w); return at(inv_[w.idx]); }
  WeylElt right_mul_gen(WeylElt w, int s) const { check(w); return at(rmul_[w.idx * rank_ + s]); }
  WeylElt left_mul_gen(int s, WeylElt w) const { check(w); return at(lmul_[w.idx * rank_ + s]); }

  // Index of w(alpha_i) when that image is a simple root, else -1.
  int simple_to_simple(WeylElt w, int i) const {
    return rs_.simple_index(simple_image(w, i));
  }
  // { j : w(alpha_s) == alpha_j for some s in S }
  NodeSet simple_image_set(WeylElt w, NodeSet S) const;

  bool bruhat_leq(WeylElt u, WeylElt w) const;

  WeylElt longest_element(NodeSet J) const;

  bool is_min_rep(WeylElt w, NodeSet J, Side side) const;
  const std::vector<WeylElt>& min_coset_reps(NodeSet J, Side side) const;
  // ^A W^C, canonical order.
  std::vector<WeylElt> double_min_reps(NodeSet A, NodeSet C) const;
  const std::vector<WeylElt>& parabolic_elements(NodeSet J) const;  // W_J
  bool in_parabolic(WeylElt w, NodeSet J) const;

  // side == right: w = first * second with first in W^J, second in W_J.
  // side == left:  w = first * second with first in W_J, second in ^J W.
  std::pair<WeylElt, WeylElt> parabolic_factor(WeylElt w, NodeSet J, Side side) const;

  // For v in ^A W: the unique v = x * u with x in ^A W^C and
  // u in ^(C n x^-1(A)) W_C.  Throws Error when v is not in ^A W.
  std::pair<WeylElt, WeylElt> carter_factor(WeylElt v, NodeSet A, NodeSet C) const;

  // { x : B x B inside B y B z B }, computed by folding a reduced word of z.
  std::vector<WeylElt> demazure_set(WeylElt y, WeylElt z) const;

  // The unique maximal element of { v*w : v <= u }.
  WeylElt max_below(WeylElt u, WeylElt w) const;

  // First witness (canonical order) for the two coset-witness statements;
  // requires w_small <= w_big.
  WeylElt wwu_witness(WwuKind kind, WeylElt u, WeylElt w_small, WeylElt w_big) const;

  std::string to_string(WeylElt w) const;   // "e" or "s1 s2 s1"
  WeylElt parse(std::string_view text) const;

  // Bruhat table blob (row w, bit u), for the persistent cache.
  const std::vector<std::uint64_t>& bruhat_blob() const;
  std::size_t bruhat_blob_words() const;
  bool bruhat_ready() const { return bruhat_.size() != 0; }
  bool install_bruhat_blob(std::vector<std::uint64_t> blob) const;

 private:
  void check(WeylElt w) const {
    if (w.group != id_ || w.idx >= n_)
      throw Error("Weyl element does not belong to this group");
  }
  void build_bruhat() const;
  int first_right_descent(std::size_t idx) const;

  RootSystem rs_;
  int rank_ = 0;
  std::size_t n_ = 0;
  std::uint32_t id_ = 0;

  std::vector<Root> images_;            // n * rank, images of simple roots
  std::vector<int> length_;
  std::vector<std::vector<int>> word_;  // lex-least reduced words
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> rmul_;     // n * rank
  std::vector<std::uint32_t> lmul_;     // n * rank

  mutable BitMatrix bruhat_;  // built on first use
  mutable std::map<std::pair<std::uint32_t, int>, std::vector<WeylElt>> coset_cache_;
  mutable std::map<std::uint32_t, std::vector<WeylElt>> parabolic_cache_;
};

}  // namespace wcalc
