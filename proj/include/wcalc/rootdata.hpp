#pragma once

// Root systems of types A-G at small rank, with explicit positive roots,
// integer Cartan pairings, and subset utilities.  Everything is exact: roots
// are integer coefficient vectors over the simple roots, and reflections are
// computed from the Cartan matrix alone.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wcalc {

// User-facing failure: malformed input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxTotalRank = 6;
inline constexpr std::uint64_t kMaxWeylOrder = 1152;

// Subset of simple-root indices (0-based), packed as a bitmask.
class NodeSet {
 public:
  constexpr NodeSet() = default;

  static constexpr NodeSet none() { return NodeSet(); }
  static constexpr NodeSet from_bits(std::uint32_t b) { return NodeSet(b); }
  static NodeSet all(int rank) {
    return NodeSet(rank >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << rank) - 1);
  }
  static NodeSet of(std::initializer_list<int> idx) {
    NodeSet s;
    for (int i : idx) s.add(i);
    return s;
  }

  std::uint32_t bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  void add(int i) { bits_ |= std::uint32_t{1} << i; }
  void remove(int i) { bits_ &= ~(std::uint32_t{1} << i); }
  int size() const { return __builtin_popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  NodeSet intersect(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  NodeSet unite(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  NodeSet minus(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }

  bool operator==(const NodeSet&) const = default;
  bool operator<(NodeSet o) const { return bits_ < o.bits_; }

  class iterator {
   public:
    explicit iterator(std::uint32_t b) : rest_(b) {}
    int operator*() const { return __builtin_ctz(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint32_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  constexpr explicit NodeSet(std::uint32_t b) : bits_(b) {}
  std::uint32_t bits_ = 0;
};

// A root written in the basis of simple roots.  Either the root or its
// negation appears in the positive system.
struct Root {
  std::vector<int> coeff;
  bool operator==(const Root&) const = default;
};

struct Component {
  char letter;  // 'A'..'G'
  int rank;
};

class RootSystem {
 public:
  int rank() const { return rank_; }
  const std::vector<Component>& components() const { return components_; }

  // cartan(i, j) = <alpha_j, alpha_i^vee>; 2 on the diagonal.
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  Root simple_root(int i) const;
  int pairing(const Root& r, int i) const;  // <r, alpha_i^vee>
  Root reflect(const Root& r, int i) const; // r - pairing(r,i) * alpha_i

  bool is_positive(const Root& r) const;
  bool is_negative(const Root& r) const;
  // Index i when r == alpha_i, else -1.
  int simple_index(const Root& r) const;
  // Index into positive_roots(), or -1.
  int pos_root_index(const Root& r) const;

  // Number of positive roots supported entirely on S.
  int pos_roots_in_span(NodeSet S) const;
  // Root count of the unipotent radical of the standard parabolic of S.
  int dim_u(NodeSet S) const { return num_positive() - pos_roots_in_span(S); }

  std::string type_string() const;  // normalized, e.g. "A2xB3"
  std::uint64_t weyl_order() const; // classical closed form

 private:
  friend RootSystem build_root_system(std::string_view);

  int rank_ = 0;
  std::vector<Component> components_;
  std::vector<int> cartan_;     // rank x rank
  std::vector<Root> positive_;  // sorted by (height, coefficients)
};

// Parse a type string like "A2", "b3", "A1xA1" (case-insensitive, components
// joined by 'x') and construct the root system.  Throws Error on unknown
// letters, out-of-range ranks, or total rank above kMaxTotalRank.
RootSystem build_root_system(std::string_view type_spec);

}  // namespace wcalc
