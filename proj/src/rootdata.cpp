#include "wcalc/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "wcalc/util.hpp"

namespace wcalc {

namespace {

struct RankRange {
  int lo, hi;
};

RankRange allowed_rank(char letter) {
  switch (letter) {
    case 'A': return {1, kMaxTotalRank};
    case 'B': return {2, kMaxTotalRank};
    case 'C': return {2, kMaxTotalRank};
    case 'D': return {3, kMaxTotalRank};
    case 'E': return {6, 6};
    case 'F': return {4, 4};
    case 'G': return {2, 2};
    default: throw Error(std::string("unknown type letter '") + letter + "'");
  }
}

// Cartan block for one simple component, Bourbaki node numbering.
// Entry (i, j) is <alpha_j, alpha_i^vee>.
std::vector<int> cartan_block(char letter, int n) {
  std::vector<int> c(n * n, 0);
  auto at = [&](int i, int j) -> int& { return c[i * n + j]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto edge = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      at(n - 1, n - 2) = -2;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      at(n - 2, n - 1) = -2;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':  // E6: chain 1-3-4-5-6 with 2 attached to 4
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      edge(1, 3);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      at(2, 1) = -2;
      break;
    case 'G':  // alpha_1 short
      at(0, 1) = -3;
      at(1, 0) = -1;
      break;
  }
  return c;
}

int classical_pos_count(char letter, int n) {
  switch (letter) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return 36;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t classical_weyl_order(char letter, int n) {
  switch (letter) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * factorial(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case 'E': return 51840;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

int height(const Root& r) {
  return std::accumulate(r.coeff.begin(), r.coeff.end(), 0);
}

}  // namespace

Root RootSystem::simple_root(int i) const {
  Root r{std::vector<int>(rank_, 0)};
  r.coeff[i] = 1;
  return r;
}

int RootSystem::pairing(const Root& r, int i) const {
  int p = 0;
  for (int j = 0; j < rank_; ++j) p += cartan(i, j) * r.coeff[j];
  return p;
}

Root RootSystem::reflect(const Root& r, int i) const {
  Root out = r;
  out.coeff[i] -= pairing(r, i);
  return out;
}

bool RootSystem::is_positive(const Root& r) const {
  bool nonzero = false;
  for (int c : r.coeff) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

bool RootSystem::is_negative(const Root& r) const {
  bool nonzero = false;
  for (int c : r.coeff) {
    if (c > 0) return false;
    if (c < 0) nonzero = true;
  }
  return nonzero;
}

int RootSystem::simple_index(const Root& r) const {
  int idx = -1;
  for (int j = 0; j < rank_; ++j) {
    if (r.coeff[j] == 0) continue;
    if (r.coeff[j] != 1 || idx >= 0) return -1;
    idx = j;
  }
  return idx;
}

int RootSystem::pos_root_index(const Root& r) const {
  auto it = std::lower_bound(positive_.begin(), positive_.end(), r,
                             [](const Root& a, const Root& b) {
                               int ha = height(a), hb = height(b);
                               if (ha != hb) return ha < hb;
                               return a.coeff < b.coeff;
                             });
  if (it != positive_.end() && *it == r)
    return static_cast<int>(it - positive_.begin());
  return -1;
}

int RootSystem::pos_roots_in_span(NodeSet S) const {
  int n = 0;
  for (const Root& r : positive_) {
    bool in = true;
    for (int j = 0; j < rank_ && in; ++j)
      if (r.coeff[j] != 0 && !S.contains(j)) in = false;
    if (in) ++n;
  }
  return n;
}

std::string RootSystem::type_string() const {
  std::string s;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) s += 'x';
    s += components_[k].letter;
    s += std::to_string(components_[k].rank);
  }
  return s;
}

std::uint64_t RootSystem::weyl_order() const {
  std::uint64_t o = 1;
  for (const Component& c : components_) o *= classical_weyl_order(c.letter, c.rank);
  return o;
}

RootSystem build_root_system(std::string_view type_spec) {
  RootSystem rs;
  std::size_t pos = 0;
  while (pos < type_spec.size()) {
    std::size_t next = type_spec.find_first_of("xX", pos);
    std::string_view tok = type_spec.substr(pos, next == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : next - pos);
    if (tok.empty()) throw Error("empty component in type string");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    int rank = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw Error("bad rank in type component '" + std::string(tok) + "'");
      rank = rank * 10 + (tok[i] - '0');
    }
    if (tok.size() < 2) throw Error("missing rank in type component '" + std::string(tok) + "'");
    RankRange rr = allowed_rank(letter);
    if (rank < rr.lo || rank > rr.hi)
      throw Error("rank out of range for type " + std::string(1, letter) +
                  std::to_string(rank));
    rs.components_.push_back({letter, rank});
    rs.rank_ += rank;
    if (rs.rank_ > kMaxTotalRank)
      throw Error("total rank exceeds the supported cap of " +
                  std::to_string(kMaxTotalRank));
    if (next == std::string_view::npos) break;
    pos = next + 1;
    if (pos == type_spec.size()) throw Error("trailing 'x' in type string");
  }
  if (rs.components_.empty()) throw Error("empty type string");

  // Block-diagonal Cartan matrix, components concatenated.
  const int n = rs.rank_;
  rs.cartan_.assign(n * n, 0);
  int off = 0;
  for (const Component& c : rs.components_) {
    std::vector<int> blk = cartan_block(c.letter, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j)
        rs.cartan_[(off + i) * n + (off + j)] = blk[i * c.rank + j];
    off += c.rank;
  }

  // Positive roots: close the simple roots under all simple reflections,
  // keeping positive results, until nothing new appears.
  std::map<std::vector<int>, bool> seen;
  std::vector<Root> work;
  for (int i = 0; i < n; ++i) {
    Root a = rs.simple_root(i);
    seen[a.coeff] = true;
    work.push_back(a);
  }
  while (!work.empty()) {
    Root r = work.back();
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      Root s = rs.reflect(r, i);
      if (rs.is_positive(s) && !seen.count(s.coeff)) {
        seen[s.coeff] = true;
        work.push_back(s);
      }
    }
  }
  for (auto& [coeff, _] : seen) rs.positive_.push_back(Root{coeff});
  std::sort(rs.positive_.begin(), rs.positive_.end(),
            [](const Root& a, const Root& b) {
              int ha = height(a), hb = height(b);
              if (ha != hb) return ha < hb;
              return a.coeff < b.coeff;
            });

  int expect = 0;
  for (const Component& c : rs.components_) expect += classical_pos_count(c.letter, c.rank);
  if (rs.num_positive() != expect)
    throw std::logic_error("positive-root generation disagrees with the classical count");
  return rs;
}

std::string to_hex(const std::vector<std::uint64_t>& blocks) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(blocks.size() * 16);
  for (std::uint64_t b : blocks)
    for (int k = 15; k >= 0; --k) s += digits[(b >> (4 * k)) & 0xF];
  return s;
}

bool from_hex(const std::string& hex, std::vector<std::uint64_t>& out) {
  if (hex.size() % 16 != 0) return false;
  out.clear();
  out.reserve(hex.size() / 16);
  for (std::size_t i = 0; i < hex.size(); i += 16) {
    std::uint64_t b = 0;
    for (std::size_t k = 0; k < 16; ++k) {
      char c = hex[i + k];
      int v;
      if (c >= '0' && c <= '9')
        v = c - '0';
      else if (c >= 'a' && c <= 'f')
        v = c - 'a' + 10;
      else
        return false;
      b = (b << 4) | static_cast<std::uint64_t>(v);
    }
    out.push_back(b);
  }
  return true;
}

}  // namespace wcalc
