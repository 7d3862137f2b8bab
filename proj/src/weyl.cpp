#include "wcalc/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>

namespace wcalc {

namespace {

std::uint32_t next_group_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1);
}

std::vector<int> flatten(const std::vector<Root>& images) {
  std::vector<int> key;
  for (const Root& r : images) key.insert(key.end(), r.coeff.begin(), r.coeff.end());
  return key;
}

}  // namespace

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)), rank_(rs_.rank()), id_(next_group_id()) {
  const std::uint64_t expected = rs_.weyl_order();
  if (expected > kMaxWeylOrder)
    throw Error("Weyl group of " + rs_.type_string() + " has order " +
                std::to_string(expected) + ", above the enumeration cap of " +
                std::to_string(kMaxWeylOrder));

  // Closure under right multiplication by simple reflections.
  std::map<std::vector<int>, std::uint32_t> lookup;
  std::vector<std::vector<int>> bfs_word;  // some reduced word per element
  std::vector<Root> id_images;
  for (int i = 0; i < rank_; ++i) id_images.push_back(rs_.simple_root(i));
  lookup[flatten(id_images)] = 0;
  images_ = id_images;
  bfs_word.push_back({});

  auto act_raw = [&](std::size_t e, const Root& r) {
    Root out{std::vector<int>(rank_, 0)};
    for (int j = 0; j < rank_; ++j) {
      if (r.coeff[j] == 0) continue;
      const Root& img = images_[e * rank_ + j];
      for (int k = 0; k < rank_; ++k) out.coeff[k] += r.coeff[j] * img.coeff[k];
    }
    return out;
  };

  for (std::size_t head = 0; head * static_cast<std::size_t>(rank_) < images_.size(); ++head) {
    for (int s = 0; s < rank_; ++s) {
      // (w s)(alpha_j) = w(s(alpha_j))
      std::vector<Root> next(rank_);
      for (int j = 0; j < rank_; ++j) next[j] = act_raw(head, rs_.reflect(rs_.simple_root(j), s));
      std::vector<int> key = flatten(next);
      if (!lookup.count(key)) {
        lookup[key] = static_cast<std::uint32_t>(bfs_word.size());
        images_.insert(images_.end(), next.begin(), next.end());
        std::vector<int> w = bfs_word[head];
        w.push_back(s);
        bfs_word.push_back(std::move(w));
      }
    }
  }
  n_ = bfs_word.size();
  if (n_ != expected)
    throw std::logic_error("Weyl enumeration disagrees with the classical order formula");

  // Lengths: positive roots sent negative.
  length_.assign(n_, 0);
  for (std::size_t e = 0; e < n_; ++e) {
    int l = 0;
    for (const Root& beta : rs_.positive_roots())
      if (rs_.is_negative(act_raw(e, beta))) ++l;
    length_[e] = l;
  }

  // Multiplication tables against generators.
  rmul_.assign(n_ * rank_, 0);
  lmul_.assign(n_ * rank_, 0);
  for (std::size_t e = 0; e < n_; ++e) {
    for (int s = 0; s < rank_; ++s) {
      std::vector<Root> r(rank_), l(rank_);
      for (int j = 0; j < rank_; ++j) {
        r[j] = act_raw(e, rs_.reflect(rs_.simple_root(j), s));
        l[j] = rs_.reflect(images_[e * rank_ + j], s);
      }
      rmul_[e * rank_ + s] = lookup.at(flatten(r));
      lmul_[e * rank_ + s] = lookup.at(flatten(l));
    }
  }

  // Inverses: fold the reversed BFS word from the identity.
  inv_.assign(n_, 0);
  for (std::size_t e = 0; e < n_; ++e) {
    std::uint32_t cur = 0;
    const std::vector<int>& w = bfs_word[e];
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = rmul_[cur * rank_ + *it];
    inv_[e] = cur;
  }

  // Lexicographically least reduced words, by greedy smallest left descent.
  // s is a left descent of w iff w^-1(alpha_s) is negative.
  word_.assign(n_, {});
  std::vector<std::size_t> by_len(n_);
  std::iota(by_len.begin(), by_len.end(), 0);
  std::sort(by_len.begin(), by_len.end(),
            [&](std::size_t a, std::size_t b) { return length_[a] < length_[b]; });
  for (std::size_t e : by_len) {
    if (length_[e] == 0) continue;
    int s = -1;
    for (int i = 0; i < rank_ && s < 0; ++i)
      if (rs_.is_negative(images_[inv_[e] * rank_ + i])) s = i;
    std::uint32_t rest = lmul_[e * rank_ + s];
    word_[e].push_back(s);
    word_[e].insert(word_[e].end(), word_[rest].begin(), word_[rest].end());
  }

  // Canonical order: (length, lex word).  Remap every table.
  std::vector<std::uint32_t> perm(n_);  // canonical position -> old index
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (length_[a] != length_[b]) return length_[a] < length_[b];
    return word_[a] < word_[b];
  });
  std::vector<std::uint32_t> where(n_);  // old index -> canonical position
  for (std::uint32_t pos = 0; pos < n_; ++pos) where[perm[pos]] = pos;

  std::vector<Root> images2(n_ * rank_);
  std::vector<int> length2(n_);
  std::vector<std::vector<int>> word2(n_);
  std::vector<std::uint32_t> inv2(n_), rmul2(n_ * rank_), lmul2(n_ * rank_);
  for (std::uint32_t pos = 0; pos < n_; ++pos) {
    std::uint32_t old = perm[pos];
    for (int j = 0; j < rank_; ++j) images2[pos * rank_ + j] = images_[old * rank_ + j];
    length2[pos] = length_[old];
    word2[pos] = word_[old];
    inv2[pos] = where[inv_[old]];
    for (int s = 0; s < rank_; ++s) {
      rmul2[pos * rank_ + s] = where[rmul_[old * rank_ + s]];
      lmul2[pos * rank_ + s] = where[lmul_[old * rank_ + s]];
    }
  }
  images_ = std::move(images2);
  length_ = std::move(length2);
  word_ = std::move(word2);
  inv_ = std::move(inv2);
  rmul_ = std::move(rmul2);
  lmul_ = std::move(lmul2);
}

WeylElt WeylGroup::simple(int i) const {
  if (i < 0 || i >= rank_) throw Error("simple-reflection index out of range");
  // right_mul_gen from the identity
  return at(rmul_[0 * rank_ + i]);
}

Root WeylGroup::act(WeylElt w, const Root& r) const {
  check(w);
  if (static_cast<int>(r.coeff.size()) != rank_) throw Error("root has wrong rank");
  Root out{std::vector<int>(rank_, 0)};
  for (int j = 0; j < rank_; ++j) {
    if (r.coeff[j] == 0) continue;
    const Root& img = images_[w.idx * rank_ + j];
    for (int k = 0; k < rank_; ++k) out.coeff[k] += r.coeff[j] * img.coeff[k];
  }
  return out;
}

WeylElt WeylGroup::mul(WeylElt u, WeylElt w) const {
  check(u);
  check(w);
  std::uint32_t cur = u.idx;
  for (int s : word_[w.idx]) cur = rmul_[cur * rank_ + s];
  return at(cur);
}

NodeSet WeylGroup::simple_image_set(WeylElt w, NodeSet S) const {
  NodeSet out;
  for (int s : S) {
    int j = simple_to_simple(w, s);
    if (j >= 0) out.add(j);
  }
  return out;
}

int WeylGroup::first_right_descent(std::size_t idx) const {
  for (int s = 0; s < rank_; ++s)
    if (rs_.is_negative(images_[idx * rank_ + s])) return s;
  return -1;
}

void WeylGroup::build_bruhat() const {
  BitMatrix m(n_);  // row w, bit u: u <= w
  m.set(0, 0);
  for (std::size_t w = 1; w < n_; ++w) {
    int s = first_right_descent(w);
    std::size_t ws = rmul_[w * rank_ + s];
    for (std::size_t u = 0; u < n_; ++u) {
      std::size_t us = rmul_[u * rank_ + s];
      bool le = (length_[us] < length_[u]) ? m.get(ws, us) : m.get(ws, u);
      if (le) m.set(w, u);
    }
  }
  bruhat_ = std::move(m);
}

bool WeylGroup::bruhat_leq(WeylElt u, WeylElt w) const {
  check(u);
  check(w);
  if (!bruhat_ready()) build_bruhat();
  return bruhat_.get(w.idx, u.idx);
}

const std::vector<std::uint64_t>& WeylGroup::bruhat_blob() const {
  if (!bruhat_ready()) build_bruhat();
  return bruhat_.blocks();
}

std::size_t WeylGroup::bruhat_blob_words() const { return n_ * ((n_ + 63) / 64); }

bool WeylGroup::install_bruhat_blob(std::vector<std::uint64_t> blob) const {
  if (blob.size() != bruhat_blob_words()) return false;
  BitMatrix m = BitMatrix::from_blocks(n_, std::move(blob));
  // Structural sanity before accepting foreign bits.
  for (std::size_t w = 0; w < n_; ++w) {
    if (!m.get(w, 0) || !m.get(w, w)) return false;          // e <= w, w <= w
    if (!m.get(n_ - 1, w)) return false;                      // w <= w0
    if (w > 0 && m.get(0, w)) return false;                   // only e <= e
  }
  for (std::size_t w = 0; w < n_; ++w)
    for (std::size_t u = 0; u < n_; ++u)
      if (m.get(w, u) && length_[u] > length_[w]) return false;
  bruhat_ = std::move(m);
  return true;
}

WeylElt WeylGroup::longest_element(NodeSet J) const {
  std::uint32_t cur = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : J) {
      if (rs_.is_positive(images_[cur * rank_ + s])) {
        cur = rmul_[cur * rank_ + s];
        moved = true;
        break;
      }
    }
  }
  return at(cur);
}

bool WeylGroup::is_min_rep(WeylElt w, NodeSet J, Side side) const {
  check(w);
  std::size_t e = (side == Side::right) ? w.idx : inv_[w.idx];
  for (int s : J)
    if (!rs_.is_positive(images_[e * rank_ + s])) return false;
  return true;
}

const std::vector<WeylElt>& WeylGroup::min_coset_reps(NodeSet J, Side side) const {
  auto key = std::make_pair(J.bits(), side == Side::right ? 1 : 0);
  auto it = coset_cache_.find(key);
  if (it != coset_cache_.end()) return it->second;
  std::vector<WeylElt> reps;
  for (std::size_t e = 0; e < n_; ++e)
    if (is_min_rep(at(e), J, side)) reps.push_back(at(e));
  return coset_cache_.emplace(key, std::move(reps)).first->second;
}

std::vector<WeylElt> WeylGroup::double_min_reps(NodeSet A, NodeSet C) const {
  std::vector<WeylElt> reps;
  for (std::size_t e = 0; e < n_; ++e)
    if (is_min_rep(at(e), A, Side::left) && is_min_rep(at(e), C, Side::right))
      reps.push_back(at(e));
  return reps;
}

bool WeylGroup::in_parabolic(WeylElt w, NodeSet J) const {
  check(w);
  for (int s : word_[w.idx])
    if (!J.contains(s)) return false;
  return true;
}

const std::vector<WeylElt>& WeylGroup::parabolic_elements(NodeSet J) const {
  auto it = parabolic_cache_.find(J.bits());
  if (it != parabolic_cache_.end()) return it->second;
  std::vector<WeylElt> elems;
  for (std::size_t e = 0; e < n_; ++e)
    if (in_parabolic(at(e), J)) elems.push_back(at(e));
  return parabolic_cache_.emplace(J.bits(), std::move(elems)).first->second;
}

std::pair<WeylElt, WeylElt> WeylGroup::parabolic_factor(WeylElt w, NodeSet J, Side side) const {
  check(w);
  std::uint32_t cur = w.idx;
  if (side == Side::right) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int s : J) {
        if (rs_.is_negative(images_[cur * rank_ + s])) {
          cur = rmul_[cur * rank_ + s];
          moved = true;
          break;
        }
      }
    }
    WeylElt first = at(cur);
    WeylElt second = mul(inv(first), w);
    return {first, second};
  }
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : J) {
      if (rs_.is_negative(images_[inv_[cur] * rank_ + s])) {
        cur = lmul_[cur * rank_ + s];
        moved = true;
        break;
      }
    }
  }
  WeylElt second = at(cur);
  WeylElt first = mul(w, inv(second));
  return {first, second};
}

std::pair<WeylElt, WeylElt> WeylGroup::carter_factor(WeylElt v, NodeSet A, NodeSet C) const {
  if (!is_min_rep(v, A, Side::left))
    throw Error("carter_factor: element is not a minimal left-coset representative");
  auto [x, u] = parabolic_factor(v, C, Side::right);
  // The factorization lands in the advertised sets; anything else is a bug.
  NodeSet D;
  for (int g : C) {
    int img = simple_to_simple(x, g);
    if (img >= 0 && A.contains(img)) D.add(g);
  }
  if (!is_min_rep(x, A, Side::left) || !is_min_rep(u, D, Side::left) || !in_parabolic(u, C))
    throw std::logic_error("carter_factor postcondition failed");
  return {x, u};
}

std::vector<WeylElt> WeylGroup::demazure_set(WeylElt y, WeylElt z) const {
  check(y);
  check(z);
  std::vector<char> in(n_, 0);
  in[y.idx] = 1;
  for (int s : word_[z.idx]) {
    std::vector<char> next(n_, 0);
    for (std::size_t e = 0; e < n_; ++e) {
      if (!in[e]) continue;
      std::size_t es = rmul_[e * rank_ + s];
      if (length_[es] > length_[e]) {
        next[es] = 1;
      } else {
        next[e] = 1;
        next[es] = 1;
      }
    }
    in = std::move(next);
  }
  std::vector<WeylElt> out;
  for (std::size_t e = 0; e < n_; ++e)
    if (in[e]) out.push_back(at(e));
  return out;
}

WeylElt WeylGroup::max_below(WeylElt u, WeylElt w) const {
  check(u);
  check(w);
  WeylElt best = w;  // v = e
  for (std::size_t e = 0; e < n_; ++e) {
    if (!bruhat_leq(at(e), u)) continue;
    WeylElt cand = mul(at(e), w);
    if (length(cand) > length(best)) best = cand;
  }
  // The set has a unique maximum; confirm dominance and the length split.
  for (std::size_t e = 0; e < n_; ++e) {
    if (!bruhat_leq(at(e), u)) continue;
    if (!bruhat_leq(mul(at(e), w), best))
      throw std::logic_error("max_below: maximum is not unique");
  }
  WeylElt u1 = mul(best, inv(w));
  if (length(u1) + length(w) != length(best))
    throw std::logic_error("max_below: length does not split");
  return best;
}

WeylElt WeylGroup::wwu_witness(WwuKind kind, WeylElt u, WeylElt w_small, WeylElt w_big) const {
  if (!bruhat_leq(w_small, w_big)) throw Error("wwu_witness: requires w_small <= w_big");
  for (std::size_t e = 0; e < n_; ++e) {
    WeylElt v = at(e);
    if (!bruhat_leq(v, u)) continue;
    bool ok = (kind == WwuKind::lower) ? bruhat_leq(mul(w_small, v), mul(w_big, u))
                                       : bruhat_leq(mul(w_small, u), mul(w_big, v));
    if (ok) return v;
  }
  throw std::logic_error("wwu_witness: no witness found");
}

std::string WeylGroup::to_string(WeylElt w) const {
  check(w);
  if (w.idx == 0) return "e";
  std::string s;
  for (int g : word_[w.idx]) {
    if (!s.empty()) s += ' ';
    s += 's';
    s += std::to_string(g + 1);
  }
  return s;
}

WeylElt WeylGroup::parse(std::string_view text) const {
  WeylElt cur = identity();
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);
    if (tok == "e") {
      any = true;
      continue;
    }
    if (tok.size() < 2 || tok[0] != 's')
      throw Error("bad Weyl word token '" + std::string(tok) + "'");
    int k = 0;
    for (std::size_t p = 1; p < tok.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(tok[p])))
        throw Error("bad Weyl word token '" + std::string(tok) + "'");
      k = k * 10 + (tok[p] - '0');
    }
    if (k < 1 || k > rank_)
      throw Error("simple reflection s" + std::to_string(k) + " out of range for rank " +
                  std::to_string(rank_));
    cur = right_mul_gen(cur, k - 1);
    any = true;
  }
  if (!any) throw Error("empty Weyl word");
  return cur;
}

}  // namespace wcalc
