#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcalc {

// Square boolean matrix packed into 64-bit blocks, row-major.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  static BitMatrix from_blocks(std::size_t n, std::vector<std::uint64_t> blocks) {
    BitMatrix m(n);
    if (blocks.size() != m.bits_.size())
      throw std::invalid_argument("BitMatrix::from_blocks: wrong block count");
    m.bits_ = std::move(blocks);
    return m;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1u;
  }

  void set(std::size_t i, std::size_t j, bool v = true) {
    std::uint64_t& blk = bits_[i * stride_ + j / 64];
    const std::uint64_t m = std::uint64_t{1} << (j % 64);
    if (v)
      blk |= m;
    else
      blk &= ~m;
  }

  // True when every bit set in row a is also set in row b.
  bool row_subset(std::size_t a, std::size_t b) const {
    for (std::size_t k = 0; k < stride_; ++k)
      if (bits_[a * stride_ + k] & ~bits_[b * stride_ + k]) return false;
    return true;
  }

  bool operator==(const BitMatrix&) const = default;

  const std::vector<std::uint64_t>& blocks() const { return bits_; }

 private:
  std::size_t n_ = 0, stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

std::string to_hex(const std::vector<std::uint64_t>& blocks);
bool from_hex(const std::string& hex, std::vector<std::uint64_t>& out);

}  // namespace wcalc
