#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pclat {

/// Square boolean matrix stored as packed 64-bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }

  std::span<std::uint64_t> row(std::size_t r) noexcept {
    return {bits_.data() + r * words_, words_};
  }
  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_, words_};
  }

  // row(dst) |= row(src)
  void or_row(std::size_t dst, std::size_t src) noexcept {
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }

  std::size_t count(std::size_t r) const noexcept {
    std::size_t total = 0;
    for (auto w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Calls f(index) for every set bit of a packed row, in increasing order.
template <typename F>
void for_each_bit(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = row[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      f(static_cast<int>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
}

}  // namespace pclat
