#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace latkit {

/// Dense square boolean matrix, one packed row per element.
class BitMatrix {
 public:
  using word = std::uint64_t;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v = true) noexcept {
    word& w = bits_[i * words_ + j / 64];
    const word mask = word{1} << (j % 64);
    w = v ? (w | mask) : (w & ~mask);
  }

  std::span<const word> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }
  std::span<word> row(std::size_t i) noexcept {
    return {bits_.data() + i * words_, words_};
  }

  /// row(dst) |= row(src)
  void or_row(std::size_t dst, std::size_t src) noexcept {
    word* d = bits_.data() + dst * words_;
    const word* s = bits_.data() + src * words_;
    for (std::size_t k = 0; k < words_; ++k) d[k] |= s[k];
  }

  std::size_t row_count(std::size_t i) const noexcept {
    std::size_t c = 0;
    for (word w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (word w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for_each_in_row(i, [&](std::size_t j) { t.set(j, i); });
    return t;
  }

  /// Calls f(j) for every set bit j of row i, in increasing order.
  template <class F>
  void for_each_in_row(std::size_t i, F&& f) const {
    const word* r = bits_.data() + i * words_;
    for (std::size_t k = 0; k < words_; ++k) {
      word w = r[k];
      while (w) {
        const auto b = static_cast<std::size_t>(std::countr_zero(w));
        f(k * 64 + b);
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<word> bits_;
};

/// Growable bitset sized once; used for element subsets.
class BitSet {
 public:
  using word = std::uint64_t;

  BitSet() = default;
  explicit BitSet(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}
  BitSet(std::size_t n, std::span<const word> words) : n_(n), bits_(words.begin(), words.end()) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i) const noexcept { return (bits_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) noexcept {
    const word mask = word{1} << (i % 64);
    bits_[i / 64] = v ? (bits_[i / 64] | mask) : (bits_[i / 64] & ~mask);
  }
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (word w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](word w) { return w == 0; });
  }
  bool is_subset_of(const BitSet& o) const noexcept {
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] & ~o.bits_[k]) return false;
    return true;
  }
  bool intersects(const BitSet& o) const noexcept {
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] & o.bits_[k]) return true;
    return false;
  }
  BitSet& operator&=(const BitSet& o) noexcept {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= o.bits_[k];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) noexcept {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= o.bits_[k];
    return *this;
  }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      word w = bits_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::span<const word> words() const noexcept { return bits_; }

  friend bool operator==(const BitSet&, const BitSet&) = default;
  friend auto operator<=>(const BitSet& a, const BitSet& b) { return a.bits_ <=> b.bits_; }

 private:
  std::size_t n_ = 0;
  std::vector<word> bits_;
};

}  // namespace latkit
