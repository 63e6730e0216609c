#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace genpos {

/// Fixed-size dynamic bitset over vertex ids. All binary operations require
/// operands of equal size; this is asserted only in debug builds since the
/// solvers call them in their innermost loops.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_(word_count(size), 0) {}

  static Bitset full(int size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~Word{0};
    b.trim();
    return b;
  }

  int size() const noexcept { return size_; }

  bool test(int i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(int i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(int i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  /// Smallest set index >= from, or -1.
  int next(int from = 0) const noexcept {
    if (from >= size_) return -1;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return static_cast<int>(wi * kWordBits + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }
  int first() const noexcept { return next(0); }

  bool is_subset_of(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  int intersection_count(const Bitset& o) const noexcept {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  Bitset complemented() const {
    Bitset b(*this);
    for (auto& w : b.words_) w = ~w;
    b.trim();
    return b;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = first(); i >= 0; i = next(i + 1)) out.push_back(i);
    return out;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

 private:
  static std::size_t word_count(int size) { return (static_cast<std::size_t>(size) + kWordBits - 1) / kWordBits; }
  void trim() noexcept {
    if (size_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  int size_ = 0;
  std::vector<Word> words_;
};

}  // namespace genpos
