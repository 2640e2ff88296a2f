#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace ecd {

/// Runtime-sized bitset packed into 64-bit words. All binary operations
/// require operands of equal length; tail bits past size() are kept zero.
class Bitset {
public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static Bitset full(std::size_t nbits) {
    Bitset b(nbits);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  /// *this &= ~o
  Bitset& and_not(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  Bitset operator~() const {
    Bitset r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// popcount(*this & o) without materializing the intersection
  std::size_t count_and(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  std::size_t find_first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }

  /// First set bit strictly after pos, or npos.
  std::size_t find_next(std::size_t pos) const {
    if (pos + 1 >= nbits_) return npos;
    std::size_t i = (pos + 1) >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << ((pos + 1) & 63));
    if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    for (++i; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

private:
  void trim() {
    if (nbits_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ecd
