#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bootperc {

using Vertex = int;

/// Fixed-capacity set of vertex indices backed by `Words` machine words.
///
/// Capacity is `64 * Words`. All operations are constexpr-friendly and
/// allocation free, which is what the subset scans in the search module rely on.
template <std::size_t Words>
class BasicVertexSet {
 public:
  static constexpr std::size_t kWords = Words;
  static constexpr int kCapacity = static_cast<int>(64 * Words);

  constexpr BasicVertexSet() = default;

  BasicVertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static BasicVertexSet from_list(const std::vector<Vertex>& vs) {
    BasicVertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  /// The set {0, ..., n-1}.
  static constexpr BasicVertexSet full(int n) {
    BasicVertexSet s;
    for (std::size_t w = 0; w < Words; ++w) {
      const int lo = static_cast<int>(64 * w);
      if (n >= lo + 64) {
        s.bits_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.bits_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  constexpr bool contains(Vertex v) const {
    return (bits_[word(v)] >> bit(v)) & 1u;
  }
  constexpr void insert(Vertex v) { bits_[word(v)] |= mask(v); }
  constexpr void erase(Vertex v) { bits_[word(v)] &= ~mask(v); }

  constexpr int size() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
  }
  constexpr bool empty() const {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }

  /// Lowest member, or -1 when empty.
  constexpr Vertex first() const {
    for (std::size_t w = 0; w < Words; ++w)
      if (bits_[w]) return static_cast<Vertex>(64 * w) + std::countr_zero(bits_[w]);
    return -1;
  }

  /// Highest member, or -1 when empty.
  constexpr Vertex last() const {
    for (std::size_t w = Words; w-- > 0;)
      if (bits_[w]) return static_cast<Vertex>(64 * w) + 63 - std::countl_zero(bits_[w]);
    return -1;
  }

  constexpr bool is_subset_of(const BasicVertexSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (bits_[w] & ~o.bits_[w]) return false;
    return true;
  }
  constexpr bool intersects(const BasicVertexSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (bits_[w] & o.bits_[w]) return true;
    return false;
  }

  constexpr BasicVertexSet& operator|=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) bits_[w] |= o.bits_[w];
    return *this;
  }
  constexpr BasicVertexSet& operator&=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) bits_[w] &= o.bits_[w];
    return *this;
  }
  /// Set difference.
  constexpr BasicVertexSet& operator-=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) bits_[w] &= ~o.bits_[w];
    return *this;
  }
  friend constexpr BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
  friend constexpr BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
  friend constexpr BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;

  /// Lexicographic order on the sorted member lists.
  friend bool lex_less(const BasicVertexSet& a, const BasicVertexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr iterator(const std::array<std::uint64_t, Words>* bits, std::size_t w, std::uint64_t cur)
        : bits_(bits), w_(w), cur_(cur) {
      skip();
    }
    constexpr Vertex operator*() const { return static_cast<Vertex>(64 * w_) + std::countr_zero(cur_); }
    constexpr iterator& operator++() {
      cur_ &= cur_ - 1;
      skip();
      return *this;
    }
    constexpr iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend constexpr bool operator==(const iterator& a, const iterator& b) { return a.w_ == b.w_ && a.cur_ == b.cur_; }

   private:
    constexpr void skip() {
      while (cur_ == 0 && ++w_ < Words) cur_ = (*bits_)[w_];
      if (cur_ == 0) w_ = Words;
    }
    const std::array<std::uint64_t, Words>* bits_ = nullptr;
    std::size_t w_ = Words;
    std::uint64_t cur_ = 0;
  };

  constexpr iterator begin() const { return iterator(&bits_, 0, bits_[0]); }
  constexpr iterator end() const { return iterator(&bits_, Words, 0); }

  constexpr std::uint64_t word_at(std::size_t w) const { return bits_[w]; }

 private:
  static constexpr std::size_t word(Vertex v) { return static_cast<std::size_t>(v) >> 6; }
  static constexpr unsigned bit(Vertex v) { return static_cast<unsigned>(v) & 63u; }
  static constexpr std::uint64_t mask(Vertex v) { return std::uint64_t{1} << bit(v); }

  std::array<std::uint64_t, Words> bits_{};
};

using VertexSet = BasicVertexSet<1>;

/// Sorts by size, then lexicographically by sorted member list.
struct SizeThenLex {
  template <std::size_t W>
  bool operator()(const BasicVertexSet<W>& a, const BasicVertexSet<W>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  }
};

/// Orders sets by their lowest member.
struct ByFirstMember {
  template <std::size_t W>
  bool operator()(const BasicVertexSet<W>& a, const BasicVertexSet<W>& b) const {
    return a.first() < b.first();
  }
};

/// "0,3,5" style rendering.
template <std::size_t W>
std::string to_string(const BasicVertexSet<W>& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace bootperc
