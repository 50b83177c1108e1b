#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "doob/params.hpp"

namespace doob {

/// Dense bit-indexed subset of V(D(m,n)).
///
/// Ordering: A < B iff the smallest element of the symmetric difference
/// belongs to A. On sets of equal size this is lexicographic order of the
/// ascending member lists; it is the order enumerations are emitted in.
class VertexSet {
 public:
  using Word = std::uint64_t;

  explicit VertexSet(DoobParams params);
  VertexSet(DoobParams params, std::initializer_list<VertexIndex> members);
  VertexSet(DoobParams params, std::span<const VertexIndex> members);

  static VertexSet full(DoobParams params);
  /// Bits 0..15 (or 0..3) of `mask` become vertices of D(1,0) (or D(0,1)).
  static VertexSet from_mask(DoobParams params, std::uint64_t mask);
  /// Characteristic vector given as little-endian 64-bit words.
  static VertexSet from_words(DoobParams params, std::span<const Word> words);

  const DoobParams& params() const { return params_; }
  std::uint64_t universe_size() const { return params_.vertex_count(); }

  bool contains(VertexIndex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(VertexIndex v) { words_[v >> 6] |= Word{1} << (v & 63); }
  void erase(VertexIndex v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
  void assign(VertexIndex v, bool value) { value ? insert(v) : erase(v); }
  void flip(VertexIndex v) { words_[v >> 6] ^= Word{1} << (v & 63); }

  std::size_t count() const;
  bool empty() const;
  /// Smallest member; the universe size when empty.
  VertexIndex min_member() const;

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator^=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.params_ == b.params_ && a.words_ == b.words_;
  }
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  std::vector<VertexIndex> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<VertexIndex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  /// Low 64 bits of the characteristic vector; the whole set when the
  /// universe has at most 64 vertices.
  std::uint64_t low_word() const { return words_[0]; }
  std::span<const Word> words() const { return words_; }
  std::size_t hash() const;

 private:
  void require_same(const VertexSet& other) const;
  void trim();

  DoobParams params_;
  std::vector<Word> words_;
};

}  // namespace doob

template <>
struct std::hash<doob::VertexSet> {
  std::size_t operator()(const doob::VertexSet& s) const noexcept { return s.hash(); }
};
