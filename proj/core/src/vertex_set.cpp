#include "doob/vertex_set.hpp"

#include <algorithm>

#include "doob/error.hpp"

namespace doob {

namespace {

std::size_t word_count(const DoobParams& p) { return static_cast<std::size_t>((p.vertex_count() + 63) / 64); }

}  // namespace

VertexSet::VertexSet(DoobParams params) : params_(params), words_(word_count(params), 0) {}

VertexSet::VertexSet(DoobParams params, std::initializer_list<VertexIndex> members)
    : VertexSet(params, std::span<const VertexIndex>(members.begin(), members.size())) {}

VertexSet::VertexSet(DoobParams params, std::span<const VertexIndex> members) : VertexSet(params) {
  for (const VertexIndex v : members) {
    if (v >= universe_size()) throw InvalidArgument("vertex index out of range");
    insert(v);
  }
}

VertexSet VertexSet::full(DoobParams params) {
  VertexSet s(params);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.trim();
  return s;
}

VertexSet VertexSet::from_mask(DoobParams params, std::uint64_t mask) {
  VertexSet s(params);
  s.words_[0] = mask;
  s.trim();
  return s;
}

VertexSet VertexSet::from_words(DoobParams params, std::span<const Word> words) {
  VertexSet s(params);
  if (words.size() != s.words_.size()) throw InvalidArgument("word count does not match the graph");
  std::copy(words.begin(), words.end(), s.words_.begin());
  s.trim();
  return s;
}

void VertexSet::trim() {
  const auto size = universe_size();
  if (size % 64 != 0) words_.back() &= (Word{1} << (size % 64)) - 1;
}

std::size_t VertexSet::count() const {
  std::size_t total = 0;
  for (const Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

VertexIndex VertexSet::min_member() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<VertexIndex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  }
  return static_cast<VertexIndex>(universe_size());
}

VertexSet VertexSet::complement() const {
  VertexSet out(params_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  out.trim();
  return out;
}

void VertexSet::require_same(const VertexSet& other) const {
  if (!(params_ == other.params_)) {
    throw ParamMismatch("vertex sets of " + params_.to_string() + " and " + other.params_.to_string());
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  a.require_same(b);
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const auto diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) return (a.words_[w] & (diff & (~diff + 1))) != 0;
  }
  return false;
}

std::vector<VertexIndex> VertexSet::members() const {
  std::vector<VertexIndex> out;
  out.reserve(count());
  for_each([&](VertexIndex v) { out.push_back(v); });
  return out;
}

std::size_t VertexSet::hash() const {
  // FNV-1a over the words, seeded by the parameters.
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(params_.m() * 131 + params_.n());
  for (const Word w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace doob
