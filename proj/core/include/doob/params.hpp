#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace doob {

using VertexIndex = std::uint32_t;

enum class Factor : std::uint8_t { shrikhande, k4 };

/// Parameters of D(m,n): m Shrikhande coordinates followed by n K4 coordinates.
///
/// Vertex indices are big-endian mixed radix: a Shrikhande coordinate (a,b)
/// contributes the radix-16 digit 4a+b, a K4 coordinate (c,d) the radix-4
/// digit 2c+d, and Shrikhande coordinates come first. Since both radices are
/// powers of two, every coordinate owns a fixed bit field of the index.
class DoobParams {
 public:
  /// Largest supported 2m+n; keeps indices inside 32 bits.
  static constexpr int kMaxWeight = 15;

  DoobParams(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int coordinate_count() const { return m_ + n_; }
  /// 2m+n, the diameter and the Hamming-graph length with the same parameters.
  int weight() const { return 2 * m_ + n_; }
  int degree() const { return 6 * m_ + 3 * n_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << (2 * weight()); }
  std::uint64_t edge_count() const { return vertex_count() * static_cast<std::uint64_t>(degree()) / 2; }

  Factor factor(int coord) const { return coord < m_ ? Factor::shrikhande : Factor::k4; }
  int radix(int coord) const { return coord < m_ ? 16 : 4; }
  int shift(int coord) const;
  VertexIndex stride(int coord) const { return VertexIndex{1} << shift(coord); }

  int digit(VertexIndex v, int coord) const {
    return static_cast<int>((v >> shift(coord)) & static_cast<VertexIndex>(radix(coord) - 1));
  }
  VertexIndex with_digit(VertexIndex v, int coord, int value) const {
    const int s = shift(coord);
    const auto mask = static_cast<VertexIndex>(radix(coord) - 1) << s;
    return (v & ~mask) | (static_cast<VertexIndex>(value) << s);
  }

  /// "D(m,n)"
  std::string to_string() const;

  friend bool operator==(const DoobParams&, const DoobParams&) = default;

 private:
  int m_;
  int n_;
};

/// An element of Z4^2, a vertex of the Shrikhande graph.
struct ShElement {
  std::uint8_t a = 0;
  std::uint8_t b = 0;

  static ShElement from_value(int v) { return {static_cast<std::uint8_t>(v >> 2), static_cast<std::uint8_t>(v & 3)}; }
  int value() const { return 4 * a + b; }
  friend bool operator==(const ShElement&, const ShElement&) = default;
};

/// An element of Z2^2, a vertex of K4.
struct K4Element {
  std::uint8_t c = 0;
  std::uint8_t d = 0;

  static K4Element from_value(int v) { return {static_cast<std::uint8_t>(v >> 1), static_cast<std::uint8_t>(v & 1)}; }
  int value() const { return 2 * c + d; }
  friend bool operator==(const K4Element&, const K4Element&) = default;
};

/// Differences {01,10,11,03,30,33} of Z4^2.
bool sh_adjacent(ShElement x, ShElement y);
/// K4 is the Cayley graph of Z2^2 with connecting set {01,10,11}.
bool k4_adjacent(K4Element x, K4Element y);

/// A vertex of D(m,n) given by its coordinate digits.
class Vertex {
 public:
  Vertex(DoobParams params, std::vector<std::uint8_t> digits);

  static Vertex from_index(const DoobParams& params, VertexIndex index);
  /// Parses the dotted text form, e.g. "03.21.10" in D(2,1).
  static Vertex parse(const DoobParams& params, std::string_view text);

  const DoobParams& params() const { return params_; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }
  VertexIndex index() const;

  ShElement sh(int i) const;
  K4Element k(int j) const;

  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;

 private:
  DoobParams params_;
  std::vector<std::uint8_t> digits_;
};

/// Adjacency in D(m,n): the vertices differ in exactly one coordinate and
/// are adjacent in that factor.
bool adjacent(const Vertex& u, const Vertex& v);

/// Text form of a vertex index ("03.21.10").
std::string format_vertex(const DoobParams& params, VertexIndex v);
VertexIndex parse_vertex(const DoobParams& params, std::string_view text);

/// Vertex-count cap used by exhaustive operations. Returns the value of the
/// DOOB_CAP environment variable when set, otherwise `fallback`.
std::uint64_t vertex_cap(std::uint64_t fallback);

}  // namespace doob
