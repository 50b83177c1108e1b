#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "doob/params.hpp"
#include "doob/vertex_set.hpp"

namespace doob {

/// Brute-force catalogue of the Shrikhande-level objects everything else is
/// built from. Masks are 16-bit characteristic vectors over Z4^2 (bit 4a+b).
struct ShCatalog {
  std::vector<std::uint16_t> mds;      // independent 4-sets
  std::vector<std::uint16_t> two_mds;  // unions of two disjoint MDS codes
  /// Partitions of V(Sh) into four MDS codes, each sorted ascending.
  std::vector<std::array<std::uint16_t, 4>> mds_partitions;
  std::bitset<65536> is_mds;
  std::bitset<65536> is_two_mds;
};

const ShCatalog& sh_catalog();

bool is_mds(const VertexSet& s);
bool is_two_mds(const VertexSet& s);

/// A maximum independent set of D(m,n), of size 4^(2m+n-1).
class MdsCode {
 public:
  /// Throws InvalidCode unless is_mds(set).
  explicit MdsCode(VertexSet set);

  const VertexSet& set() const { return set_; }
  const DoobParams& params() const { return set_.params(); }

  friend bool operator==(const MdsCode&, const MdsCode&) = default;

 private:
  VertexSet set_;
};

/// A set meeting every Shrikhande fiber in two disjoint MDS codes of Sh and
/// every K4 fiber in two vertices.
class TwoMdsCode {
 public:
  /// Throws InvalidCode unless is_two_mds(set).
  explicit TwoMdsCode(VertexSet set);

  const VertexSet& set() const { return set_; }
  const DoobParams& params() const { return set_.params(); }

  friend bool operator==(const TwoMdsCode&, const TwoMdsCode&) = default;

 private:
  VertexSet set_;
};

/// Map V(D(m,n)) -> V(K4) whose four colour classes are MDS codes.
/// Colours are K4 element values 2c+d.
class LatinColoring {
 public:
  /// Throws InvalidCode unless every colour class is an MDS code.
  LatinColoring(DoobParams params, std::vector<std::uint8_t> colors);

  const DoobParams& params() const { return params_; }
  int color(VertexIndex v) const { return colors_[v]; }
  const std::vector<std::uint8_t>& colors() const { return colors_; }
  VertexSet color_class(int color) const;

  friend bool operator==(const LatinColoring&, const LatinColoring&) = default;

 private:
  DoobParams params_;
  std::vector<std::uint8_t> colors_;
};

/// Connected components of the subgraph induced by `parent`, each found by
/// BFS and listed by increasing minimum member.
struct ComponentList {
  VertexSet parent;
  std::vector<VertexSet> components;

  std::size_t size() const { return components.size(); }
  /// Component containing v; throws InvalidArgument if v is not in parent.
  std::size_t component_of(VertexIndex v) const;
};

ComponentList components(const VertexSet& s);

/// V \ M, re-verified as a 2xMDS code.
TwoMdsCode complement_code(const TwoMdsCode& code);

/// When the subgraph induced by M is bipartite with MDS parts, the split that
/// puts the minimum vertex of every component in the first part.
std::optional<std::pair<MdsCode, MdsCode>> is_bipartite_two_mds(const TwoMdsCode& code);

/// Calls fn on each of the 2^N MDS codes inside a bipartite M (N = number of
/// components), choosing one part per component; bit i of the choice index
/// selects the second part of component i. Throws InvalidArgument if M is not
/// bipartite.
void for_each_mds_within(const TwoMdsCode& code, const std::function<void(const MdsCode&)>& fn);
std::vector<MdsCode> mds_codes_within(const TwoMdsCode& code);

/// {(v, f(v))} in D(m,n+1), the colour appended as the last K4 coordinate.
MdsCode graph_of_coloring(const LatinColoring& f);
/// The latin colouring of D(m,n-1) whose graph is `code`, with the colour
/// read from K4 coordinate `k_coord` (1-based among the K4 coordinates).
LatinColoring coloring_from_mds(const MdsCode& code, int k_coord);

/// Edges with exactly one endpoint in s.
std::uint64_t edge_boundary_size(const VertexSet& s);
/// (2m+n) 4^(2m+n): the largest possible edge boundary.
std::uint64_t max_edge_boundary(const DoobParams& params);

/// True iff every maximal clique of K16^m x K4^n (every Shrikhande fiber read
/// as a 16-clique, every K4 fiber) holds exactly half its vertices in s.
bool is_halving_set(const VertexSet& s);

}  // namespace doob
