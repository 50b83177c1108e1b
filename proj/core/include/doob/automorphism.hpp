#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "doob/params.hpp"
#include "doob/vertex_set.hpp"

namespace doob {

/// Undirected simple graph on at most 64 vertices, adjacency rows as bitmasks.
class SmallGraph {
 public:
  explicit SmallGraph(int order);

  static SmallGraph shrikhande();
  static SmallGraph complete(int order);
  /// Subgraph of D(m,n) induced by `vertices`, relabelled 0..k-1 in the given order.
  static SmallGraph induced(const DoobParams& params, const std::vector<VertexIndex>& vertices);

  int order() const { return order_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t row(int u) const { return rows_[u]; }
  int degree(int u) const;
  int edge_count() const;

 private:
  int order_;
  std::vector<std::uint64_t> rows_;
};

/// Permutation of small-graph vertices: image[i] is the image of i.
using SmallPermutation = std::vector<int>;

/// Some isomorphism g -> h found by backtracking, if any.
std::optional<SmallPermutation> find_isomorphism(const SmallGraph& g, const SmallGraph& h);
/// Every automorphism of g, in lexicographic order of image vectors.
std::vector<SmallPermutation> all_automorphisms(const SmallGraph& g);
/// A small generating set picked greedily from a full group listing.
std::vector<SmallPermutation> generating_subset(const std::vector<SmallPermutation>& group);
/// Order of the group generated by `gens` (closure by breadth-first search).
std::uint64_t generated_order(const std::vector<SmallPermutation>& gens, int degree);

/// Permutation of the vertex indices of some D(m,n).
using Permutation = std::vector<VertexIndex>;

struct Generator {
  std::string label;
  Permutation image;
};

/// Generators of the product automorphism group of D(m,n): automorphisms of
/// each factor lifted to its coordinate, plus transpositions of adjacent
/// like-typed coordinates.
struct AutGenerators {
  DoobParams params;
  std::vector<Generator> factor;
  std::vector<Generator> swaps;
  /// Set by aut_generators_fixing_last().
  bool last_fixed = false;

  std::vector<Permutation> all() const;
  /// |Aut(Sh)|^m m! |Aut(K4)|^n n!, the order of the group these generate.
  /// Throws InvalidArgument on 64-bit overflow.
  std::uint64_t group_order() const;
};

/// Automorphisms of the Shrikhande graph, computed once by backtracking.
const std::vector<SmallPermutation>& shrikhande_automorphisms();

AutGenerators aut_generators(const DoobParams& params);
/// Generators of D(m,n) that keep the last coordinate in place. Latin
/// colorings of D(m,n-1) are compared through their graphs in D(m,n), so
/// color permutations act through the last factor but never move it.
AutGenerators aut_generators_fixing_last(const DoobParams& params);

VertexSet apply(const Permutation& perm, const VertexSet& s);
/// True iff perm maps edges of D(m,n) onto edges.
bool preserves_adjacency(const DoobParams& params, const Permutation& perm);

}  // namespace doob
