#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "doob/codes.hpp"
#include "doob/graph.hpp"
#include "doob/vertex_set.hpp"

namespace doob {

/// Graph on the coordinates 0..m+n-1 of D(m,n).
struct CoordinateGraph {
  int order = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, lexicographic

  bool adjacent(int i, int j) const;
  /// Connected components, each ascending, listed by smallest coordinate.
  std::vector<std::vector<int>> components() const;
};

/// Coordinates i != j are joined iff some rectangle v, v+e_i, v+e_j, v+e_i+e_j
/// (single-coordinate changes of arbitrary size) has odd parity under the
/// characteristic function of s. s splits as a mod-2 sum over a coordinate
/// bipartition exactly when no edge crosses it.
CoordinateGraph interaction_graph(const VertexSet& s);

struct DecompositionBlock {
  std::vector<int> coords;
  /// Normalised block code on the sub-product over `coords`; never contains
  /// the all-zero tuple.
  VertexSet code;
};

/// chi_M = chi_{M_1} + ... + chi_{M_k} + sigma (mod 2), the blocks being
/// indecomposable and listed by smallest coordinate.
struct Decomposition {
  DoobParams params;
  std::vector<DecompositionBlock> blocks;
  bool sigma = false;

  std::size_t k() const { return blocks.size(); }
  bool decomposable() const { return blocks.size() > 1; }
  /// Evaluates the right-hand side at every vertex.
  VertexSet reconstruct() const;
};

/// Finest XOR splitting of an arbitrary set along coordinate blocks. Throws
/// InternalError if the result does not reconstruct s.
Decomposition xor_decomposition(const VertexSet& s);

/// The unique normal form of a 2xMDS code; additionally checks that every
/// block code is a 2xMDS code of its sub-product.
Decomposition canonical_decomposition(const TwoMdsCode& code);

/// k = m+n and every Shrikhande block is disconnected.
bool is_linear(const TwoMdsCode& code);

/// All 2*3^(m+n) linear 2xMDS codes of D(m,n), ascending in VertexSet order.
std::vector<TwoMdsCode> enumerate_linear(const DoobParams& params);

/// First linear code (in enumerate_linear order) containing the code.
std::optional<TwoMdsCode> is_semilinear(const MdsCode& code);

/// C = { (a,b) : f(a) = g(b) } with a ranging over the sub-product on
/// `coords_a` and b over its complement.
struct ReducibleWitness {
  std::vector<int> coords_a;
  std::vector<int> coords_b;
  LatinColoring f;
  LatinColoring g;

  /// Rebuilds the code from the two colourings.
  VertexSet reconstruct(const DoobParams& params) const;
};

/// Admissible coordinate bipartitions (both sides of weight 2m+n > 1), the
/// side holding coordinate 0 listed first, in increasing bitmask order.
std::vector<std::pair<std::vector<int>, std::vector<int>>> admissible_bipartitions(const DoobParams& params);

/// Reducibility along one fixed bipartition.
std::optional<ReducibleWitness> reducible_along(const MdsCode& code, const std::vector<int>& coords_a);
/// First witness over admissible_bipartitions().
std::optional<ReducibleWitness> is_reducible(const MdsCode& code);
std::vector<ReducibleWitness> all_reducible_witnesses(const MdsCode& code);

struct Classification {
  std::optional<TwoMdsCode> linear_witness;
  std::optional<ReducibleWitness> reducible_witness;

  bool semilinear() const { return linear_witness.has_value(); }
  bool reducible() const { return reducible_witness.has_value(); }
};

/// Runs both tests; throws TheoremFalsification if both fail.
Classification classify(const MdsCode& code);

}  // namespace doob
