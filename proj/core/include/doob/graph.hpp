#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "doob/params.hpp"
#include "doob/vertex_set.hpp"

namespace doob {

/// D(m,n) with a precomputed neighbour table. Immutable once built.
class DoobGraph {
 public:
  explicit DoobGraph(DoobParams params);

  /// Process-wide cached instance; safe to call concurrently.
  static std::shared_ptr<const DoobGraph> shared(const DoobParams& params);

  const DoobParams& params() const { return params_; }
  std::uint64_t vertex_count() const { return params_.vertex_count(); }
  int degree() const { return degree_; }

  std::span<const VertexIndex> neighbors(VertexIndex v) const {
    return {neighbors_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(degree_),
            static_cast<std::size_t>(degree_)};
  }
  bool adjacent(VertexIndex u, VertexIndex v) const;

  /// Number of members of `s` adjacent to v.
  int neighbors_in(VertexIndex v, const VertexSet& s) const;
  /// Members of `s` together with every vertex adjacent to one of them.
  VertexSet closed_neighborhood(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;

 private:
  DoobParams params_;
  int degree_;
  std::vector<VertexIndex> neighbors_;
};

/// A maximal set of vertices that agree everywhere except one coordinate:
/// a copy of Sh (16 vertices) or of K4 (4 vertices).
struct Fiber {
  int coordinate = 0;
  VertexIndex base = 0;  // member whose varying digit is 0
  VertexIndex stride = 1;
  int size = 0;

  VertexIndex at(int value) const { return base + static_cast<VertexIndex>(value) * stride; }
  /// Bit t of the result is set iff at(t) is in `s`.
  std::uint32_t trace(const VertexSet& s) const;
  VertexSet to_set(const DoobParams& params) const;
};

/// All fibers varying coordinate `coord`, ordered by base index.
std::vector<Fiber> fibers_along(const DoobParams& params, int coord);
/// Every Shrikhande fiber; requires m >= 1.
std::vector<Fiber> sh_fibers(const DoobParams& params);
/// Every K4 fiber; requires n >= 1.
std::vector<Fiber> k4_fibers(const DoobParams& params);

/// The sub-product of D(m,n) on a subset of coordinates. Indices of the
/// sub-product embed additively: a full vertex equals the sum of the
/// embeddings of its projections onto complementary sub-products.
class SubProduct {
 public:
  SubProduct(DoobParams full, std::vector<int> coords);

  const DoobParams& full() const { return full_; }
  const DoobParams& sub() const { return sub_; }
  const std::vector<int>& coords() const { return coords_; }

  VertexIndex embed(VertexIndex sub_index) const;
  VertexIndex project(VertexIndex full_index) const;
  /// The complementary coordinate set.
  SubProduct complement() const;

  /// { x in sub : embed(x) + context in s }, where `context` is a vertex
  /// whose digits on coords() are zero.
  VertexSet restrict(const VertexSet& s, VertexIndex context) const;

 private:
  DoobParams full_;
  std::vector<int> coords_;
  DoobParams sub_;
};

/// The 2m+n+1 distinct eigenvalues -(2m+n) + 4i, ascending.
std::vector<int> eigenvalue_list(const DoobParams& params);

/// Exact check that prod_{lambda} (A - lambda I) vanishes for the adjacency
/// matrix A, over the eigenvalues of eigenvalue_list(). Throws CapExceeded
/// when the vertex count is above vertex_cap(256).
bool verify_spectrum(const DoobParams& params);

}  // namespace doob
