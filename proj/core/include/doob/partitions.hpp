#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "doob/vertex_set.hpp"

namespace doob {

/// Exact rational number in lowest terms with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Quotient matrix [[s11, s12], [s21, s22]] of an equitable 2-partition.
struct QuotientMatrix2 {
  std::int64_t s11 = 0;
  std::int64_t s12 = 0;
  std::int64_t s21 = 0;
  std::int64_t s22 = 0;

  std::int64_t trace() const { return s11 + s22; }
  std::int64_t det() const { return s11 * s22 - s12 * s21; }
  std::string to_string() const;
  friend bool operator==(const QuotientMatrix2&, const QuotientMatrix2&) = default;
};

/// Eigenvalues (trace +- sqrt(disc)) / 2. When disc is not a perfect square
/// they are irrational and only trace/discriminant are meaningful.
struct Eigenpair {
  std::int64_t trace = 0;
  std::int64_t discriminant = 0;
  bool rational = true;
  Rational larger;
  Rational smaller;

  std::string to_string() const;
};

Eigenpair matrix_eigenvalues(const QuotientMatrix2& q);

/// Square integer matrix, row-major.
struct IntMatrix {
  int size = 0;
  std::vector<std::int64_t> entries;

  std::int64_t at(int i, int j) const { return entries[static_cast<std::size_t>(i * size + j)]; }
  std::string to_string() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Quotient matrix of an arbitrary partition, if equitable. Throws
/// InvalidArgument unless the cells are nonempty, disjoint and cover V.
std::optional<IntMatrix> equitable_quotient(std::span<const VertexSet> cells);
/// Two-cell case.
std::optional<QuotientMatrix2> quotient_matrix(const VertexSet& first, const VertexSet& second);

enum class ExtremalKind { mds, two_mds, co_mds, intermediate, none };

const char* to_string(ExtremalKind kind);

/// Classification of (C, complement) against the family
/// [[a, 3d-a], [a+d, 2d-a]], d = 2m+n, whose eigenvalues are the extreme
/// eigenvalues 3d and -d of the graph.
struct ExtremalPartition {
  ExtremalKind kind = ExtremalKind::none;
  std::optional<QuotientMatrix2> matrix;  // present whenever equitable
  std::int64_t a = -1;                    // meaningful unless kind == none
};

ExtremalPartition check_extremal_partition(const VertexSet& c);

/// Every 6-subset S of V(Sh) for which (S, complement) is equitable with
/// quotient [[1,5],[3,3]], in VertexSet order.
std::vector<VertexSet> find_intermediate_base();

/// { (x_1..x_n) in D(n,0) : x_1 + ... + x_n in base } (sums in Z4^2). Throws
/// InvalidArgument unless base has quotient [[1,5],[3,3]] in Sh.
VertexSet intermediate_partition(const VertexSet& base, int power);

/// Cells by distance from a nonempty base set; cells[0] is the base.
struct DistancePartition {
  std::vector<VertexSet> cells;

  int covering_radius() const { return static_cast<int>(cells.size()) - 1; }
};

DistancePartition distance_partition(const VertexSet& base);
/// The tridiagonal quotient matrix when the distance partition is equitable.
std::optional<IntMatrix> is_completely_regular(const VertexSet& base);

}  // namespace doob
