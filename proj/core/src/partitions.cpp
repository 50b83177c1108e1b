#include "doob/partitions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "doob/error.hpp"
#include "doob/graph.hpp"

namespace doob {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw InvalidArgument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string QuotientMatrix2::to_string() const {
  return "[[" + std::to_string(s11) + "," + std::to_string(s12) + "],[" + std::to_string(s21) + "," +
         std::to_string(s22) + "]]";
}

std::string Eigenpair::to_string() const {
  if (rational) return "{" + larger.to_string() + ", " + smaller.to_string() + "}";
  return "{(" + std::to_string(trace) + " +- sqrt(" + std::to_string(discriminant) + "))/2}";
}

namespace {

std::int64_t exact_isqrt(std::int64_t x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : -1;
}

}  // namespace

Eigenpair matrix_eigenvalues(const QuotientMatrix2& q) {
  Eigenpair e;
  e.trace = q.trace();
  e.discriminant = e.trace * e.trace - 4 * q.det();
  const auto root = exact_isqrt(e.discriminant);
  e.rational = root >= 0;
  if (e.rational) {
    e.larger = Rational(e.trace + root, 2);
    e.smaller = Rational(e.trace - root, 2);
  }
  return e;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < size; ++i) {
    out += i == 0 ? "[" : ",[";
    for (int j = 0; j < size; ++j) out += (j == 0 ? "" : ",") + std::to_string(at(i, j));
    out += "]";
  }
  return out + "]";
}

std::optional<IntMatrix> equitable_quotient(std::span<const VertexSet> cells) {
  if (cells.empty()) throw InvalidArgument("partition needs at least one cell");
  const auto& p = cells.front().params();
  VertexSet seen(p);
  for (const auto& c : cells) {
    if (!(c.params() == p)) throw ParamMismatch("cells of different graphs");
    if (c.empty()) throw InvalidArgument("partition cells must be nonempty");
    if (seen.intersects(c)) throw InvalidArgument("partition cells overlap");
    seen |= c;
  }
  if (seen.count() != p.vertex_count()) throw InvalidArgument("partition cells do not cover the vertex set");

  const auto graph = DoobGraph::shared(p);
  const int r = static_cast<int>(cells.size());
  std::vector<int> cell_of(static_cast<std::size_t>(p.vertex_count()));
  for (int i = 0; i < r; ++i) cells[i].for_each([&](VertexIndex v) { cell_of[v] = i; });

  IntMatrix q{r, std::vector<std::int64_t>(static_cast<std::size_t>(r * r), -1)};
  std::vector<std::int64_t> row(static_cast<std::size_t>(r));
  for (VertexIndex v = 0; v < p.vertex_count(); ++v) {
    std::fill(row.begin(), row.end(), 0);
    for (const VertexIndex w : graph->neighbors(v)) ++row[cell_of[w]];
    const int i = cell_of[v];
    for (int j = 0; j < r; ++j) {
      auto& slot = q.entries[static_cast<std::size_t>(i * r + j)];
      if (slot < 0) {
        slot = row[j];
      } else if (slot != row[j]) {
        return std::nullopt;
      }
    }
  }
  return q;
}

std::optional<QuotientMatrix2> quotient_matrix(const VertexSet& first, const VertexSet& second) {
  const VertexSet cells[] = {first, second};
  const auto q = equitable_quotient(cells);
  if (!q) return std::nullopt;
  return QuotientMatrix2{q->at(0, 0), q->at(0, 1), q->at(1, 0), q->at(1, 1)};
}

const char* to_string(ExtremalKind kind) {
  switch (kind) {
    case ExtremalKind::mds: return "MDS";
    case ExtremalKind::two_mds: return "2xMDS";
    case ExtremalKind::co_mds: return "co-MDS";
    case ExtremalKind::intermediate: return "intermediate";
    case ExtremalKind::none: return "none";
  }
  return "none";
}

ExtremalPartition check_extremal_partition(const VertexSet& c) {
  ExtremalPartition out;
  if (c.empty() || c.count() == c.universe_size()) return out;
  out.matrix = quotient_matrix(c, c.complement());
  if (!out.matrix) return out;
  const auto& q = *out.matrix;
  const std::int64_t d = c.params().weight();
  const std::int64_t a = q.s11;
  if (q.s12 != 3 * d - a || q.s21 != a + d || q.s22 != 2 * d - a) return out;
  out.a = a;
  if (a == 0) {
    out.kind = ExtremalKind::mds;
  } else if (a == d) {
    out.kind = ExtremalKind::two_mds;
  } else if (a == 2 * d) {
    out.kind = ExtremalKind::co_mds;
  } else {
    out.kind = ExtremalKind::intermediate;
  }
  return out;
}

namespace {

const QuotientMatrix2 kIntermediate{1, 5, 3, 3};

}  // namespace

std::vector<VertexSet> find_intermediate_base() {
  // |S| = c/(b+c) |V| = 3/8 * 16.
  const DoobParams sh(1, 0);
  std::vector<VertexSet> out;
  for (unsigned mask = 0; mask < 65536; ++mask) {
    if (std::popcount(mask) != 6) continue;
    const auto s = VertexSet::from_mask(sh, mask);
    if (quotient_matrix(s, s.complement()) == kIntermediate) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet intermediate_partition(const VertexSet& base, int power) {
  if (!(base.params() == DoobParams(1, 0))) throw InvalidArgument("intermediate base must live in Sh");
  if (power < 1) throw InvalidArgument("power must be at least 1");
  if (base.empty() || base.count() == 16 || quotient_matrix(base, base.complement()) != kIntermediate) {
    throw InvalidArgument("base set does not have quotient [[1,5],[3,3]]");
  }
  const DoobParams p(power, 0);
  VertexSet out(p);
  for (VertexIndex v = 0; v < p.vertex_count(); ++v) {
    int a = 0;
    int b = 0;
    for (int c = 0; c < power; ++c) {
      const int x = p.digit(v, c);
      a += x >> 2;
      b += x & 3;
    }
    if (base.contains(static_cast<VertexIndex>(4 * (a & 3) + (b & 3)))) out.insert(v);
  }
  return out;
}

DistancePartition distance_partition(const VertexSet& base) {
  if (base.empty()) throw InvalidArgument("distance partition needs a nonempty base");
  const auto graph = DoobGraph::shared(base.params());
  DistancePartition out{{base}};
  VertexSet reached = base;
  while (reached.count() != reached.universe_size()) {
    VertexSet layer(base.params());
    out.cells.back().for_each([&](VertexIndex v) {
      for (const VertexIndex w : graph->neighbors(v)) {
        if (!reached.contains(w)) layer.insert(w);
      }
    });
    reached |= layer;
    out.cells.push_back(std::move(layer));
  }
  return out;
}

std::optional<IntMatrix> is_completely_regular(const VertexSet& base) {
  return equitable_quotient(distance_partition(base).cells);
}

}  // namespace doob
