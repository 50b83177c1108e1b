#include "doob/automorphism.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "doob/error.hpp"
#include "doob/graph.hpp"

namespace doob {

SmallGraph::SmallGraph(int order) : order_(order), rows_(static_cast<std::size_t>(order), 0) {
  if (order < 0 || order > 64) throw InvalidArgument("SmallGraph holds at most 64 vertices");
}

SmallGraph SmallGraph::shrikhande() {
  SmallGraph g(16);
  for (int x = 0; x < 16; ++x) {
    for (int y = x + 1; y < 16; ++y) {
      if (sh_adjacent(ShElement::from_value(x), ShElement::from_value(y))) g.add_edge(x, y);
    }
  }
  return g;
}

SmallGraph SmallGraph::complete(int order) {
  SmallGraph g(order);
  for (int x = 0; x < order; ++x) {
    for (int y = x + 1; y < order; ++y) g.add_edge(x, y);
  }
  return g;
}

SmallGraph SmallGraph::induced(const DoobParams& params, const std::vector<VertexIndex>& vertices) {
  const auto graph = DoobGraph::shared(params);
  SmallGraph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (graph->adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

void SmallGraph::add_edge(int u, int v) {
  if (u == v) throw InvalidArgument("loops are not allowed");
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

int SmallGraph::degree(int u) const { return std::popcount(rows_[u]); }

int SmallGraph::edge_count() const {
  int total = 0;
  for (int u = 0; u < order_; ++u) total += degree(u);
  return total / 2;
}

namespace {

// Maps g-vertices 0..k-1 in order; each candidate image must match degree and
// adjacency to every vertex already placed.
class IsoSearch {
 public:
  IsoSearch(const SmallGraph& g, const SmallGraph& h, bool collect_all)
      : g_(g), h_(h), all_(collect_all), image_(static_cast<std::size_t>(g.order()), -1) {}

  void run() {
    if (g_.order() != h_.order() || g_.edge_count() != h_.edge_count()) return;
    extend(0, 0);
  }

  std::vector<SmallPermutation> found;

 private:
  bool extend(int k, std::uint64_t used) {
    if (k == g_.order()) {
      found.push_back(image_);
      return !all_;
    }
    for (int c = 0; c < h_.order(); ++c) {
      if ((used >> c) & 1U) continue;
      if (h_.degree(c) != g_.degree(k)) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) ok = g_.adjacent(k, j) == h_.adjacent(c, image_[j]);
      if (!ok) continue;
      image_[k] = c;
      if (extend(k + 1, used | (std::uint64_t{1} << c))) return true;
    }
    image_[k] = -1;
    return false;
  }

  const SmallGraph& g_;
  const SmallGraph& h_;
  bool all_;
  SmallPermutation image_;
};

SmallPermutation compose(const SmallPermutation& p, const SmallPermutation& q) {
  // (p after q)
  SmallPermutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

std::set<SmallPermutation> closure(const std::vector<SmallPermutation>& gens, int degree) {
  SmallPermutation id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<SmallPermutation> seen{id};
  std::deque<SmallPermutation> queue{id};
  while (!queue.empty()) {
    const auto p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto q = compose(g, p);
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return seen;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("automorphism group order overflows 64 bits");
  return r;
}

const std::vector<SmallPermutation>& k4_automorphisms() {
  static const auto group = all_automorphisms(SmallGraph::complete(4));
  return group;
}

Permutation lift(const DoobParams& params, int coord, const SmallPermutation& p) {
  const auto n = params.vertex_count();
  Permutation image(static_cast<std::size_t>(n));
  for (VertexIndex v = 0; v < n; ++v) image[v] = params.with_digit(v, coord, p[static_cast<std::size_t>(params.digit(v, coord))]);
  return image;
}

Permutation swap_coordinates(const DoobParams& params, int i, int j) {
  const auto n = params.vertex_count();
  Permutation image(static_cast<std::size_t>(n));
  for (VertexIndex v = 0; v < n; ++v) {
    image[v] = params.with_digit(params.with_digit(v, i, params.digit(v, j)), j, params.digit(v, i));
  }
  return image;
}

AutGenerators build_generators(const DoobParams& params, bool fix_last) {
  AutGenerators out{params, {}, {}};
  static const auto sh_gens = generating_subset(shrikhande_automorphisms());
  static const auto k4_gens = generating_subset(k4_automorphisms());
  for (int c = 0; c < params.coordinate_count(); ++c) {
    const bool sh = params.factor(c) == Factor::shrikhande;
    const auto& gens = sh ? sh_gens : k4_gens;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      out.factor.push_back({(sh ? "sh" : "k4") + std::string("[") + std::to_string(c) + "]#" + std::to_string(g),
                            lift(params, c, gens[g])});
    }
  }
  const int last = params.coordinate_count() - 1;
  for (int c = 0; c + 1 < params.coordinate_count(); ++c) {
    if (params.factor(c) != params.factor(c + 1)) continue;
    if (fix_last && c + 1 == last) continue;
    out.swaps.push_back({"swap(" + std::to_string(c) + "," + std::to_string(c + 1) + ")",
                         swap_coordinates(params, c, c + 1)});
  }
  out.last_fixed = fix_last;
  for (const auto& g : out.factor) {
    if (!preserves_adjacency(params, g.image)) throw InternalError("generator " + g.label + " is not an automorphism");
  }
  for (const auto& g : out.swaps) {
    if (!preserves_adjacency(params, g.image)) throw InternalError("generator " + g.label + " is not an automorphism");
  }
  return out;
}

}  // namespace

std::optional<SmallPermutation> find_isomorphism(const SmallGraph& g, const SmallGraph& h) {
  IsoSearch search(g, h, false);
  search.run();
  if (search.found.empty()) return std::nullopt;
  return search.found.front();
}

std::vector<SmallPermutation> all_automorphisms(const SmallGraph& g) {
  IsoSearch search(g, g, true);
  search.run();
  return search.found;
}

std::vector<SmallPermutation> generating_subset(const std::vector<SmallPermutation>& group) {
  if (group.empty()) return {};
  const int degree = static_cast<int>(group.front().size());
  std::vector<SmallPermutation> gens;
  auto reached = closure(gens, degree);
  for (const auto& p : group) {
    if (reached.count(p) != 0) continue;
    gens.push_back(p);
    reached = closure(gens, degree);
    if (reached.size() == group.size()) break;
  }
  return gens;
}

std::uint64_t generated_order(const std::vector<SmallPermutation>& gens, int degree) {
  return closure(gens, degree).size();
}

const std::vector<SmallPermutation>& shrikhande_automorphisms() {
  static const auto group = all_automorphisms(SmallGraph::shrikhande());
  return group;
}

std::vector<Permutation> AutGenerators::all() const {
  std::vector<Permutation> out;
  for (const auto& g : factor) out.push_back(g.image);
  for (const auto& g : swaps) out.push_back(g.image);
  return out;
}

std::uint64_t AutGenerators::group_order() const {
  std::uint64_t order = 1;
  const auto sh = static_cast<std::uint64_t>(shrikhande_automorphisms().size());
  const auto k4 = static_cast<std::uint64_t>(k4_automorphisms().size());
  // Coordinates of a type can be permuted freely, except a pinned last one.
  const int movable_sh = last_fixed && params.n() == 0 ? params.m() - 1 : params.m();
  const int movable_k = last_fixed && params.n() > 0 ? params.n() - 1 : params.n();
  for (int i = 1; i <= params.m(); ++i) order = checked_mul(order, sh);
  for (int i = 1; i <= params.n(); ++i) order = checked_mul(order, k4);
  for (int i = 2; i <= movable_sh; ++i) order = checked_mul(order, static_cast<std::uint64_t>(i));
  for (int i = 2; i <= movable_k; ++i) order = checked_mul(order, static_cast<std::uint64_t>(i));
  return order;
}

AutGenerators aut_generators(const DoobParams& params) { return build_generators(params, false); }

AutGenerators aut_generators_fixing_last(const DoobParams& params) { return build_generators(params, true); }

VertexSet apply(const Permutation& perm, const VertexSet& s) {
  if (perm.size() != s.universe_size()) throw ParamMismatch("permutation and set of different sizes");
  VertexSet out(s.params());
  s.for_each([&](VertexIndex v) { out.insert(perm[v]); });
  return out;
}

bool preserves_adjacency(const DoobParams& params, const Permutation& perm) {
  const auto graph = DoobGraph::shared(params);
  const auto n = params.vertex_count();
  if (perm.size() != n) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const VertexIndex w : perm) {
    if (w >= n || hit[w]) return false;
    hit[w] = true;
  }
  for (VertexIndex v = 0; v < n; ++v) {
    for (const VertexIndex w : graph->neighbors(v)) {
      if (!graph->adjacent(perm[v], perm[w])) return false;
    }
  }
  return true;
}

}  // namespace doob
