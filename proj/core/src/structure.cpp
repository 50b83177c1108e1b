#include "doob/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "doob/error.hpp"

namespace doob {

bool CoordinateGraph::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::find(edges.begin(), edges.end(), std::make_pair(i, j)) != edges.end();
}

std::vector<std::vector<int>> CoordinateGraph::components() const {
  // Union-find over the coordinates.
  std::vector<int> parent(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) parent[i] = i;
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : edges) {
    const int a = find(i);
    const int b = find(j);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < order; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

CoordinateGraph interaction_graph(const VertexSet& s) {
  const auto& p = s.params();
  CoordinateGraph g{p.coordinate_count(), {}};
  const auto n = p.vertex_count();
  // Every rectangle is a sum of rectangles anchored at digit 0 in both
  // coordinates, so the anchored ones suffice.
  for (int i = 0; i < p.coordinate_count(); ++i) {
    for (int j = i + 1; j < p.coordinate_count(); ++j) {
      for (VertexIndex v = 0; v < n; ++v) {
        if (p.digit(v, i) == 0 || p.digit(v, j) == 0) continue;
        const VertexIndex vi = p.with_digit(v, i, 0);
        const VertexIndex vj = p.with_digit(v, j, 0);
        const VertexIndex vij = p.with_digit(vi, j, 0);
        if (s.contains(v) ^ s.contains(vi) ^ s.contains(vj) ^ s.contains(vij)) {
          g.edges.emplace_back(i, j);
          break;
        }
      }
    }
  }
  return g;
}

VertexSet Decomposition::reconstruct() const {
  VertexSet out(params);
  std::vector<SubProduct> parts;
  parts.reserve(blocks.size());
  for (const auto& b : blocks) parts.emplace_back(params, b.coords);
  for (VertexIndex v = 0; v < params.vertex_count(); ++v) {
    bool bit = sigma;
    for (std::size_t i = 0; i < blocks.size(); ++i) bit ^= blocks[i].code.contains(parts[i].project(v));
    out.assign(v, bit);
  }
  return out;
}

Decomposition xor_decomposition(const VertexSet& s) {
  const auto& p = s.params();
  Decomposition d{p, {}, s.contains(0)};
  for (auto& coords : interaction_graph(s).components()) {
    const SubProduct part(p, coords);
    VertexSet code = part.restrict(s, 0);
    if (code.contains(0)) code = code.complement();
    d.blocks.push_back({std::move(coords), std::move(code)});
  }
  if (!(d.reconstruct() == s)) throw InternalError("XOR decomposition does not reconstruct its input");
  return d;
}

Decomposition canonical_decomposition(const TwoMdsCode& code) {
  auto d = xor_decomposition(code.set());
  for (const auto& b : d.blocks) {
    if (!is_two_mds(b.code)) throw InternalError("decomposition block is not a 2xMDS code");
  }
  return d;
}

bool is_linear(const TwoMdsCode& code) {
  const auto d = canonical_decomposition(code);
  if (static_cast<int>(d.k()) != code.params().coordinate_count()) return false;
  return std::all_of(d.blocks.begin(), d.blocks.end(), [&](const DecompositionBlock& b) {
    return code.params().factor(b.coords.front()) == Factor::k4 || components(b.code).size() > 1;
  });
}

namespace {

// Factor-level summands of linear codes: disconnected 2xMDS codes of Sh and
// 2-subsets of K4, in both cases avoiding 00.
std::vector<std::uint32_t> linear_summands(Factor factor) {
  std::vector<std::uint32_t> out;
  if (factor == Factor::shrikhande) {
    const DoobParams sh(1, 0);
    for (const auto mask : sh_catalog().two_mds) {
      if ((mask & 1U) != 0) continue;
      if (components(VertexSet::from_mask(sh, mask)).size() > 1) out.push_back(mask);
    }
  } else {
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      if (std::popcount(mask) == 2 && (mask & 1U) == 0) out.push_back(mask);
    }
  }
  if (out.size() != 3) throw InternalError("expected three linear summands per factor");
  return out;
}

std::vector<TwoMdsCode> build_linear(const DoobParams& p) {
  static const auto sh_options = linear_summands(Factor::shrikhande);
  static const auto k4_options = linear_summands(Factor::k4);
  const int coords = p.coordinate_count();
  std::vector<VertexSet> sets;
  std::vector<int> choice(static_cast<std::size_t>(coords), 0);
  while (true) {
    for (int sigma = 0; sigma < 2; ++sigma) {
      VertexSet s(p);
      for (VertexIndex v = 0; v < p.vertex_count(); ++v) {
        unsigned bit = static_cast<unsigned>(sigma);
        for (int c = 0; c < coords; ++c) {
          const auto& opts = p.factor(c) == Factor::shrikhande ? sh_options : k4_options;
          bit ^= (opts[static_cast<std::size_t>(choice[c])] >> p.digit(v, c)) & 1U;
        }
        s.assign(v, bit != 0);
      }
      sets.push_back(std::move(s));
    }
    int c = coords - 1;
    while (c >= 0 && choice[c] == 2) choice[c--] = 0;
    if (c < 0) break;
    ++choice[c];
  }
  std::sort(sets.begin(), sets.end());
  std::vector<TwoMdsCode> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(std::move(s));
  return out;
}

const std::vector<TwoMdsCode>& cached_linear(const DoobParams& p) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<TwoMdsCode>> cache;
  const std::lock_guard lock(mutex);
  auto it = cache.find({p.m(), p.n()});
  if (it == cache.end()) it = cache.emplace(std::make_pair(p.m(), p.n()), build_linear(p)).first;
  return it->second;
}

bool valid_coloring(const DoobParams& p, const std::vector<std::uint8_t>& colors) {
  for (int c = 0; c < 4; ++c) {
    VertexSet cls(p);
    for (VertexIndex v = 0; v < colors.size(); ++v) {
      if (colors[v] == c) cls.insert(v);
    }
    if (!is_mds(cls)) return false;
  }
  return true;
}

}  // namespace

std::vector<TwoMdsCode> enumerate_linear(const DoobParams& params) { return cached_linear(params); }

std::optional<TwoMdsCode> is_semilinear(const MdsCode& code) {
  for (const auto& l : cached_linear(code.params())) {
    if (code.set().is_subset_of(l.set())) return l;
  }
  return std::nullopt;
}

VertexSet ReducibleWitness::reconstruct(const DoobParams& params) const {
  const SubProduct a(params, coords_a);
  const SubProduct b(params, coords_b);
  VertexSet out(params);
  for (VertexIndex x = 0; x < f.params().vertex_count(); ++x) {
    for (VertexIndex y = 0; y < g.params().vertex_count(); ++y) {
      if (f.color(x) == g.color(y)) out.insert(a.embed(x) + b.embed(y));
    }
  }
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> admissible_bipartitions(const DoobParams& params) {
  const int k = params.coordinate_count();
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  if (k < 2) return out;
  const unsigned full = (1U << k) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    if ((mask & 1U) == 0) continue;
    std::vector<int> a;
    std::vector<int> b;
    int wa = 0;
    int wb = 0;
    for (int c = 0; c < k; ++c) {
      const int w = params.factor(c) == Factor::shrikhande ? 2 : 1;
      if ((mask >> c) & 1U) {
        a.push_back(c);
        wa += w;
      } else {
        b.push_back(c);
        wb += w;
      }
    }
    if (wa > 1 && wb > 1) out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

std::optional<ReducibleWitness> reducible_along(const MdsCode& code, const std::vector<int>& coords_a) {
  const auto& p = code.params();
  const SubProduct a(p, coords_a);
  const SubProduct b = a.complement();
  const auto nb = b.sub().vertex_count();

  std::vector<VertexSet> sections;
  sections.reserve(static_cast<std::size_t>(nb));
  std::vector<VertexSet> distinct;
  for (VertexIndex y = 0; y < nb; ++y) {
    sections.push_back(a.restrict(code.set(), b.embed(y)));
    if (std::find(distinct.begin(), distinct.end(), sections.back()) == distinct.end()) {
      if (distinct.size() == 4) return std::nullopt;
      distinct.push_back(sections.back());
    }
  }
  if (distinct.size() != 4) return std::nullopt;
  std::sort(distinct.begin(), distinct.end(),
            [](const VertexSet& x, const VertexSet& y) { return x.min_member() < y.min_member(); });
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_mds(distinct[i])) return std::nullopt;
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (distinct[i].intersects(distinct[j])) return std::nullopt;
    }
  }

  std::vector<std::uint8_t> fa(static_cast<std::size_t>(a.sub().vertex_count()));
  for (std::uint8_t c = 0; c < 4; ++c) distinct[c].for_each([&](VertexIndex x) { fa[x] = c; });
  std::vector<std::uint8_t> gb(static_cast<std::size_t>(nb));
  for (VertexIndex y = 0; y < nb; ++y) {
    gb[y] = static_cast<std::uint8_t>(std::find(distinct.begin(), distinct.end(), sections[y]) - distinct.begin());
  }
  if (!valid_coloring(b.sub(), gb)) return std::nullopt;
  return ReducibleWitness{a.coords(), b.coords(), LatinColoring(a.sub(), std::move(fa)),
                          LatinColoring(b.sub(), std::move(gb))};
}

std::optional<ReducibleWitness> is_reducible(const MdsCode& code) {
  for (const auto& [a, b] : admissible_bipartitions(code.params())) {
    if (auto w = reducible_along(code, a)) return w;
  }
  return std::nullopt;
}

std::vector<ReducibleWitness> all_reducible_witnesses(const MdsCode& code) {
  std::vector<ReducibleWitness> out;
  for (const auto& [a, b] : admissible_bipartitions(code.params())) {
    if (auto w = reducible_along(code, a)) out.push_back(std::move(*w));
  }
  return out;
}

Classification classify(const MdsCode& code) {
  Classification c{is_semilinear(code), is_reducible(code)};
  if (!c.semilinear() && !c.reducible()) {
    std::string members;
    for (const auto v : code.set().members()) members += " " + std::to_string(v);
    throw TheoremFalsification("MDS code of " + code.params().to_string() +
                               " is neither semilinear nor reducible:" + members);
  }
  return c;
}

}  // namespace doob
