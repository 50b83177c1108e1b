#include "doob/codes.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "doob/automorphism.hpp"
#include "doob/error.hpp"
#include "doob/graph.hpp"

namespace doob {

namespace {

// VertexSet order on 16-bit masks.
bool mask_less(std::uint16_t a, std::uint16_t b) {
  const unsigned diff = static_cast<unsigned>(a ^ b);
  return diff != 0 && (a & (diff & (~diff + 1U))) != 0;
}

ShCatalog build_catalog() {
  const auto sh = SmallGraph::shrikhande();
  ShCatalog cat;
  for (unsigned mask = 0; mask < 65536; ++mask) {
    if (std::popcount(mask) != 4) continue;
    bool independent = true;
    for (int v = 0; v < 16 && independent; ++v) {
      if (((mask >> v) & 1U) != 0 && (sh.row(v) & mask) != 0) independent = false;
    }
    if (independent) cat.mds.push_back(static_cast<std::uint16_t>(mask));
  }
  std::sort(cat.mds.begin(), cat.mds.end(), mask_less);
  for (const auto m : cat.mds) cat.is_mds.set(m);

  for (std::size_t i = 0; i < cat.mds.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.mds.size(); ++j) {
      if ((cat.mds[i] & cat.mds[j]) == 0) cat.is_two_mds.set(cat.mds[i] | cat.mds[j]);
    }
  }
  for (unsigned mask = 0; mask < 65536; ++mask) {
    if (cat.is_two_mds.test(mask)) cat.two_mds.push_back(static_cast<std::uint16_t>(mask));
  }
  std::sort(cat.two_mds.begin(), cat.two_mds.end(), mask_less);

  // Partitions into four MDS codes, listed once with ascending parts.
  for (std::size_t i = 0; i < cat.mds.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.mds.size(); ++j) {
      if ((cat.mds[i] & cat.mds[j]) != 0) continue;
      for (std::size_t k = j + 1; k < cat.mds.size(); ++k) {
        const auto used = static_cast<std::uint16_t>(cat.mds[i] | cat.mds[j]);
        if ((used & cat.mds[k]) != 0) continue;
        const auto rest = static_cast<std::uint16_t>(~(used | cat.mds[k]));
        if (!cat.is_mds.test(rest)) continue;
        std::array<std::uint16_t, 4> part{cat.mds[i], cat.mds[j], cat.mds[k], rest};
        std::sort(part.begin(), part.end(), mask_less);
        if (part[0] == cat.mds[i] && part[1] == cat.mds[j] && part[2] == cat.mds[k]) cat.mds_partitions.push_back(part);
      }
    }
  }
  return cat;
}

// Calls fn(trace, fiber) for every fiber of `s`; stops when fn returns false.
template <typename Fn>
bool all_fibers(const VertexSet& s, Fn&& fn) {
  const auto& p = s.params();
  for (int c = 0; c < p.coordinate_count(); ++c) {
    for (const auto& f : fibers_along(p, c)) {
      if (!fn(f.trace(s), f)) return false;
    }
  }
  return true;
}

}  // namespace

const ShCatalog& sh_catalog() {
  static const ShCatalog cat = build_catalog();
  return cat;
}

bool is_mds(const VertexSet& s) {
  if (s.count() * 4 != s.universe_size()) return false;
  return DoobGraph::shared(s.params())->is_independent(s);
}

bool is_two_mds(const VertexSet& s) {
  if (s.count() * 2 != s.universe_size()) return false;
  const auto& cat = sh_catalog();
  return all_fibers(s, [&](std::uint32_t trace, const Fiber& f) {
    return f.size == 16 ? cat.is_two_mds.test(trace) : std::popcount(trace) == 2;
  });
}

MdsCode::MdsCode(VertexSet set) : set_(std::move(set)) {
  if (!is_mds(set_)) throw InvalidCode("not an MDS code of " + set_.params().to_string());
}

TwoMdsCode::TwoMdsCode(VertexSet set) : set_(std::move(set)) {
  if (!is_two_mds(set_)) throw InvalidCode("not a 2xMDS code of " + set_.params().to_string());
}

LatinColoring::LatinColoring(DoobParams params, std::vector<std::uint8_t> colors)
    : params_(params), colors_(std::move(colors)) {
  if (colors_.size() != params_.vertex_count()) throw InvalidCode("colouring must cover every vertex");
  if (std::any_of(colors_.begin(), colors_.end(), [](std::uint8_t c) { return c > 3; })) {
    throw InvalidCode("colours are K4 elements 0..3");
  }
  for (int c = 0; c < 4; ++c) {
    if (!is_mds(color_class(c))) throw InvalidCode("colour class " + std::to_string(c) + " is not an MDS code");
  }
}

VertexSet LatinColoring::color_class(int color) const {
  VertexSet s(params_);
  for (VertexIndex v = 0; v < colors_.size(); ++v) {
    if (colors_[v] == color) s.insert(v);
  }
  return s;
}

std::size_t ComponentList::component_of(VertexIndex v) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].contains(v)) return i;
  }
  throw InvalidArgument("vertex is not in the parent set");
}

ComponentList components(const VertexSet& s) {
  const auto graph = DoobGraph::shared(s.params());
  ComponentList out{s, {}};
  VertexSet seen(s.params());
  std::deque<VertexIndex> queue;
  s.for_each([&](VertexIndex start) {
    if (seen.contains(start)) return;
    VertexSet comp(s.params());
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      comp.insert(v);
      for (const VertexIndex w : graph->neighbors(v)) {
        if (s.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
    }
    out.components.push_back(std::move(comp));
  });
  return out;
}

TwoMdsCode complement_code(const TwoMdsCode& code) { return TwoMdsCode(code.set().complement()); }

namespace {

// Per component: (part holding the minimum vertex, other part), or nothing
// when some component has an odd cycle.
std::optional<std::vector<std::pair<VertexSet, VertexSet>>> bipartition(const VertexSet& s) {
  const auto graph = DoobGraph::shared(s.params());
  const auto comps = components(s);
  std::vector<std::pair<VertexSet, VertexSet>> parts;
  for (const auto& comp : comps.components) {
    VertexSet side0(s.params());
    VertexSet side1(s.params());
    std::deque<VertexIndex> queue{comp.min_member()};
    side0.insert(comp.min_member());
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      const bool in0 = side0.contains(v);
      for (const VertexIndex w : graph->neighbors(v)) {
        if (!comp.contains(w)) continue;
        if ((in0 && side0.contains(w)) || (!in0 && side1.contains(w))) return std::nullopt;
        if (!side0.contains(w) && !side1.contains(w)) {
          (in0 ? side1 : side0).insert(w);
          queue.push_back(w);
        }
      }
    }
    parts.emplace_back(std::move(side0), std::move(side1));
  }
  return parts;
}

}  // namespace

std::optional<std::pair<MdsCode, MdsCode>> is_bipartite_two_mds(const TwoMdsCode& code) {
  const auto parts = bipartition(code.set());
  if (!parts) return std::nullopt;
  VertexSet first(code.params());
  VertexSet second(code.params());
  for (const auto& [a, b] : *parts) {
    first |= a;
    second |= b;
  }
  if (!is_mds(first) || !is_mds(second)) return std::nullopt;
  return std::make_pair(MdsCode(std::move(first)), MdsCode(std::move(second)));
}

void for_each_mds_within(const TwoMdsCode& code, const std::function<void(const MdsCode&)>& fn) {
  if (!is_bipartite_two_mds(code)) throw InvalidArgument("2xMDS code is not bipartite");
  const auto parts = *bipartition(code.set());
  if (parts.size() >= 63) throw CapExceeded("too many components to list every MDS subcode");
  const std::uint64_t choices = std::uint64_t{1} << parts.size();
  for (std::uint64_t choice = 0; choice < choices; ++choice) {
    VertexSet s(code.params());
    for (std::size_t i = 0; i < parts.size(); ++i) s |= ((choice >> i) & 1U) != 0 ? parts[i].second : parts[i].first;
    fn(MdsCode(std::move(s)));
  }
}

std::vector<MdsCode> mds_codes_within(const TwoMdsCode& code) {
  std::vector<MdsCode> out;
  for_each_mds_within(code, [&](const MdsCode& c) { out.push_back(c); });
  return out;
}

MdsCode graph_of_coloring(const LatinColoring& f) {
  const auto& p = f.params();
  const DoobParams target(p.m(), p.n() + 1);
  VertexSet s(target);
  // The appended K4 coordinate is the lowest index field.
  for (VertexIndex v = 0; v < p.vertex_count(); ++v) s.insert((v << 2) | static_cast<VertexIndex>(f.color(v)));
  return MdsCode(std::move(s));
}

LatinColoring coloring_from_mds(const MdsCode& code, int k_coord) {
  const auto& p = code.params();
  if (p.n() == 0) throw InvalidArgument("MDS codes of D(m,0) are not graphs of colourings");
  if (k_coord < 1 || k_coord > p.n()) throw InvalidArgument("K4 coordinate out of range");
  const int coord = p.m() + k_coord - 1;
  std::vector<int> rest;
  for (int c = 0; c < p.coordinate_count(); ++c) {
    if (c != coord) rest.push_back(c);
  }
  if (rest.empty()) throw InvalidArgument("D(0,1) has no coordinates left to colour");
  const SubProduct domain(p, rest);
  std::vector<std::uint8_t> colors(static_cast<std::size_t>(domain.sub().vertex_count()));
  for (VertexIndex r = 0; r < colors.size(); ++r) {
    const auto base = domain.embed(r);
    int found = -1;
    for (int t = 0; t < 4; ++t) {
      if (code.set().contains(p.with_digit(base, coord, t))) {
        if (found >= 0) throw InternalError("MDS code meets a K4 fiber twice");
        found = t;
      }
    }
    if (found < 0) throw InternalError("MDS code misses a K4 fiber");
    colors[r] = static_cast<std::uint8_t>(found);
  }
  return LatinColoring(domain.sub(), std::move(colors));
}

std::uint64_t edge_boundary_size(const VertexSet& s) {
  const auto graph = DoobGraph::shared(s.params());
  std::uint64_t total = 0;
  s.for_each([&](VertexIndex v) { total += static_cast<std::uint64_t>(graph->degree() - graph->neighbors_in(v, s)); });
  return total;
}

std::uint64_t max_edge_boundary(const DoobParams& params) {
  return static_cast<std::uint64_t>(params.weight()) * params.vertex_count();
}

bool is_halving_set(const VertexSet& s) {
  return all_fibers(s, [](std::uint32_t trace, const Fiber& f) { return std::popcount(trace) * 2 == f.size; });
}

}  // namespace doob
