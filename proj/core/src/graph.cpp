#include "doob/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "doob/error.hpp"

namespace doob {

namespace {

constexpr int kShDiffs[6][2] = {{0, 1}, {1, 0}, {1, 1}, {0, 3}, {3, 0}, {3, 3}};

// Beyond this the neighbour table alone is hundreds of megabytes.
constexpr std::uint64_t kGraphLimit = std::uint64_t{1} << 22;

}  // namespace

DoobGraph::DoobGraph(DoobParams params) : params_(params), degree_(params.degree()) {
  if (params_.vertex_count() > kGraphLimit) {
    throw CapExceeded(params_.to_string() + " is too large to materialise");
  }
  const auto n = params_.vertex_count();
  neighbors_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(degree_));
  std::size_t pos = 0;
  for (VertexIndex v = 0; v < n; ++v) {
    for (int c = 0; c < params_.coordinate_count(); ++c) {
      const int t = params_.digit(v, c);
      if (params_.factor(c) == Factor::shrikhande) {
        for (const auto& d : kShDiffs) {
          const int a = ((t >> 2) + d[0]) & 3;
          const int b = ((t & 3) + d[1]) & 3;
          neighbors_[pos++] = params_.with_digit(v, c, 4 * a + b);
        }
      } else {
        for (int x = 1; x < 4; ++x) neighbors_[pos++] = params_.with_digit(v, c, t ^ x);
      }
    }
  }
}

std::shared_ptr<const DoobGraph> DoobGraph::shared(const DoobParams& params) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const DoobGraph>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[{params.m(), params.n()}];
  if (!slot) slot = std::make_shared<const DoobGraph>(params);
  return slot;
}

bool DoobGraph::adjacent(VertexIndex u, VertexIndex v) const {
  const auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

int DoobGraph::neighbors_in(VertexIndex v, const VertexSet& s) const {
  int k = 0;
  for (const VertexIndex w : neighbors(v)) k += s.contains(w) ? 1 : 0;
  return k;
}

VertexSet DoobGraph::closed_neighborhood(const VertexSet& s) const {
  VertexSet out = s;
  s.for_each([&](VertexIndex v) {
    for (const VertexIndex w : neighbors(v)) out.insert(w);
  });
  return out;
}

bool DoobGraph::is_independent(const VertexSet& s) const {
  if (!(s.params() == params_)) throw ParamMismatch("set and graph of different parameters");
  bool ok = true;
  s.for_each([&](VertexIndex v) {
    if (ok && neighbors_in(v, s) != 0) ok = false;
  });
  return ok;
}

std::uint32_t Fiber::trace(const VertexSet& s) const {
  std::uint32_t mask = 0;
  for (int t = 0; t < size; ++t) mask |= static_cast<std::uint32_t>(s.contains(at(t))) << t;
  return mask;
}

VertexSet Fiber::to_set(const DoobParams& params) const {
  VertexSet s(params);
  for (int t = 0; t < size; ++t) s.insert(at(t));
  return s;
}

std::vector<Fiber> fibers_along(const DoobParams& params, int coord) {
  if (coord < 0 || coord >= params.coordinate_count()) throw InvalidArgument("coordinate out of range");
  std::vector<Fiber> out;
  const auto n = params.vertex_count();
  out.reserve(static_cast<std::size_t>(n / static_cast<std::uint64_t>(params.radix(coord))));
  for (VertexIndex v = 0; v < n; ++v) {
    if (params.digit(v, coord) == 0) out.push_back({coord, v, params.stride(coord), params.radix(coord)});
  }
  return out;
}

std::vector<Fiber> sh_fibers(const DoobParams& params) {
  if (params.m() == 0) throw InvalidArgument(params.to_string() + " has no Shrikhande coordinate");
  std::vector<Fiber> out;
  for (int c = 0; c < params.m(); ++c) {
    auto f = fibers_along(params, c);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

std::vector<Fiber> k4_fibers(const DoobParams& params) {
  if (params.n() == 0) throw InvalidArgument(params.to_string() + " has no K4 coordinate");
  std::vector<Fiber> out;
  for (int c = params.m(); c < params.coordinate_count(); ++c) {
    auto f = fibers_along(params, c);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

namespace {

DoobParams sub_params(const DoobParams& full, const std::vector<int>& coords) {
  if (coords.empty()) throw InvalidArgument("empty coordinate set");
  int m = 0;
  int n = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= full.coordinate_count()) throw InvalidArgument("coordinate out of range");
    if (i > 0 && coords[i] <= coords[i - 1]) throw InvalidArgument("coordinates must be strictly ascending");
    (full.factor(coords[i]) == Factor::shrikhande ? m : n) += 1;
  }
  return DoobParams(m, n);
}

}  // namespace

SubProduct::SubProduct(DoobParams full, std::vector<int> coords)
    : full_(full), coords_(std::move(coords)), sub_(sub_params(full_, coords_)) {}

VertexIndex SubProduct::embed(VertexIndex sub_index) const {
  VertexIndex v = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    v = full_.with_digit(v, coords_[i], sub_.digit(sub_index, static_cast<int>(i)));
  }
  return v;
}

VertexIndex SubProduct::project(VertexIndex full_index) const {
  VertexIndex x = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    x = sub_.with_digit(x, static_cast<int>(i), full_.digit(full_index, coords_[i]));
  }
  return x;
}

SubProduct SubProduct::complement() const {
  std::vector<int> rest;
  for (int c = 0; c < full_.coordinate_count(); ++c) {
    if (!std::binary_search(coords_.begin(), coords_.end(), c)) rest.push_back(c);
  }
  return SubProduct(full_, std::move(rest));
}

VertexSet SubProduct::restrict(const VertexSet& s, VertexIndex context) const {
  if (!(s.params() == full_)) throw ParamMismatch("set does not live in the full product");
  VertexSet out(sub_);
  const auto n = sub_.vertex_count();
  for (VertexIndex x = 0; x < n; ++x) {
    if (s.contains(embed(x) + context)) out.insert(x);
  }
  return out;
}

std::vector<int> eigenvalue_list(const DoobParams& params) {
  const int d = params.weight();
  std::vector<int> out;
  for (int i = 0; i <= d; ++i) out.push_back(-d + 4 * i);
  return out;
}

bool verify_spectrum(const DoobParams& params) {
  const auto cap = vertex_cap(256);
  if (params.vertex_count() > cap) {
    throw CapExceeded(params.to_string() + " has more than " + std::to_string(cap) + " vertices");
  }
  const auto graph = DoobGraph::shared(params);
  const auto eig = eigenvalue_list(params);

  // Entries of a product are bounded by the product of the row-sum norms.
  long double bound = 1;
  for (const int l : eig) bound *= static_cast<long double>(graph->degree() + std::abs(l));
  if (bound > 4e18L) throw CapExceeded("annihilator entries would exceed 64-bit range");

  const auto n = static_cast<std::size_t>(params.vertex_count());
  std::vector<std::int64_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    m[i * n + i] = -eig.front();
    for (const VertexIndex j : graph->neighbors(static_cast<VertexIndex>(i))) m[i * n + j] = 1;
  }
  std::vector<std::int64_t> next(n * n);
  for (std::size_t e = 1; e < eig.size(); ++e) {
    // next = m * A - lambda m
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t* row = &m[i * n];
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t acc = -static_cast<std::int64_t>(eig[e]) * row[j];
        for (const VertexIndex k : graph->neighbors(static_cast<VertexIndex>(j))) acc += row[k];
        next[i * n + j] = acc;
      }
    }
    std::swap(m, next);
  }
  return std::all_of(m.begin(), m.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace doob
