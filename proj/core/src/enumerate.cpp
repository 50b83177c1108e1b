#include "doob/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <deque>
#include <exception>
#include <functional>
#include <thread>
#include <unordered_map>

#include "doob/error.hpp"
#include "doob/graph.hpp"
#include "doob/structure.hpp"

namespace doob {

const char* to_string(Target target) {
  switch (target) {
    case Target::mds: return "mds";
    case Target::two_mds: return "2mds";
    case Target::latin_coloring: return "latin";
  }
  return "mds";
}

namespace {

bool mask_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1U))) != 0;
}

// Flattened table: valid[(len << width) | bits] says some allowed mask agrees
// with `bits` on its low `len` bits.
struct PrefixTable {
  int width;
  std::vector<std::uint8_t> valid;

  PrefixTable(int w, const std::vector<std::uint32_t>& allowed)
      : width(w), valid(static_cast<std::size_t>(w + 1) << w, 0) {
    for (int len = 0; len <= width; ++len) {
      for (const auto a : allowed) valid[(static_cast<std::size_t>(len) << width) | (a & ((1U << len) - 1U))] = 1;
    }
  }

  bool ok(int len, std::uint32_t bits) const { return valid[(static_cast<std::size_t>(len) << width) | bits] != 0; }
};

std::vector<std::uint32_t> allowed_traces(Factor factor, Target target) {
  std::vector<std::uint32_t> out;
  if (factor == Factor::shrikhande) {
    const auto& cat = sh_catalog();
    const auto& src = target == Target::two_mds ? cat.two_mds : cat.mds;
    out.assign(src.begin(), src.end());
  } else {
    for (std::uint32_t m = 0; m < 16; ++m) {
      if (std::popcount(m) == (target == Target::two_mds ? 2 : 1)) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

using Words = std::vector<std::uint64_t>;

// Backtracking over the fibers of the last coordinate. Fiber r occupies the
// contiguous indices [r*B, (r+1)*B), so choosing fibers in order and trying
// traces in VertexSet order emits codes in ascending VertexSet order. Every
// other fiber is filled in increasing digit order; its partial trace is kept
// incrementally and pruned as soon as it fits no allowed trace.
class FiberSearch {
 public:
  FiberSearch(const DoobParams& params, Target target)
      : params_(params),
        last_(params.coordinate_count() - 1),
        block_(params.radix(last_)),
        blocks_(static_cast<VertexIndex>(params.vertex_count() / static_cast<std::uint64_t>(block_))),
        candidates_(allowed_traces(params.factor(last_), target)),
        sh_table_(16, allowed_traces(Factor::shrikhande, target)),
        k4_table_(4, allowed_traces(Factor::k4, target)) {
    const auto n = static_cast<VertexIndex>(params.vertex_count());
    cells_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(last_));
    for (VertexIndex v = 0; v < n; ++v) {
      for (int c = 0; c < last_; ++c) {
        const auto slot = static_cast<std::uint32_t>(c) * n + params.with_digit(v, c, 0);
        cells_.push_back({slot, static_cast<std::uint8_t>(params.digit(v, c)),
                          params.factor(c) == Factor::shrikhande ? &sh_table_ : &k4_table_});
      }
    }
  }

  const DoobParams& params() const { return params_; }
  const std::vector<std::uint32_t>& candidates() const { return candidates_; }

  /// Explores every completion whose first fiber carries `first`; emit
  /// receives the characteristic vector as 64-bit words.
  template <typename Emit>
  void run_from(std::uint32_t first, Emit&& emit) const {
    State st{Words(static_cast<std::size_t>((params_.vertex_count() + 63) / 64), 0),
             std::vector<std::uint32_t>(static_cast<std::size_t>(params_.vertex_count()) *
                                            static_cast<std::size_t>(std::max(last_, 1)),
                                        0)};
    if (!place(st, 0, first)) return;
    descend(st, 1, emit);
  }

  VertexSet to_set(const Words& words) const { return VertexSet::from_words(params_, words); }

 private:
  struct Cell {
    std::uint32_t slot;
    std::uint8_t digit;
    const PrefixTable* table;
  };

  struct State {
    Words bits;
    std::vector<std::uint32_t> traces;
  };

  template <typename Emit>
  void descend(State& st, VertexIndex block, Emit& emit) const {
    if (block == blocks_) {
      emit(static_cast<const Words&>(st.bits));
      return;
    }
    // Vertices of one block lie in pairwise distinct fibers of every other
    // coordinate, so a mask is feasible iff each of its bits is.
    std::uint32_t may_one = 0;
    std::uint32_t may_zero = 0;
    const VertexIndex first = block * static_cast<VertexIndex>(block_);
    for (int t = 0; t < block_; ++t) {
      bool one = true;
      bool zero = true;
      const Cell* cell = cell_row(first + static_cast<VertexIndex>(t));
      for (int c = 0; c < last_; ++c, ++cell) {
        const std::uint32_t trace = st.traces[cell->slot];
        one = one && cell->table->ok(cell->digit + 1, trace | (1U << cell->digit));
        zero = zero && cell->table->ok(cell->digit + 1, trace);
      }
      may_one |= static_cast<std::uint32_t>(one) << t;
      may_zero |= static_cast<std::uint32_t>(zero) << t;
    }
    const std::uint32_t width = (1U << block_) - 1U;
    for (const auto mask : candidates_) {
      if ((mask & ~may_one) != 0 || (~mask & width & ~may_zero) != 0) continue;
      place(st, block, mask);
      descend(st, block + 1, emit);
      undo(st, block);
    }
  }

  const Cell* cell_row(VertexIndex v) const {
    return cells_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(last_);
  }

  bool place(State& st, VertexIndex block, std::uint32_t mask) const {
    const VertexIndex first = block * static_cast<VertexIndex>(block_);
    st.bits[first >> 6] |= static_cast<std::uint64_t>(mask) << (first & 63);
    bool ok = true;
    for (int t = 0; t < block_; ++t) {
      const std::uint32_t bit = (mask >> t) & 1U;
      const Cell* cell = cell_row(first + static_cast<VertexIndex>(t));
      for (int c = 0; c < last_; ++c, ++cell) {
        const std::uint32_t trace = st.traces[cell->slot] | (bit << cell->digit);
        st.traces[cell->slot] = trace;
        ok = ok && cell->table->ok(cell->digit + 1, trace);
      }
    }
    return ok;
  }

  // Digits fill in increasing order, so clearing bits from each cell's digit
  // upwards restores the state before place().
  void undo(State& st, VertexIndex block) const {
    const VertexIndex first = block * static_cast<VertexIndex>(block_);
    const std::uint64_t width_mask = (std::uint64_t{1} << block_) - 1;
    st.bits[first >> 6] &= ~(width_mask << (first & 63));
    for (int t = 0; t < block_; ++t) {
      const Cell* cell = cell_row(first + static_cast<VertexIndex>(t));
      for (int c = 0; c < last_; ++c, ++cell) st.traces[cell->slot] &= (1U << cell->digit) - 1U;
    }
  }

  DoobParams params_;
  int last_;
  int block_;
  VertexIndex blocks_;
  std::vector<std::uint32_t> candidates_;
  PrefixTable sh_table_;
  PrefixTable k4_table_;
  std::vector<Cell> cells_;
};

// Word-level versions of the two properties compared by the key proposition,
// for use inside the search where building VertexSets per code is too slow.
class KeyChecker {
 public:
  explicit KeyChecker(const DoobParams& params)
      : coords_(params.coordinate_count()),
        words_(static_cast<std::size_t>((params.vertex_count() + 63) / 64)) {
    const auto n = static_cast<VertexIndex>(params.vertex_count());
    const auto& g = DoobGraph::shared(params);
    nbr_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (VertexIndex v = 0; v < n; ++v) {
      for (const auto u : g->neighbors(v)) nbr_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    for (int i = 0; i < coords_; ++i) {
      for (int j = i + 1; j < coords_; ++j) {
        Pair pr{i, j, {}};
        for (VertexIndex v = 0; v < n; ++v) {
          if (params.digit(v, i) == 0 || params.digit(v, j) == 0) continue;
          const VertexIndex vi = params.with_digit(v, i, 0);
          const VertexIndex vj = params.with_digit(v, j, 0);
          pr.quads.push_back({v, vi, vj, params.with_digit(vi, j, 0)});
        }
        pairs_.push_back(std::move(pr));
      }
    }
  }

  /// Number of components of the interaction graph of the coordinates.
  int interaction_components(const Words& s) const {
    std::vector<int> parent(static_cast<std::size_t>(coords_));
    for (int i = 0; i < coords_; ++i) parent[i] = i;
    const auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = coords_;
    for (const auto& pr : pairs_) {
      const int a = find(pr.i);
      const int b = find(pr.j);
      if (a == b) continue;
      for (const auto& q : pr.quads) {
        if (bit(s, q[0]) ^ bit(s, q[1]) ^ bit(s, q[2]) ^ bit(s, q[3])) {
          parent[std::max(a, b)] = std::min(a, b);
          --comps;
          break;
        }
      }
    }
    return comps;
  }

  /// Whether the subgraph induced by the nonempty set s is connected.
  bool connected(const Words& s) const {
    Words reached(words_, 0);
    Words frontier(words_, 0);
    Words next(words_, 0);
    std::size_t w0 = 0;
    while (s[w0] == 0) ++w0;
    frontier[w0] = s[w0] & (~s[w0] + 1);
    reached[w0] = frontier[w0];
    bool grew = true;
    while (grew) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words_; ++w) {
        for (auto bits = frontier[w]; bits != 0; bits &= bits - 1) {
          const auto v = static_cast<std::size_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
          for (std::size_t k = 0; k < words_; ++k) next[k] |= nbr_[v * words_ + k];
        }
      }
      grew = false;
      for (std::size_t w = 0; w < words_; ++w) {
        frontier[w] = next[w] & s[w] & ~reached[w];
        reached[w] |= frontier[w];
        grew = grew || frontier[w] != 0;
      }
    }
    return reached == s;
  }

 private:
  struct Pair {
    int i;
    int j;
    std::vector<std::array<VertexIndex, 4>> quads;
  };

  static bool bit(const Words& s, VertexIndex v) { return ((s[v >> 6] >> (v & 63)) & 1U) != 0; }

  int coords_;
  std::size_t words_;
  std::vector<std::uint64_t> nbr_;
  std::vector<Pair> pairs_;
};

void check_cap(const DoobParams& searched) {
  const auto cap = vertex_cap(kSearchCap);
  if (searched.vertex_count() > cap) {
    throw CapExceeded("search over " + searched.to_string() + " exceeds the vertex cap of " + std::to_string(cap));
  }
}

Target searched_target(Target t) { return t == Target::latin_coloring ? Target::mds : t; }

// Runs fn(i) for i in [0, count) on up to `threads` workers. If any call
// throws, rethrows the exception of the smallest failing index.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  const auto workers = std::min<std::size_t>(threads, count);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

DoobParams search_params(const SearchSpec& spec) {
  if (spec.target == Target::latin_coloring) return DoobParams(spec.params.m(), spec.params.n() + 1);
  return spec.params;
}

void enumerate_codes(const SearchSpec& spec, const std::function<void(const VertexSet&)>& sink) {
  const auto searched = search_params(spec);
  check_cap(searched);
  const FiberSearch search(searched, searched_target(spec.target));
  const auto& firsts = search.candidates();
  if (spec.threads <= 1) {
    for (const auto first : firsts) {
      search.run_from(first, [&](const Words& w) { sink(search.to_set(w)); });
    }
    return;
  }
  std::vector<std::vector<VertexSet>> parts(firsts.size());
  parallel_for(firsts.size(), spec.threads, [&](std::size_t i) {
    search.run_from(firsts[i], [&](const Words& w) { parts[i].push_back(search.to_set(w)); });
  });
  for (const auto& part : parts) {
    for (const auto& s : part) sink(s);
  }
}

std::vector<VertexSet> collect_codes(const SearchSpec& spec) {
  std::vector<VertexSet> out;
  enumerate_codes(spec, [&](const VertexSet& s) { out.push_back(s); });
  return out;
}

std::uint64_t count_codes(const SearchSpec& spec) {
  const auto searched = search_params(spec);
  check_cap(searched);
  const FiberSearch search(searched, searched_target(spec.target));
  const auto& firsts = search.candidates();
  std::vector<std::uint64_t> counts(firsts.size(), 0);
  parallel_for(firsts.size(), spec.threads, [&](std::size_t i) {
    search.run_from(firsts[i], [&](const Words&) { ++counts[i]; });
  });
  std::uint64_t total = 0;
  for (const auto c : counts) total += c;
  return total;
}

std::vector<LatinColoring> enumerate_latin_colorings(const DoobParams& params, unsigned threads) {
  const SearchSpec spec{params, Target::latin_coloring, SearchMode::all, threads};
  std::vector<LatinColoring> out;
  const int colour_coord = params.n() + 1;
  enumerate_codes(spec, [&](const VertexSet& s) { out.push_back(coloring_from_mds(MdsCode(s), colour_coord)); });
  return out;
}

EquivalenceClasses reduce_to_classes(const std::vector<VertexSet>& sets, const AutGenerators& generators) {
  const auto gens = generators.all();
  std::unordered_map<VertexSet, std::size_t> class_of;
  std::vector<VertexSet> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> orbits;
  for (const auto& s : sets) {
    if (!(s.params() == generators.params)) throw ParamMismatch("set and generators of different graphs");
    if (const auto it = class_of.find(s); it != class_of.end()) {
      ++sizes[it->second];
      continue;
    }
    const std::size_t idx = reps.size();
    VertexSet least = s;
    std::uint64_t orbit = 1;
    class_of.emplace(s, idx);
    std::deque<VertexSet> queue{s};
    while (!queue.empty()) {
      const auto cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        auto img = apply(g, cur);
        if (class_of.emplace(img, idx).second) {
          if (img < least) least = img;
          ++orbit;
          queue.push_back(std::move(img));
        }
      }
    }
    reps.push_back(std::move(least));
    sizes.push_back(1);
    orbits.push_back(orbit);
  }

  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return reps[a] < reps[b]; });
  EquivalenceClasses out;
  for (const auto i : order) {
    out.representatives.push_back(reps[i]);
    out.class_sizes.push_back(sizes[i]);
    out.orbit_sizes.push_back(orbits[i]);
  }
  return out;
}

EnumerationResult run_search(const SearchSpec& spec) {
  EnumerationResult out{spec, 0, {}, std::nullopt};
  if (spec.mode == SearchMode::count_only) {
    out.total = count_codes(spec);
    return out;
  }
  out.sets = collect_codes(spec);
  out.total = out.sets.size();
  if (spec.mode == SearchMode::up_to_equivalence) {
    const auto searched = search_params(spec);
    const auto gens = spec.target == Target::latin_coloring ? aut_generators_fixing_last(searched) : aut_generators(searched);
    out.classes = reduce_to_classes(out.sets, gens);
  }
  return out;
}

TheoremReport verify_theorem_on(const DoobParams& params, unsigned threads) {
  const auto codes = collect_codes({params, Target::mds, SearchMode::all, threads});
  std::vector<std::uint8_t> verdict(codes.size(), 0);
  parallel_for(codes.size(), threads, [&](std::size_t i) {
    const auto c = classify(MdsCode(codes[i]));
    verdict[i] = static_cast<std::uint8_t>((c.semilinear() ? 1 : 0) | (c.reducible() ? 2 : 0));
  });
  TheoremReport r{params, codes.size(), 0, 0, 0};
  for (const auto v : verdict) {
    if (v == 1) ++r.semilinear_only;
    if (v == 2) ++r.reducible_only;
    if (v == 3) ++r.both;
  }
  return r;
}

KeyPropositionReport verify_key_proposition_on(const DoobParams& params, unsigned threads) {
  check_cap(params);
  const FiberSearch search(params, Target::two_mds);
  const KeyChecker checker(params);
  const auto& firsts = search.candidates();
  struct Tally {
    std::uint64_t total = 0;
    std::uint64_t decomposable = 0;
    std::uint64_t connected = 0;
    std::vector<VertexSet> violations;
  };
  std::vector<Tally> tallies(firsts.size());
  parallel_for(firsts.size(), threads, [&](std::size_t i) {
    auto& t = tallies[i];
    search.run_from(firsts[i], [&](const Words& w) {
      ++t.total;
      const bool decomposable = checker.interaction_components(w) > 1;
      const bool connected = checker.connected(w);
      t.decomposable += decomposable ? 1 : 0;
      t.connected += connected ? 1 : 0;
      if (decomposable || !connected) {
        // Rare cases go through the full library path as a cross-check.
        const TwoMdsCode code(search.to_set(w));
        if (canonical_decomposition(code).decomposable() != decomposable ||
            (components(code.set()).size() == 1) != connected) {
          throw InternalError("fast key-proposition check disagrees with the library");
        }
      }
      if (decomposable == connected) t.violations.push_back(search.to_set(w));
    });
  });
  KeyPropositionReport r{params, 0, 0, 0, {}, params == DoobParams(1, 0)};
  for (auto& t : tallies) {
    r.total += t.total;
    r.decomposable += t.decomposable;
    r.connected += t.connected;
    for (auto& v : t.violations) r.violations.push_back(std::move(v));
  }
  return r;
}

}  // namespace doob
