#include "suite.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "doob/doob.hpp"

namespace doob::suite {

namespace {

// Collects the first few mismatches; everything else is counted.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  Outcome finish(const std::string& summary) const {
    if (ok()) return {true, summary};
    return {false, std::to_string(failures_) + " mismatch(es): " + notes_.str()};
  }

 private:
  std::uint64_t failures_ = 0;
  std::ostringstream notes_;
};

std::string str(const DoobParams& p) { return p.to_string(); }

std::uint64_t pow_u(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Frozen oracle totals, computed by an independent vertex-by-vertex counter.
const std::map<std::pair<int, int>, std::uint64_t> kMdsTotals = {
    {{1, 0}, 16}, {{0, 1}, 4}, {{0, 2}, 24}, {{1, 1}, 240}, {{0, 3}, 576}, {{2, 0}, 5856}};
const std::map<std::pair<int, int>, std::uint64_t> kTwoMdsTotals = {
    {{1, 0}, 42}, {{0, 1}, 6}, {{0, 2}, 90}, {{1, 1}, 6894}, {{0, 3}, 51678}, {{2, 0}, 18207378}};

Outcome graph_kernel(unsigned) {
  Tally t;
  const DoobParams shp(1, 0);
  const DoobGraph sh(shp);
  std::uint64_t endpoints = 0;
  for (VertexIndex v = 0; v < 16; ++v) endpoints += sh.neighbors(v).size();
  if (sh.vertex_count() != 16) t.fail("Sh vertex count");
  if (endpoints != 96 || shp.edge_count() != 48) t.fail("Sh edge count " + std::to_string(endpoints / 2));
  for (VertexIndex u = 0; u < 16; ++u) {
    if (sh.neighbors(u).size() != 6) t.fail("Sh degree");
    for (VertexIndex v = u + 1; v < 16; ++v) {
      int common = 0;
      for (VertexIndex w = 0; w < 16; ++w) common += (sh.adjacent(u, w) && sh.adjacent(v, w)) ? 1 : 0;
      if (common != 2) t.fail("Sh pair " + std::to_string(u) + "," + std::to_string(v) + " has " +
                              std::to_string(common) + " common neighbours");
    }
  }

  int graphs = 0;
  for (int weight = 1; weight <= 6; ++weight) {
    for (int m = 0; 2 * m <= weight; ++m) {
      const DoobParams p(m, weight - 2 * m);
      const DoobGraph g(p);
      ++graphs;
      const auto n = static_cast<VertexIndex>(p.vertex_count());
      for (VertexIndex v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        if (static_cast<int>(nb.size()) != p.degree()) t.fail(str(p) + " degree");
        std::set<VertexIndex> distinct(nb.begin(), nb.end());
        if (distinct.size() != nb.size() || distinct.count(v) != 0) t.fail(str(p) + " repeated neighbour");
        for (const auto u : nb) {
          int differing = 0;
          bool factor_edge = true;
          for (int c = 0; c < p.coordinate_count(); ++c) {
            const int a = p.digit(v, c);
            const int b = p.digit(u, c);
            if (a == b) continue;
            ++differing;
            factor_edge = p.factor(c) == Factor::shrikhande
                              ? sh_adjacent(ShElement::from_value(a), ShElement::from_value(b))
                              : k4_adjacent(K4Element::from_value(a), K4Element::from_value(b));
          }
          if (differing != 1 || !factor_edge) t.fail(str(p) + " non-edge listed as neighbour");
          const auto back = g.neighbors(u);
          if (std::find(back.begin(), back.end(), v) == back.end()) t.fail(str(p) + " asymmetric adjacency");
        }
      }
    }
  }
  return t.finish("Sh is (16,6,2,2) with 48 edges; " + std::to_string(graphs) + " graphs up to 4096 vertices regular");
}

Outcome spectrum(unsigned) {
  Tally t;
  for (const auto p : {DoobParams(1, 0), DoobParams(0, 1), DoobParams(0, 2), DoobParams(1, 1)}) {
    std::vector<int> expected;
    for (int i = 0; i <= p.weight(); ++i) expected.push_back(-p.weight() + 4 * i);
    if (eigenvalue_list(p) != expected) t.fail(str(p) + " eigenvalue list");
    if (!verify_spectrum(p)) t.fail(str(p) + " product not annihilated");
  }
  return t.finish("prod (A - lambda I) = 0 for D(1,0), D(0,1), D(0,2), D(1,1)");
}

Outcome max_cut(unsigned) {
  Tally t;
  const DoobParams sh(1, 0);
  std::uint64_t best = 0;
  int maximisers = 0;
  int two_mds = 0;
  for (std::uint32_t mask = 0; mask < 65536; ++mask) {
    const auto s = VertexSet::from_mask(sh, mask);
    const auto cut = edge_boundary_size(s);
    best = std::max(best, cut);
    const bool is_max = cut == max_edge_boundary(sh);
    const bool valid = is_two_mds(s);
    maximisers += is_max ? 1 : 0;
    two_mds += valid ? 1 : 0;
    if (is_max != valid) t.fail("mask " + std::to_string(mask));
  }
  if (best != 32 || max_edge_boundary(sh) != 32) t.fail("Sh maximum cut " + std::to_string(best));

  const DoobParams k4(0, 1);
  std::uint64_t best_k = 0;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    const auto cut = edge_boundary_size(VertexSet::from_mask(k4, mask));
    best_k = std::max(best_k, cut);
    if ((cut == 4) != (std::popcount(mask) == 2)) t.fail("K4 mask " + std::to_string(mask));
  }
  if (best_k != 4) t.fail("K4 maximum cut " + std::to_string(best_k));
  return t.finish("Sh max cut 32 attained by exactly the " + std::to_string(two_mds) +
                  " 2xMDS codes; K4 max cut 4 at the 6 pairs");
}

Outcome class_counts(unsigned threads) {
  Tally t;
  const DoobParams sh(1, 0);
  const auto aut = all_automorphisms(SmallGraph::shrikhande());
  if (aut.size() != 192) t.fail("|Aut(Sh)| = " + std::to_string(aut.size()));
  struct Case {
    Target target;
    std::size_t classes;
    std::uint64_t total;
  };
  std::ostringstream summary;
  for (const auto& c : {Case{Target::mds, 2, 16}, Case{Target::latin_coloring, 3, 240}, Case{Target::two_mds, 3, 42}}) {
    const auto r = run_search({sh, c.target, SearchMode::up_to_equivalence, threads});
    const auto gens = c.target == Target::latin_coloring ? aut_generators_fixing_last(search_params(r.spec))
                                                         : aut_generators(sh);
    const auto& cls = *r.classes;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < cls.class_count(); ++i) {
      sum += cls.class_sizes[i];
      if (gens.group_order() % cls.orbit_sizes[i] != 0) t.fail(std::string(to_string(c.target)) + " orbit size");
    }
    if (cls.class_count() != c.classes) {
      t.fail(std::string(to_string(c.target)) + " classes " + std::to_string(cls.class_count()));
    }
    if (r.total != c.total || sum != r.total) t.fail(std::string(to_string(c.target)) + " total");
    summary << to_string(c.target) << " " << cls.class_count() << "/" << r.total << " ";
  }
  return t.finish("classes/total in Sh: " + summary.str() + "|Aut(Sh)|=192");
}

Outcome linear_counts(unsigned) {
  Tally t;
  std::ostringstream summary;
  for (const auto p : {DoobParams(1, 0), DoobParams(0, 2), DoobParams(1, 1), DoobParams(2, 0)}) {
    const auto codes = enumerate_linear(p);
    const auto expected = 2 * pow_u(3, p.coordinate_count());
    std::unordered_set<VertexSet> distinct;
    for (const auto& c : codes) {
      distinct.insert(c.set());
      if (!is_two_mds(c.set()) || !is_linear(c)) t.fail(str(p) + " invalid linear code");
    }
    if (codes.size() != expected || distinct.size() != expected) {
      t.fail(str(p) + " has " + std::to_string(distinct.size()) + " linear codes");
    }
    summary << str(p) << "=" << distinct.size() << " ";
  }
  return t.finish("2*3^(m+n) linear codes: " + summary.str());
}

Outcome linear_components(unsigned threads) {
  Tally t;
  std::ostringstream summary;
  for (const auto p : {DoobParams(1, 0), DoobParams(0, 1), DoobParams(0, 2), DoobParams(1, 1), DoobParams(0, 3)}) {
    const auto comps = std::uint64_t{1} << (p.weight() - 1);
    const auto within = std::uint64_t{1} << comps;
    const auto all_mds = collect_codes({p, Target::mds, SearchMode::all, threads});
    for (const auto& l : enumerate_linear(p)) {
      if (components(l.set()).size() != comps) t.fail(str(p) + " component count");
      const auto inside = mds_codes_within(l);
      std::unordered_set<VertexSet> distinct;
      for (const auto& c : inside) {
        distinct.insert(c.set());
        if (!c.set().is_subset_of(l.set())) t.fail(str(p) + " generated code escapes");
      }
      const auto direct = static_cast<std::uint64_t>(std::count_if(
          all_mds.begin(), all_mds.end(), [&](const VertexSet& c) { return c.is_subset_of(l.set()); }));
      if (inside.size() != within || distinct.size() != within || direct != within) {
        t.fail(str(p) + " MDS codes inside: generated " + std::to_string(distinct.size()) + ", by scan " +
               std::to_string(direct));
      }
    }
    summary << str(p) << " N=" << comps << " 2^N=" << within << " ";
  }
  return t.finish(summary.str());
}

Outcome key_proposition(unsigned threads) {
  Tally t;
  std::ostringstream summary;
  for (const auto p : {DoobParams(0, 2), DoobParams(1, 1), DoobParams(2, 0)}) {
    const auto r = verify_key_proposition_on(p, threads);
    if (!r.violations.empty()) t.fail(str(p) + " " + std::to_string(r.violations.size()) + " violations");
    if (r.total != kTwoMdsTotals.at({p.m(), p.n()})) t.fail(str(p) + " total " + std::to_string(r.total));
    if (r.decomposable + r.connected != r.total) t.fail(str(p) + " tallies");
    summary << str(p) << " " << r.total << " codes, " << r.decomposable << " decomposable; ";
  }
  // The excluded graph: the disconnected codes of Sh are exactly the exceptions.
  const DoobParams sh(1, 0);
  const auto r = verify_key_proposition_on(sh, threads);
  std::set<VertexSet> disconnected;
  for (const auto& s : collect_codes({sh, Target::two_mds})) {
    if (components(s).size() > 1) disconnected.insert(s);
  }
  const std::set<VertexSet> exceptions(r.violations.begin(), r.violations.end());
  if (!r.excluded_case || exceptions != disconnected || exceptions.size() != 6) t.fail("D(1,0) exclusion");
  for (const auto& s : exceptions) {
    if (canonical_decomposition(TwoMdsCode(s)).k() != 1) t.fail("D(1,0) exception is decomposable");
  }
  summary << "D(1,0): " << exceptions.size() << " disconnected codes with k=1";
  return t.finish(summary.str());
}

Outcome theorem(unsigned threads) {
  Tally t;
  std::ostringstream summary;
  for (const auto p : {DoobParams(1, 0), DoobParams(0, 2), DoobParams(0, 3), DoobParams(1, 1), DoobParams(2, 0)}) {
    const auto r = verify_theorem_on(p, threads);
    if (r.total != kMdsTotals.at({p.m(), p.n()})) t.fail(str(p) + " total " + std::to_string(r.total));
    if (r.semilinear_only + r.reducible_only + r.both != r.total) t.fail(str(p) + " unclassified codes");
    if (p == DoobParams(1, 0) && r.reducible_only + r.both != 0) t.fail("reducible code in D(1,0)");
    // Witnesses must re-verify.
    for (const auto& s : collect_codes({p, Target::mds, SearchMode::all, threads})) {
      const MdsCode code(s);
      const auto c = classify(code);
      if (c.linear_witness && (!s.is_subset_of(c.linear_witness->set()) || !is_linear(*c.linear_witness))) {
        t.fail(str(p) + " bad linear witness");
      }
      if (c.reducible_witness && !(c.reducible_witness->reconstruct(p) == s)) t.fail(str(p) + " bad reducible witness");
    }
    summary << str(p) << " " << r.total << " (" << r.semilinear_only << "/" << r.reducible_only << "/" << r.both
            << ") ";
  }
  return t.finish("total (semilinear only/reducible only/both): " + summary.str());
}

Outcome quotient_scan(unsigned) {
  Tally t;
  const DoobParams sh(1, 0);
  const QuotientMatrix2 mds_q{0, 6, 2, 4};
  const QuotientMatrix2 two_q{2, 4, 4, 2};
  int mds_hits = 0;
  int two_hits = 0;
  for (std::uint32_t mask = 1; mask < 65535; ++mask) {
    const auto s = VertexSet::from_mask(sh, mask);
    const bool mds = is_mds(s);
    const bool two = is_two_mds(s);
    const auto q = quotient_matrix(s, s.complement());
    const auto e = check_extremal_partition(s);
    const bool q_mds = q && *q == mds_q;
    const bool q_two = q && *q == two_q;
    mds_hits += q_mds ? 1 : 0;
    two_hits += q_two ? 1 : 0;
    if (q_mds != mds || ((e.kind == ExtremalKind::mds && e.a == 0) != mds)) t.fail("MDS mask " + std::to_string(mask));
    if (q_two != two || ((e.kind == ExtremalKind::two_mds && e.a == 2) != two)) {
      t.fail("2xMDS mask " + std::to_string(mask));
    }
  }
  return t.finish("[[0,6],[2,4]] on exactly the " + std::to_string(mds_hits) + " MDS codes, [[2,4],[4,2]] on exactly the " +
                  std::to_string(two_hits) + " 2xMDS codes");
}

Outcome intermediate(unsigned) {
  Tally t;
  const DoobParams sh(1, 0);
  const DoobParams sh2(2, 0);
  const QuotientMatrix2 base_q{1, 5, 3, 3};
  const QuotientMatrix2 square_q{2, 10, 6, 6};
  // |S| = c / (b + c) |V| for [[1,5],[3,3]].
  const auto forced = base_q.s21 * 16 / (base_q.s12 + base_q.s21);
  const auto bases = find_intermediate_base();
  if (bases.empty()) t.fail("no intermediate base");
  if (bases.size() != 32) t.fail("base count " + std::to_string(bases.size()));
  for (const auto& b : bases) {
    if (static_cast<std::int64_t>(b.count()) != forced) t.fail("base of size " + std::to_string(b.count()));
    const auto q = quotient_matrix(b, b.complement());
    if (!q || !(*q == base_q)) t.fail("base quotient");
    if (!(intermediate_partition(b, 1) == b)) t.fail("n=1 does not reproduce the base");
    const auto cell = intermediate_partition(b, 2);
    VertexSet direct(sh2);
    for (VertexIndex v = 0; v < 256; ++v) {
      const auto x = ShElement::from_value(sh2.digit(v, 0));
      const auto y = ShElement::from_value(sh2.digit(v, 1));
      const ShElement sum{static_cast<std::uint8_t>((x.a + y.a) & 3), static_cast<std::uint8_t>((x.b + y.b) & 3)};
      direct.assign(v, b.contains(static_cast<VertexIndex>(sum.value())));
    }
    if (!(cell == direct)) t.fail("n=2 cell differs from the sum construction");
    if (cell.count() != 96) t.fail("n=2 cell size " + std::to_string(cell.count()));
    const auto q2 = quotient_matrix(cell, cell.complement());
    if (!q2 || !(*q2 == square_q)) t.fail("n=2 quotient");
  }
  return t.finish(std::to_string(bases.size()) + " bases of size " + std::to_string(forced) +
                  "; n=2 cells of size 96 with [[2,10],[6,6]]");
}

Outcome neighbourhood_multicomponents(unsigned threads) {
  Tally t;
  std::ostringstream summary;
  for (const auto p : {DoobParams(0, 2), DoobParams(1, 1)}) {
    const auto& g = DoobGraph::shared(p);
    std::uint64_t checked = 0;
    for (const auto& m : collect_codes({p, Target::two_mds, SearchMode::all, threads})) {
      const auto own = components(m);
      const auto other = components(m.complement());
      const auto n = own.size();
      for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << n); ++choice) {
        VertexSet l(p);
        for (std::size_t i = 0; i < n; ++i) {
          if ((choice >> i) & 1U) l |= own.components[i];
        }
        const auto l1 = g->closed_neighborhood(l) - l;
        bool union_of_components = l1.is_subset_of(m.complement()) && !l1.empty();
        for (const auto& c : other.components) {
          if (l1.intersects(c) && !c.is_subset_of(l1)) union_of_components = false;
        }
        if (!union_of_components) t.fail(str(p) + " multicomponent " + std::to_string(choice));
        ++checked;
      }
    }
    summary << str(p) << ": " << checked << " multicomponents; ";
  }
  return t.finish(summary.str());
}

// Brute-force separability: chi(a, b) = g(a) + h(b) over GF(2) iff every row
// of the A-by-B table equals the first row or its complement.
class SeparabilityOracle {
 public:
  SeparabilityOracle(const DoobParams& p, const std::vector<int>& coords_a) {
    const SubProduct a(p, coords_a);
    const auto b = a.complement();
    for (VertexIndex x = 0; x < a.sub().vertex_count(); ++x) ea_.push_back(a.embed(x));
    for (VertexIndex y = 0; y < b.sub().vertex_count(); ++y) eb_.push_back(b.embed(y));
  }

  bool separable(const VertexSet& s) const {
    std::vector<bool> first(eb_.size());
    for (std::size_t y = 0; y < eb_.size(); ++y) first[y] = s.contains(eb_[y]);
    for (std::size_t x = 1; x < ea_.size(); ++x) {
      const bool flip = s.contains(ea_[x]) != first[0];
      for (std::size_t y = 1; y < eb_.size(); ++y) {
        if (s.contains(ea_[x] + eb_[y]) != (first[y] != flip)) return false;
      }
    }
    return true;
  }

 private:
  std::vector<VertexIndex> ea_;
  std::vector<VertexIndex> eb_;
};

Outcome decomposition_oracle(unsigned) {
  Tally t;
  std::ostringstream summary;
  for (const auto p : {DoobParams(1, 0), DoobParams(0, 1), DoobParams(0, 2), DoobParams(1, 1), DoobParams(2, 0)}) {
    const int k = p.coordinate_count();
    std::vector<SeparabilityOracle> oracles;
    for (unsigned mask = 1; mask + 1 < (1U << k); ++mask) {
      if ((mask & 1U) == 0) continue;  // each bipartition once, coordinate 0 on side A
      std::vector<int> a;
      for (int c = 0; c < k; ++c) {
        if ((mask >> c) & 1U) a.push_back(c);
      }
      oracles.emplace_back(p, a);
    }
    const bool full_path = p.vertex_count() <= 64;
    std::uint64_t total = 0;
    std::uint64_t separable = 0;
    enumerate_codes({p, Target::two_mds}, [&](const VertexSet& s) {
      ++total;
      const bool oracle = std::any_of(oracles.begin(), oracles.end(), [&](const auto& o) { return o.separable(s); });
      const bool by_graph = interaction_graph(s).components().size() > 1;
      separable += oracle ? 1 : 0;
      if (oracle != by_graph) t.fail(str(p) + " interaction graph disagrees with the oracle");
      if (full_path || oracle) {
        const auto d = canonical_decomposition(TwoMdsCode(s));
        if (d.decomposable() != oracle || !(d.reconstruct() == s)) t.fail(str(p) + " canonical decomposition");
      }
    });
    if (total != kTwoMdsTotals.at({p.m(), p.n()})) t.fail(str(p) + " total " + std::to_string(total));
    summary << str(p) << " " << separable << "/" << total << " separable; ";
  }
  return t.finish(summary.str());
}

std::vector<Criterion> build() {
  return {
      {1, "graph kernel", "Sh is (16,6,2,2) with 48 edges; every D(m,n) up to 4096 vertices is (6m+3n)-regular", 1.0,
       graph_kernel},
      {2, "spectrum", "D(m,n) has exactly the eigenvalues -(2m+n)+4i, checked by exact annihilation", 10.0, spectrum},
      {3, "maximum cut", "the largest edge boundary is (2m+n)4^(2m+n), attained exactly by 2xMDS codes", 30.0, max_cut},
      {4, "classes in Sh", "Sh has 2 MDS codes, 3 latin colourings and 3 2xMDS codes up to equivalence", 60.0,
       class_counts},
      {5, "linear code count", "D(m,n) has exactly 2*3^(m+n) linear 2xMDS codes", 60.0, linear_counts},
      {6, "linear code structure",
       "a linear 2xMDS code has 2^(2m+n-1) components and contains 2^(2^(2m+n-1)) MDS codes", 60.0, linear_components},
      {7, "decomposable iff disconnected",
       "a 2xMDS code outside D(1,0) is decomposable exactly when it is disconnected", 600.0, key_proposition},
      {8, "semilinear or reducible", "every MDS code of D(m,n) is semilinear or reducible", 1800.0, theorem},
      {9, "extremal quotient matrices", "in Sh, quotient [[0,6],[2,4]] characterises MDS and [[2,4],[4,2]] 2xMDS codes",
       60.0, quotient_scan},
      {10, "intermediate partition",
       "6-sets of Sh with quotient [[1,5],[3,3]] exist and sum-lift to [[n,5n],[3n,3n]] in D(n,0)", 60.0, intermediate},
      {11, "neighbourhood multicomponents",
       "the vertices at distance 1 from a multicomponent of M form a multicomponent of the complement", 120.0,
       neighbourhood_multicomponents},
      {12, "decomposition oracle",
       "interaction-graph decomposition agrees with brute-force separability on every 2xMDS code with m+n <= 2", 600.0,
       decomposition_oracle},
  };
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const auto list = build();
  return list;
}

Result run(const Criterion& c, unsigned threads) {
  Result r{c.id, c.name, c.claim, false, false, 0, c.limit_seconds, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto out = c.check(threads);
    r.passed = out.ok;
    r.detail = out.detail;
  } catch (const TheoremFalsification& e) {
    r.falsified = true;
    r.detail = std::string("theorem falsified: ") + e.what();
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.passed && r.seconds > r.limit_seconds) {
    r.passed = false;
    r.detail += " [over the time limit]";
  }
  return r;
}

std::vector<Result> run_all(const std::vector<int>& only, unsigned threads,
                            const std::function<void(const Result&)>& progress) {
  std::vector<Result> out;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    out.push_back(run(c, threads));
    if (progress) progress(out.back());
  }
  return out;
}

std::string format_line(const Result& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(30) << r.name
     << std::right << " (" << std::fixed << std::setprecision(2) << r.seconds << " s / " << std::setprecision(0)
     << r.limit_seconds << " s)  " << r.detail;
  return os.str();
}

}  // namespace doob::suite
