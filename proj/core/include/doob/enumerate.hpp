#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "doob/automorphism.hpp"
#include "doob/codes.hpp"
#include "doob/params.hpp"
#include "doob/vertex_set.hpp"

namespace doob {

enum class Target { mds, two_mds, latin_coloring };
enum class SearchMode { all, up_to_equivalence, count_only };

const char* to_string(Target target);

struct SearchSpec {
  DoobParams params;
  Target target = Target::mds;
  SearchMode mode = SearchMode::all;
  /// Worker count for the first-level fan-out; output does not depend on it.
  unsigned threads = 1;
};

/// Default vertex cap of the backtracking search (see vertex_cap()).
inline constexpr std::uint64_t kSearchCap = 256;

/// The graph actually searched: D(m,n) for codes, D(m,n+1) for latin
/// colourings of D(m,n), which are enumerated through their graphs.
DoobParams search_params(const SearchSpec& spec);

/// Streams every code of the target kind exactly once, ascending in
/// VertexSet order. Latin colourings are emitted as their graphs in
/// D(m,n+1). Throws CapExceeded beyond vertex_cap(kSearchCap).
void enumerate_codes(const SearchSpec& spec, const std::function<void(const VertexSet&)>& sink);
std::vector<VertexSet> collect_codes(const SearchSpec& spec);
std::uint64_t count_codes(const SearchSpec& spec);

std::vector<LatinColoring> enumerate_latin_colorings(const DoobParams& params, unsigned threads = 1);

/// Orbits of a family of sets under a generated group.
struct EquivalenceClasses {
  /// Least set of every orbit, ascending.
  std::vector<VertexSet> representatives;
  /// Number of input sets in each orbit.
  std::vector<std::uint64_t> class_sizes;
  /// Full orbit sizes under the group.
  std::vector<std::uint64_t> orbit_sizes;

  std::size_t class_count() const { return representatives.size(); }
};

EquivalenceClasses reduce_to_classes(const std::vector<VertexSet>& sets, const AutGenerators& generators);

struct EnumerationResult {
  SearchSpec spec;
  std::uint64_t total = 0;
  std::vector<VertexSet> sets;                // empty in count_only mode
  std::optional<EquivalenceClasses> classes;  // up_to_equivalence only
};

/// Dispatches on spec.mode. For latin colourings, classes are taken under
/// automorphisms of D(m,n) combined with colour permutations.
EnumerationResult run_search(const SearchSpec& spec);

struct TheoremReport {
  DoobParams params;
  std::uint64_t total = 0;
  std::uint64_t semilinear_only = 0;
  std::uint64_t reducible_only = 0;
  std::uint64_t both = 0;
};

/// Classifies every MDS code of D(m,n); propagates TheoremFalsification.
TheoremReport verify_theorem_on(const DoobParams& params, unsigned threads = 1);

struct KeyPropositionReport {
  DoobParams params;
  std::uint64_t total = 0;
  std::uint64_t decomposable = 0;
  std::uint64_t connected = 0;
  /// Codes where decomposability and disconnectedness disagree. Expected
  /// nonempty only for D(1,0), which the statement excludes.
  std::vector<VertexSet> violations;
  bool excluded_case = false;
};

KeyPropositionReport verify_key_proposition_on(const DoobParams& params, unsigned threads = 1);

}  // namespace doob
