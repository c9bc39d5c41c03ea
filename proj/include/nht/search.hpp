#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nht/tournament.hpp"

namespace nht {

inline constexpr int kCanonicalBound = 12;
inline constexpr int kFilteredSearchBound = 10;
inline constexpr int kUnfilteredSearchBound = 8;

// Label-invariant fingerprint: the order byte followed by the lexicographically
// least upper-triangle code over all relabelings that list vertices by
// non-decreasing out-degree. The code is read column by column:
// (0,1), (0,2), (1,2), (0,3), ... with bit (i,j) set iff i->j.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical(const Tournament& t);

struct Canonicalized {
  CanonicalForm form;
  Tournament representative;
};

Canonicalized canonicalize(const Tournament& t);

// perm with relabel(t, perm) equal to the representative whose code is the
// canonical one.
std::vector<Vertex> canonical_labeling(const Tournament& t);
Tournament canonical_representative(const Tournament& t);

bool are_isomorphic(const Tournament& a, const Tournament& b);

std::string to_hex(const CanonicalForm& form);

enum class Filter {
  None,
  AlmostRegular,
  NearHomogeneous4t1,
  NearHomogeneous4t2,
  NearHomogeneous4t,
  Homogeneous,
};

std::string_view to_string(Filter f);
std::optional<Filter> parse_filter(std::string_view name);

// The classifier verdict a filter stands for.
bool passes(const Tournament& t, Filter f);

struct SearchSpec {
  int order = 0;
  Filter filter = Filter::None;
  bool dedup = false;
  std::optional<std::size_t> limit;
};

struct SearchOptions {
  int jobs = 1;
  // Degree caps, residual-degree feasibility and early cyclic-index checks.
  // Off means plain backtracking over every orientation.
  bool prune = true;
  // Overrides the default exhaustive bound (10 filtered, 8 unfiltered).
  std::optional<int> max_order;
  // Completed shards are appended here and skipped when the file is reread.
  std::string checkpoint_path;
};

struct SearchStats {
  std::uint64_t nodes = 0;    // orientation decisions made
  std::uint64_t visited = 0;  // complete tournaments reached
  std::uint64_t passing = 0;  // of those, passing the filter
  std::uint64_t classes = 0;  // isomorphism classes among the passing ones (dedup only)

  SearchStats& operator+=(const SearchStats& o);
};

struct SearchResult {
  std::vector<Tournament> tournaments;
  SearchStats stats;
};

// Backtracks over the upper-triangular orientation choices in row-major order,
// "j beats i" before "i beats j", so tournaments come out in increasing
// row-major adjacency order. With dedup the result holds one canonical
// representative per class, sorted the same way.
SearchResult enumerate(const SearchSpec& spec, const SearchOptions& options = {});

// Streams filter-passing tournaments (no dedup) to the visitor in adjacency
// order on the calling thread; the visitor returns false to stop.
SearchStats for_each_tournament(const SearchSpec& spec,
                                const std::function<bool(const Tournament&)>& visitor,
                                const SearchOptions& options = {});

std::string summary_line(const SearchSpec& spec, const SearchStats& stats);

// Row-major adjacency bits as '0'/'1'; the order results are sorted by.
std::string adjacency_key(const Tournament& t);

}  // namespace nht
