#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>

#include "nht/tournament.hpp"

namespace nht {

// Census of the other n-2 vertices w relative to an arc u->v.
struct ArcProfile {
  int common_out = 0;     // u->w and v->w
  int common_in = 0;      // w->u and w->v
  int fwd_two_paths = 0;  // u->w->v
  int cyclic_index = 0;   // v->w->u, i.e. 3-cycles through u->v

  friend bool operator==(const ArcProfile&, const ArcProfile&) = default;
};

// Lambda value -> number of arcs with that 3-cyclic-index.
using LambdaHistogram = std::map<int, std::int64_t>;

struct ClassHistograms {
  std::array<LambdaHistogram, 4> by_class;

  const LambdaHistogram& operator[](ArcClass c) const {
    return by_class[static_cast<int>(c)];
  }
  LambdaHistogram& operator[](ArcClass c) { return by_class[static_cast<int>(c)]; }
};

// Number of 3-cycles through u->v. No arc check; the hot path of every census.
inline int cyclic_index(const Tournament& t, Vertex u, Vertex v) noexcept {
  return std::popcount(t.out_row(v) & t.in_row(u));
}

int common_out_neighbors(const Tournament& t, Vertex u, Vertex v);

ArcProfile arc_profile(const Tournament& t, Vertex u, Vertex v);

LambdaHistogram cyclic_index_histogram(const Tournament& t);

// Throws NotAlmostRegular unless t is almost regular of even order.
ClassHistograms cyclic_index_histogram_by_class(const Tournament& t);

// Two-path census. `total` counts every directed 2-path a->w->c by its middle
// vertex. For almost regular even orders the per-class contributions
//   A, B: 2*lambda - 1   C: 2*lambda   D: 2*lambda - 2
// are summed over the arcs of each class; their sum must equal `total`.
// Uniform class weights give C(k,2) arcs to A, B and D and C(k+1,2) to C.
struct TwoPathCensus {
  std::int64_t total = 0;
  std::optional<std::array<std::int64_t, 4>> per_class_sums;

  std::int64_t class_sum() const;
  bool consistent() const { return !per_class_sums || class_sum() == total; }
};

TwoPathCensus two_path_census(const Tournament& t);

struct CycleBalance {
  std::int64_t sum_c = 0;
  std::int64_t sum_d = 0;

  friend bool operator==(const CycleBalance&, const CycleBalance&) = default;
};

// Sums of lambda over Class-C arcs and over Class-D arcs. Every 3-cycle that
// touches one class touches the other exactly once, so the sums agree.
CycleBalance class_cd_cycle_balance(const Tournament& t);

// The per-arc identities of the census table for an arc of class c with the
// given lambda, for order 2k.
ArcProfile expected_profile(ArcClass c, int k, int lambda);

}  // namespace nht
