#include "nht/metrics.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace nht {

namespace {

BitRow others(const Tournament& t, Vertex u, Vertex v) {
  return t.all_vertices() & ~(BitRow{1} << u) & ~(BitRow{1} << v);
}

void require_arc(const Tournament& t, Vertex u, Vertex v) {
  check_vertex(t, u);
  check_vertex(t, v);
  if (u == v || !t.beats(u, v)) {
    throw Error(ErrorCode::NotAnArc, std::to_string(u) + "->" + std::to_string(v));
  }
}

void require_almost_regular(const Tournament& t) {
  if (!almost_regular(t)) {
    throw Error(ErrorCode::NotAlmostRegular,
                "order " + std::to_string(t.order()) + " tournament is not almost regular");
  }
}

}  // namespace

int common_out_neighbors(const Tournament& t, Vertex u, Vertex v) {
  check_vertex(t, u);
  check_vertex(t, v);
  return std::popcount(t.out_row(u) & t.out_row(v));
}

ArcProfile arc_profile(const Tournament& t, Vertex u, Vertex v) {
  require_arc(t, u, v);
  const BitRow rest = others(t, u, v);
  ArcProfile p;
  p.common_out = std::popcount(t.out_row(u) & t.out_row(v) & rest);
  p.common_in = std::popcount(t.in_row(u) & t.in_row(v) & rest);
  p.fwd_two_paths = std::popcount(t.out_row(u) & t.in_row(v) & rest);
  p.cyclic_index = std::popcount(t.out_row(v) & t.in_row(u) & rest);
  return p;
}

LambdaHistogram cyclic_index_histogram(const Tournament& t) {
  LambdaHistogram h;
  for (const Arc& a : t.arcs()) ++h[cyclic_index(t, a.tail, a.head)];
  return h;
}

ClassHistograms cyclic_index_histogram_by_class(const Tournament& t) {
  require_almost_regular(t);
  ClassHistograms h;
  for (const Arc& a : t.arcs()) {
    ++h[arc_class(t, a.tail, a.head)][cyclic_index(t, a.tail, a.head)];
  }
  return h;
}

std::int64_t TwoPathCensus::class_sum() const {
  if (!per_class_sums) return 0;
  return std::accumulate(per_class_sums->begin(), per_class_sums->end(), std::int64_t{0});
}

TwoPathCensus two_path_census(const Tournament& t) {
  TwoPathCensus census;
  for (Vertex u = 0; u < t.order(); ++u) {
    census.total += static_cast<std::int64_t>(t.out_degree(u)) * t.in_degree(u);
  }
  if (!almost_regular(t)) return census;
  std::array<std::int64_t, 4> sums{};
  for (const Arc& a : t.arcs()) {
    const int lambda = cyclic_index(t, a.tail, a.head);
    const ArcClass c = arc_class(t, a.tail, a.head);
    int contribution = 2 * lambda;
    if (c == ArcClass::A || c == ArcClass::B) contribution -= 1;
    if (c == ArcClass::D) contribution -= 2;
    sums[static_cast<int>(c)] += contribution;
  }
  census.per_class_sums = sums;
  return census;
}

CycleBalance class_cd_cycle_balance(const Tournament& t) {
  require_almost_regular(t);
  CycleBalance b;
  for (const Arc& a : t.arcs()) {
    const ArcClass c = arc_class(t, a.tail, a.head);
    if (c == ArcClass::C) b.sum_c += cyclic_index(t, a.tail, a.head);
    if (c == ArcClass::D) b.sum_d += cyclic_index(t, a.tail, a.head);
  }
  return b;
}

ArcProfile expected_profile(ArcClass c, int k, int lambda) {
  switch (c) {
    case ArcClass::A: return {k - lambda, k - lambda - 1, lambda - 1, lambda};
    case ArcClass::B: return {k - lambda - 1, k - lambda, lambda - 1, lambda};
    case ArcClass::C: return {k - lambda - 1, k - lambda - 1, lambda, lambda};
    case ArcClass::D: return {k - lambda, k - lambda, lambda - 2, lambda};
  }
  return {};
}

}  // namespace nht
