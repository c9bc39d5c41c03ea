#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "nht/error.hpp"

namespace nht {

using Vertex = int;
using BitRow = std::uint64_t;

struct Arc {
  Vertex tail;
  Vertex head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct DegreePair {
  int out_degree = 0;
  int in_degree = 0;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

// Endvertex-degree classes of an almost regular tournament of order 2k.
//   A: (k,k-1) -> (k,k-1)    B: (k-1,k) -> (k-1,k)
//   C: (k,k-1) -> (k-1,k)    D: (k-1,k) -> (k,k-1)
enum class ArcClass { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::array<ArcClass, 4> kArcClasses = {
    ArcClass::A, ArcClass::B, ArcClass::C, ArcClass::D};

char to_char(ArcClass c);

// A complete orientation on vertices 0..n-1, stored as out-neighbour bit rows
// with a transposed in-neighbour view. Immutable once constructed; every
// factory validates antisymmetry, completeness and the absence of loops.
class Tournament {
 public:
  static constexpr int kMaxOrder = 64;

  // Validates the rows; throws Error on any violation of the invariants.
  static Tournament from_out_rows(int n, std::vector<BitRow> out_rows);

  int order() const noexcept { return n_; }
  int arc_count() const noexcept { return n_ * (n_ - 1) / 2; }

  bool beats(Vertex u, Vertex v) const noexcept { return (out_[u] >> v) & 1U; }

  BitRow out_row(Vertex u) const noexcept { return out_[u]; }
  BitRow in_row(Vertex u) const noexcept { return in_[u]; }
  BitRow all_vertices() const noexcept;

  int out_degree(Vertex u) const noexcept;
  int in_degree(Vertex u) const noexcept;

  // Arcs in lexicographic (tail, head) order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  Tournament(int n, std::vector<BitRow> out, std::vector<BitRow> in)
      : n_(n), out_(std::move(out)), in_(std::move(in)) {}

  int n_ = 0;
  std::vector<BitRow> out_;
  std::vector<BitRow> in_;
};

void check_order(int n);
void check_vertex(const Tournament& t, Vertex u);

Tournament build(int n, std::span<const Arc> arcs);

// u->v in the result iff v->u in t.
Tournament complement(const Tournament& t);

std::vector<DegreePair> degrees(const Tournament& t);

// Vertex perm[i] of t becomes vertex i of the result.
Tournament relabel(const Tournament& t, std::span<const Vertex> perm);

// Drops vertex x; the remaining labels keep their relative order.
Tournament remove_vertex(const Tournament& t, Vertex x);

// True iff n = 2k and every vertex is a (k,k-1)- or (k-1,k)-vertex.
bool almost_regular(const Tournament& t);

// Requires an almost regular tournament of even order and an arc u->v.
ArcClass arc_class(const Tournament& t, Vertex u, Vertex v);

struct ClassCounts {
  std::array<std::int64_t, 4> counts{};
  std::int64_t operator[](ArcClass c) const {
    return counts[static_cast<int>(c)];
  }
};

ClassCounts class_cardinalities(const Tournament& t);

}  // namespace nht
