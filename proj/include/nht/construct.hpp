#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "nht/tournament.hpp"

namespace nht {

// Quadratic-residue tournament on Z_p.
//   p = 3 (mod 4): i->j iff j-i is a non-zero square (homogeneous).
//   p = 5 (mod 8): i->j iff j-i lies in the union of the first two cyclotomic
//   classes of order 4, i.e. g^e with e = 0 or 1 (mod 4) for the least
//   primitive root g. -1 = g^((p-1)/2) falls in class 2, so this is a
//   tournament; p = 5 gives the regular tournament on Z_5 with {1, 2}.
// p = 1 (mod 8) admits no such orientation and is rejected.
Tournament paley_tournament(int p);

bool is_prime(int p);

// i->j iff i < j.
Tournament transitive_tournament(int n);

// Odd n: i->i+1, ..., i+(n-1)/2 (mod n).
Tournament rotational_tournament(int n);

// Every arc oriented by a fair coin.
Tournament random_tournament(int n, std::mt19937_64& rng);

// Even n: a rotational tournament on n+1 vertices minus one vertex, randomly
// relabelled and then scrambled by reversing randomly chosen 3-cycles, which
// keeps every semi-degree fixed.
Tournament random_almost_regular(int n, std::mt19937_64& rng);

enum class HBlock { OutX, InX, OutXStar, InXStar, Z };

struct HConstructionLabeling {
  Vertex x = 0;
  // origin[i] is the block of output vertex i and the label of the input
  // vertex it was copied from (u for u and for u*; -1 for z).
  struct Origin {
    HBlock block;
    Vertex source;
  };
  std::vector<Origin> origin;
  // First output index of each block, plus the order at the end.
  std::array<int, 6> block_start{};

  int block_size(HBlock b) const {
    const int i = static_cast<int>(b);
    return block_start[i + 1] - block_start[i];
  }
};

struct HConstruction {
  Tournament tournament;
  HConstructionLabeling labeling;
};

// Order-(8t+5) near-homogeneous tournament from a homogeneous tournament of
// order 4t+3, built from T and its converse T* with x and x* removed and a
// new vertex z. Output vertices are listed block by block in the order
// O(x), I(x), O(x*), I(x*), z, each block sorted by source label.
HConstruction h_construction(const Tournament& t, Vertex x);

// Removes x from a homogeneous tournament of order 4t+3; the result is
// near-homogeneous of order 4t+2.
Tournament delete_vertex_construction(const Tournament& t, Vertex x);

// Adds y (label n) beating {x} and O(x) and beaten by I(x); the result is
// near-homogeneous of order 4t+4 with y->x the unique arc in no 3-cycle.
Tournament augment_vertex_construction(const Tournament& t, Vertex x);

// A +-1 matrix with H H^T = m I and H + H^T = 2 I, validated on construction.
class SkewHadamard {
 public:
  static SkewHadamard from_entries(int m, std::vector<std::int8_t> entries);

  int order() const noexcept { return m_; }
  int at(int i, int j) const noexcept { return entries_[static_cast<std::size_t>(i) * m_ + j]; }
  std::span<const std::int8_t> entries() const noexcept { return entries_; }

  friend bool operator==(const SkewHadamard&, const SkewHadamard&) = default;

 private:
  SkewHadamard(int m, std::vector<std::int8_t> entries) : m_(m), entries_(std::move(entries)) {}

  int m_ = 0;
  std::vector<std::int8_t> entries_;
};

// Checks for the two defining identities on a raw row-major matrix.
bool is_hadamard(int m, std::span<const std::int8_t> entries);
bool is_skew(int m, std::span<const std::int8_t> entries);

SkewHadamard tournament_to_skew_hadamard(const Tournament& t);
Tournament skew_hadamard_to_tournament(const SkewHadamard& h);

}  // namespace nht
