#pragma once

#include <array>
#include <optional>
#include <string>

#include "nht/metrics.hpp"
#include "nht/tournament.hpp"

namespace nht {

// Why a verdict came out false. Arc and vertex witnesses are the first
// offender in lexicographic order.
struct Witness {
  enum class Kind { Residue, Vertex, Pair, Arc, Count };

  Kind kind = Kind::Residue;
  Vertex u = -1;
  Vertex v = -1;
  int measured = 0;
  std::string detail;
};

struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

// t = floor(n / 4); the parameter of every definition below.
inline int derived_t(int n) { return n / 4; }

Verdict is_regular(const Tournament& t);
Verdict is_almost_regular(const Tournament& t);

// n = 4t+3 and every arc lies in exactly t+1 3-cycles.
Verdict is_homogeneous(const Tournament& t);
// n = 4t+3, regular, and every vertex pair has exactly t common out-neighbours.
Verdict is_doubly_regular(const Tournament& t);

// n = 4t+1, t >= 1, every arc lies in t or t+1 3-cycles.
Verdict is_near_homogeneous_4t1(const Tournament& t);
// n = 4t+2, t >= 1, almost regular, Class C at t and every other arc at t+1.
Verdict is_near_homogeneous_4t2(const Tournament& t);
// n = 4t, t >= 1, almost regular, Class D at t+1, exactly one Class-C arc at 0
// and every other arc at t.
Verdict is_near_homogeneous_4t(const Tournament& t);

// Value shared by every arc in h, or nullopt when h is empty or mixed.
std::optional<int> constant_lambda(const LambdaHistogram& h);

// (lambda_A, lambda_B, lambda_C, lambda_D) when all four classes are
// non-empty and each is constant.
std::optional<std::array<int, 4>> constant_class_lambdas(const ClassHistograms& h);

// Four constant classes are only possible at n = 4t+2 with
// (t+1, t+1, t, t+1).
bool constant_class_pattern_holds(int n, const std::array<int, 4>& lambdas);

struct ClassificationReport {
  int order = 0;
  int t = 0;
  Verdict regular;
  Verdict almost_regular;
  Verdict homogeneous;
  Verdict doubly_regular;
  Verdict nh_4t1;
  Verdict nh_4t2;
  Verdict nh_4t;
  LambdaHistogram lambdas;
  std::optional<ClassHistograms> class_lambdas;
  std::optional<std::array<int, 4>> constant_classes;
  TwoPathCensus two_paths;
  std::optional<CycleBalance> cd_balance;
};

ClassificationReport classify(const Tournament& t);

std::string describe(const Witness& w);

}  // namespace nht
