#include "nht/tournament.hpp"

#include <bit>
#include <string>

namespace nht {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::LoopArc: return "LoopArc";
    case ErrorCode::DuplicateOrConflictingArc: return "DuplicateOrConflictingArc";
    case ErrorCode::MissingPair: return "MissingPair";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::NotAlmostRegular: return "NotAlmostRegular";
    case ErrorCode::NotATournament: return "NotATournament";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenPrimeUnsupported: return "EvenPrimeUnsupported";
    case ErrorCode::UnsupportedResidue: return "UnsupportedResidue";
    case ErrorCode::NotSkewHadamard: return "NotSkewHadamard";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
  }
  return "Unknown";
}

char to_char(ArcClass c) { return static_cast<char>('A' + static_cast<int>(c)); }

namespace {

BitRow bit(Vertex v) { return BitRow{1} << v; }

BitRow low_mask(int n) { return n >= 64 ? ~BitRow{0} : (bit(n) - 1); }

std::string pair_name(Vertex u, Vertex v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

}  // namespace

void check_order(int n) {
  if (n <= 0) {
    throw Error(ErrorCode::InvalidOrder, "order must be positive, got " + std::to_string(n));
  }
  if (n > Tournament::kMaxOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(n) + " exceeds the bit-row bound " +
                    std::to_string(Tournament::kMaxOrder));
  }
}

void check_vertex(const Tournament& t, Vertex u) {
  if (u < 0 || u >= t.order()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(u) + " not in 0.." + std::to_string(t.order() - 1));
  }
}

Tournament Tournament::from_out_rows(int n, std::vector<BitRow> out_rows) {
  check_order(n);
  if (static_cast<int>(out_rows.size()) != n) {
    throw Error(ErrorCode::InvalidOrder, "expected " + std::to_string(n) + " rows");
  }
  const BitRow mask = low_mask(n);
  std::vector<BitRow> in_rows(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (out_rows[u] & ~mask) {
      throw Error(ErrorCode::VertexOutOfRange, "row " + std::to_string(u) + " has bits past n");
    }
    if (out_rows[u] & bit(u)) {
      throw Error(ErrorCode::LoopArc, pair_name(u, u));
    }
    for (BitRow rest = out_rows[u]; rest; rest &= rest - 1) {
      in_rows[std::countr_zero(rest)] |= bit(u);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool uv = (out_rows[u] >> v) & 1U;
      const bool vu = (out_rows[v] >> u) & 1U;
      if (uv && vu) throw Error(ErrorCode::DuplicateOrConflictingArc, pair_name(u, v) + " and " + pair_name(v, u));
      if (!uv && !vu) throw Error(ErrorCode::MissingPair, "no arc between " + std::to_string(u) + " and " + std::to_string(v));
    }
  }
  return Tournament(n, std::move(out_rows), std::move(in_rows));
}

BitRow Tournament::all_vertices() const noexcept { return low_mask(n_); }

int Tournament::out_degree(Vertex u) const noexcept { return std::popcount(out_[u]); }

int Tournament::in_degree(Vertex u) const noexcept { return std::popcount(in_[u]); }

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (BitRow rest = out_[u]; rest; rest &= rest - 1) {
      result.push_back({u, std::countr_zero(rest)});
    }
  }
  return result;
}

Tournament build(int n, std::span<const Arc> arcs) {
  check_order(n);
  std::vector<BitRow> rows(n, 0);
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw Error(ErrorCode::VertexOutOfRange, pair_name(a.tail, a.head));
    }
    if (a.tail == a.head) throw Error(ErrorCode::LoopArc, pair_name(a.tail, a.head));
    if ((rows[a.tail] & bit(a.head)) || (rows[a.head] & bit(a.tail))) {
      throw Error(ErrorCode::DuplicateOrConflictingArc, pair_name(a.tail, a.head));
    }
    rows[a.tail] |= bit(a.head);
  }
  return Tournament::from_out_rows(n, std::move(rows));
}

Tournament complement(const Tournament& t) {
  std::vector<BitRow> rows(t.order());
  for (Vertex u = 0; u < t.order(); ++u) rows[u] = t.in_row(u);
  return Tournament::from_out_rows(t.order(), std::move(rows));
}

std::vector<DegreePair> degrees(const Tournament& t) {
  std::vector<DegreePair> result(t.order());
  for (Vertex u = 0; u < t.order(); ++u) {
    result[u] = {t.out_degree(u), t.in_degree(u)};
  }
  return result;
}

Tournament relabel(const Tournament& t, std::span<const Vertex> perm) {
  const int n = t.order();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::OrderMismatch, "permutation length differs from order");
  }
  BitRow seen = 0;
  for (Vertex p : perm) {
    check_vertex(t, p);
    if (seen & bit(p)) throw Error(ErrorCode::VertexOutOfRange, "permutation repeats vertex " + std::to_string(p));
    seen |= bit(p);
  }
  std::vector<BitRow> rows(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (t.beats(perm[i], perm[j])) rows[i] |= bit(j);
    }
  }
  return Tournament::from_out_rows(n, std::move(rows));
}

Tournament remove_vertex(const Tournament& t, Vertex x) {
  check_vertex(t, x);
  if (t.order() == 1) throw Error(ErrorCode::InvalidOrder, "cannot remove the only vertex");
  std::vector<Vertex> keep;
  keep.reserve(t.order() - 1);
  for (Vertex u = 0; u < t.order(); ++u) {
    if (u != x) keep.push_back(u);
  }
  const int m = static_cast<int>(keep.size());
  std::vector<BitRow> rows(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (t.beats(keep[i], keep[j])) rows[i] |= bit(j);
    }
  }
  return Tournament::from_out_rows(m, std::move(rows));
}

bool almost_regular(const Tournament& t) {
  const int n = t.order();
  if (n % 2 != 0) return false;
  const int k = n / 2;
  for (Vertex u = 0; u < n; ++u) {
    const int d = t.out_degree(u);
    if (d != k && d != k - 1) return false;
  }
  return true;
}

ArcClass arc_class(const Tournament& t, Vertex u, Vertex v) {
  check_vertex(t, u);
  check_vertex(t, v);
  if (!almost_regular(t)) {
    throw Error(ErrorCode::NotAlmostRegular, "arc classes need an almost regular tournament of even order");
  }
  if (u == v || !t.beats(u, v)) throw Error(ErrorCode::NotAnArc, pair_name(u, v));
  const int k = t.order() / 2;
  const bool tail_high = t.out_degree(u) == k;
  const bool head_high = t.out_degree(v) == k;
  if (tail_high) return head_high ? ArcClass::A : ArcClass::C;
  return head_high ? ArcClass::D : ArcClass::B;
}

ClassCounts class_cardinalities(const Tournament& t) {
  ClassCounts result;
  for (const Arc& a : t.arcs()) {
    ++result.counts[static_cast<int>(arc_class(t, a.tail, a.head))];
  }
  return result;
}

}  // namespace nht
