#include "nht/construct.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "nht/classify.hpp"

namespace nht {

namespace {

BitRow bit(int v) { return BitRow{1} << v; }

void require_homogeneous(const Tournament& t) {
  if (Verdict v = is_homogeneous(t); !v) {
    throw Error(ErrorCode::NotHomogeneous, describe(*v.witness));
  }
}

int least_primitive_root(int p) {
  std::vector<int> factors;
  int m = p - 1;
  for (int q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  auto power = [p](long long base, int e) {
    long long r = 1;
    for (base %= p; e > 0; e >>= 1, base = base * base % p) {
      if (e & 1) r = r * base % p;
    }
    return r;
  };
  for (int g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(),
                    [&](int q) { return power(g, (p - 1) / q) != 1; })) {
      return g;
    }
  }
  return 1;
}

// Residues d in 1..p-1 such that 0 -> d.
std::vector<bool> connection_set(int p) {
  std::vector<bool> in_set(p, false);
  if (p % 4 == 3) {
    for (long long a = 1; a < p; ++a) in_set[a * a % p] = true;
    return in_set;
  }
  const int g = least_primitive_root(p);
  long long value = 1;
  for (int e = 0; e < p - 1; ++e) {
    if (e % 4 == 0 || e % 4 == 1) in_set[value] = true;
    value = value * g % p;
  }
  return in_set;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Tournament transitive_tournament(int n) {
  check_order(n);
  std::vector<BitRow> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) rows[i] |= bit(j);
  }
  return Tournament::from_out_rows(n, std::move(rows));
}

Tournament rotational_tournament(int n) {
  check_order(n);
  if (n % 2 == 0) throw Error(ErrorCode::InvalidOrder, "rotational tournaments need odd order");
  std::vector<BitRow> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int d = 1; d <= (n - 1) / 2; ++d) rows[i] |= bit((i + d) % n);
  }
  return Tournament::from_out_rows(n, std::move(rows));
}

Tournament random_tournament(int n, std::mt19937_64& rng) {
  check_order(n);
  std::bernoulli_distribution coin(0.5);
  std::vector<BitRow> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        rows[i] |= bit(j);
      } else {
        rows[j] |= bit(i);
      }
    }
  }
  return Tournament::from_out_rows(n, std::move(rows));
}

Tournament random_almost_regular(int n, std::mt19937_64& rng) {
  check_order(n);
  if (n % 2 != 0) throw Error(ErrorCode::InvalidOrder, "almost regular tournaments need even order");
  if (n + 1 > Tournament::kMaxOrder) throw Error(ErrorCode::OrderTooLarge, std::to_string(n));
  const Tournament base = remove_vertex(rotational_tournament(n + 1), n);
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  const Tournament shuffled = relabel(base, perm);

  std::vector<BitRow> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = shuffled.out_row(i);
  if (n >= 3) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int step = 0; step < 20 * n * n; ++step) {
      const int a = pick(rng);
      const int b = pick(rng);
      const int c = pick(rng);
      if (a == b || b == c || a == c) continue;
      const bool cycle = (rows[a] & bit(b)) && (rows[b] & bit(c)) && (rows[c] & bit(a));
      if (!cycle) continue;
      rows[a] ^= bit(b) | bit(c);
      rows[b] ^= bit(c) | bit(a);
      rows[c] ^= bit(a) | bit(b);
    }
  }
  return Tournament::from_out_rows(n, std::move(rows));
}

Tournament paley_tournament(int p) {
  if (p == 2) throw Error(ErrorCode::EvenPrimeUnsupported, "p = 2");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (p % 8 == 1) {
    throw Error(ErrorCode::UnsupportedResidue,
                std::to_string(p) + " = 1 (mod 8) has no residue-class tournament");
  }
  check_order(p);
  const std::vector<bool> in_set = connection_set(p);
  std::vector<BitRow> rows(p, 0);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (i != j && in_set[((j - i) % p + p) % p]) rows[i] |= bit(j);
    }
  }
  return Tournament::from_out_rows(p, std::move(rows));
}

HConstruction h_construction(const Tournament& t, Vertex x) {
  check_vertex(t, x);
  require_homogeneous(t);
  const int n = t.order();
  if (2 * n - 1 > Tournament::kMaxOrder) {
    throw Error(ErrorCode::OrderTooLarge, "output order " + std::to_string(2 * n - 1));
  }
  const Tournament star = complement(t);

  // Out-neighbourhoods in H, split into the T part (labels u), the T* part
  // (labels u for u*) and the z flag.
  struct Out {
    BitRow plain = 0;
    BitRow starred = 0;
    bool z = false;
  };
  const BitRow x_bit = bit(x);
  std::vector<Out> plain_out(n), starred_out(n);
  Out z_out;

  for (Vertex u = 0; u < n; ++u) {
    if (u == x) continue;
    if (t.beats(x, u)) {
      // a. u in O(x): O(u) + (O(u*) - x*) + z
      plain_out[u] = {t.out_row(u), star.out_row(u) & ~x_bit, true};
      // d. u* in I(x*): (O(u*) - x*) + (I(u) - x) + z + u
      starred_out[u] = {(t.in_row(u) & ~x_bit) | bit(u), star.out_row(u) & ~x_bit, true};
    } else {
      // b. u in I(x): (O(u) - x) + O(u*) + u*
      plain_out[u] = {t.out_row(u) & ~x_bit, star.out_row(u) | bit(u), false};
      // c. u* in O(x*): I(u) + O(u*)
      starred_out[u] = {t.in_row(u), star.out_row(u), false};
    }
  }
  // e. z: I(x) + O(x*)
  z_out = {t.in_row(x), star.out_row(x), false};

  HConstructionLabeling labeling;
  labeling.x = x;
  std::vector<int> plain_index(n, -1), starred_index(n, -1);
  auto add_block = [&](HBlock block, BitRow members, std::vector<int>& index) {
    labeling.block_start[static_cast<int>(block)] = static_cast<int>(labeling.origin.size());
    for (BitRow rest = members; rest; rest &= rest - 1) {
      const Vertex u = std::countr_zero(rest);
      index[u] = static_cast<int>(labeling.origin.size());
      labeling.origin.push_back({block, u});
    }
  };
  add_block(HBlock::OutX, t.out_row(x), plain_index);
  add_block(HBlock::InX, t.in_row(x), plain_index);
  add_block(HBlock::OutXStar, star.out_row(x), starred_index);
  add_block(HBlock::InXStar, star.in_row(x), starred_index);
  labeling.block_start[static_cast<int>(HBlock::Z)] = static_cast<int>(labeling.origin.size());
  const int z_index = static_cast<int>(labeling.origin.size());
  labeling.origin.push_back({HBlock::Z, -1});
  labeling.block_start[5] = static_cast<int>(labeling.origin.size());

  const int order = static_cast<int>(labeling.origin.size());
  auto to_row = [&](const Out& out) {
    BitRow row = 0;
    for (BitRow rest = out.plain; rest; rest &= rest - 1) row |= bit(plain_index[std::countr_zero(rest)]);
    for (BitRow rest = out.starred; rest; rest &= rest - 1) row |= bit(starred_index[std::countr_zero(rest)]);
    if (out.z) row |= bit(z_index);
    return row;
  };
  std::vector<BitRow> rows(order, 0);
  for (int i = 0; i < order; ++i) {
    const auto& o = labeling.origin[i];
    switch (o.block) {
      case HBlock::OutX:
      case HBlock::InX: rows[i] = to_row(plain_out[o.source]); break;
      case HBlock::OutXStar:
      case HBlock::InXStar: rows[i] = to_row(starred_out[o.source]); break;
      case HBlock::Z: rows[i] = to_row(z_out); break;
    }
  }
  Tournament h = Tournament::from_out_rows(order, std::move(rows));

  // Regular of degree 4t+2 with 2t or 2t+1 common out-neighbours per pair.
  const int tp = derived_t(n);
  for (Vertex u = 0; u < order; ++u) {
    if (h.out_degree(u) != 4 * tp + 2) {
      throw std::logic_error("h_construction: vertex " + std::to_string(u) + " not of degree 4t+2");
    }
    for (Vertex v = u + 1; v < order; ++v) {
      const int common = std::popcount(h.out_row(u) & h.out_row(v));
      if (common != 2 * tp && common != 2 * tp + 1) {
        throw std::logic_error("h_construction: pair common out-neighbour count out of range");
      }
    }
  }
  return {std::move(h), std::move(labeling)};
}

Tournament delete_vertex_construction(const Tournament& t, Vertex x) {
  check_vertex(t, x);
  require_homogeneous(t);
  return remove_vertex(t, x);
}

Tournament augment_vertex_construction(const Tournament& t, Vertex x) {
  check_vertex(t, x);
  require_homogeneous(t);
  const int n = t.order();
  check_order(n + 1);
  std::vector<BitRow> rows(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    rows[u] = t.out_row(u);
    if (t.beats(u, x)) rows[u] |= bit(n);
  }
  rows[n] = t.out_row(x) | bit(x);
  return Tournament::from_out_rows(n + 1, std::move(rows));
}

bool is_hadamard(int m, std::span<const std::int8_t> e) {
  if (m <= 0 || e.size() != static_cast<std::size_t>(m) * m) return false;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      long dot = 0;
      for (int c = 0; c < m; ++c) dot += e[i * m + c] * e[j * m + c];
      if (dot != (i == j ? m : 0)) return false;
    }
  }
  return true;
}

bool is_skew(int m, std::span<const std::int8_t> e) {
  if (m <= 0 || e.size() != static_cast<std::size_t>(m) * m) return false;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (e[i * m + j] + e[j * m + i] != (i == j ? 2 : 0)) return false;
    }
  }
  return true;
}

SkewHadamard SkewHadamard::from_entries(int m, std::vector<std::int8_t> entries) {
  if (m <= 0 || entries.size() != static_cast<std::size_t>(m) * m) {
    throw Error(ErrorCode::NotSkewHadamard, "expected a square matrix of order " + std::to_string(m));
  }
  if (std::any_of(entries.begin(), entries.end(), [](std::int8_t v) { return v != 1 && v != -1; })) {
    throw Error(ErrorCode::NotSkewHadamard, "entries must be +1 or -1");
  }
  if (!is_skew(m, entries)) throw Error(ErrorCode::NotSkewHadamard, "H + H^T != 2I");
  if (!is_hadamard(m, entries)) throw Error(ErrorCode::NotSkewHadamard, "H H^T != mI");
  return SkewHadamard(m, std::move(entries));
}

SkewHadamard tournament_to_skew_hadamard(const Tournament& t) {
  require_homogeneous(t);
  const int m = t.order() + 1;
  std::vector<std::int8_t> e(static_cast<std::size_t>(m) * m, 0);
  auto at = [&](int i, int j) -> std::int8_t& { return e[static_cast<std::size_t>(i) * m + j]; };
  at(0, 0) = 1;
  for (int j = 1; j < m; ++j) {
    at(0, j) = 1;
    at(j, 0) = -1;
  }
  for (int i = 1; i < m; ++i) {
    for (int j = 1; j < m; ++j) {
      at(i, j) = i == j ? 1 : (t.beats(i - 1, j - 1) ? 1 : -1);
    }
  }
  return SkewHadamard::from_entries(m, std::move(e));
}

Tournament skew_hadamard_to_tournament(const SkewHadamard& h) {
  const int m = h.order();
  if (m < 4) throw Error(ErrorCode::NotNormalizable, "order " + std::to_string(m) + " is below 4");
  if (m - 1 > Tournament::kMaxOrder) throw Error(ErrorCode::OrderTooLarge, std::to_string(m - 1));
  std::vector<int> sign(m, 1);
  for (int j = 1; j < m; ++j) sign[j] = h.at(0, j);
  // Negating row j together with column j keeps H skew; afterwards row 0 is
  // +1 off the diagonal.
  std::vector<BitRow> rows(m - 1, 0);
  for (int i = 1; i < m; ++i) {
    for (int j = 1; j < m; ++j) {
      if (i != j && sign[i] * sign[j] * h.at(i, j) == 1) rows[i - 1] |= bit(j - 1);
    }
  }
  return Tournament::from_out_rows(m - 1, std::move(rows));
}

}  // namespace nht
