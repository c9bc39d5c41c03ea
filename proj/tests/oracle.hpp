#pragma once

// Brute-force reference implementations over a plain boolean matrix. Nothing
// here touches the bit rows of nht::Tournament beyond reading beats().

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "nht/tournament.hpp"

namespace oracle {

struct Matrix {
  int n = 0;
  std::vector<std::vector<bool>> a;

  bool operator()(int u, int v) const { return a[u][v]; }
};

inline Matrix from(const nht::Tournament& t) {
  Matrix m{t.order(), std::vector<std::vector<bool>>(t.order(), std::vector<bool>(t.order(), false))};
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v) m.a[u][v] = t.beats(u, v);
  return m;
}

inline nht::Tournament to_tournament(const Matrix& m) {
  std::vector<nht::Arc> arcs;
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      if (m(u, v)) arcs.push_back({u, v});
  return nht::build(m.n, arcs);
}

inline bool is_tournament(const Matrix& m) {
  for (int u = 0; u < m.n; ++u) {
    if (m(u, u)) return false;
    for (int v = u + 1; v < m.n; ++v)
      if (m(u, v) == m(v, u)) return false;
  }
  return true;
}

inline int out_degree(const Matrix& m, int u) {
  int d = 0;
  for (int v = 0; v < m.n; ++v) d += m(u, v);
  return d;
}

inline int in_degree(const Matrix& m, int u) {
  int d = 0;
  for (int v = 0; v < m.n; ++v) d += m(v, u);
  return d;
}

// Number of w with v->w->u.
inline int lambda(const Matrix& m, int u, int v) {
  int c = 0;
  for (int w = 0; w < m.n; ++w)
    if (w != u && w != v && m(v, w) && m(w, u)) ++c;
  return c;
}

struct Profile {
  int common_out = 0, common_in = 0, fwd = 0, lambda = 0;
};

inline Profile profile(const Matrix& m, int u, int v) {
  Profile p;
  for (int w = 0; w < m.n; ++w) {
    if (w == u || w == v) continue;
    if (m(u, w) && m(v, w)) ++p.common_out;
    if (m(w, u) && m(w, v)) ++p.common_in;
    if (m(u, w) && m(w, v)) ++p.fwd;
    if (m(v, w) && m(w, u)) ++p.lambda;
  }
  return p;
}

inline int common_out(const Matrix& m, int u, int v) {
  int c = 0;
  for (int w = 0; w < m.n; ++w)
    if (m(u, w) && m(v, w)) ++c;
  return c;
}

// Counts triples (a, w, c) of distinct vertices with a->w->c.
inline std::int64_t two_paths(const Matrix& m) {
  std::int64_t c = 0;
  for (int a = 0; a < m.n; ++a)
    for (int w = 0; w < m.n; ++w)
      for (int b = 0; b < m.n; ++b)
        if (a != b && m(a, w) && m(w, b)) ++c;
  return c;
}

inline bool almost_regular(const Matrix& m) {
  if (m.n % 2 != 0 || m.n == 0) return false;
  const int k = m.n / 2;
  for (int u = 0; u < m.n; ++u) {
    const int d = out_degree(m, u);
    if (d != k && d != k - 1) return false;
  }
  return true;
}

// 'A'..'D' from the semi-degrees of tail and head; requires almost regular.
inline char arc_class(const Matrix& m, int u, int v) {
  const int k = m.n / 2;
  const bool tail_high = out_degree(m, u) == k;
  const bool head_high = out_degree(m, v) == k;
  if (tail_high && head_high) return 'A';
  if (!tail_high && !head_high) return 'B';
  return tail_high ? 'C' : 'D';
}

inline std::map<char, std::map<int, int>> class_histogram(const Matrix& m) {
  std::map<char, std::map<int, int>> h;
  for (char c : {'A', 'B', 'C', 'D'}) h[c];
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      if (m(u, v)) ++h[arc_class(m, u, v)][lambda(m, u, v)];
  return h;
}

inline std::map<int, int> lambda_histogram(const Matrix& m) {
  std::map<int, int> h;
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      if (m(u, v)) ++h[lambda(m, u, v)];
  return h;
}

// The definitions, read literally.
inline bool homogeneous(const Matrix& m) {
  if (m.n % 4 != 3) return false;
  const int t = m.n / 4;
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      if (m(u, v) && lambda(m, u, v) != t + 1) return false;
  return true;
}

inline bool doubly_regular(const Matrix& m) {
  if (m.n % 4 != 3) return false;
  const int t = m.n / 4;
  for (int u = 0; u < m.n; ++u) {
    if (out_degree(m, u) != (m.n - 1) / 2) return false;
    for (int v = u + 1; v < m.n; ++v)
      if (common_out(m, u, v) != t) return false;
  }
  return true;
}

inline bool nh_4t1(const Matrix& m) {
  const int t = m.n / 4;
  if (m.n % 4 != 1 || t < 1) return false;
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      if (m(u, v)) {
        const int l = lambda(m, u, v);
        if (l != t && l != t + 1) return false;
      }
  return true;
}

inline bool nh_4t2(const Matrix& m) {
  const int t = m.n / 4;
  if (m.n % 4 != 2 || t < 1 || !almost_regular(m)) return false;
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      if (m(u, v)) {
        const int want = arc_class(m, u, v) == 'C' ? t : t + 1;
        if (lambda(m, u, v) != want) return false;
      }
  return true;
}

inline bool nh_4t(const Matrix& m) {
  const int t = m.n / 4;
  if (m.n % 4 != 0 || t < 1 || !almost_regular(m)) return false;
  int zero_c = 0;
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      if (m(u, v)) {
        const char c = arc_class(m, u, v);
        const int l = lambda(m, u, v);
        if (c == 'D') {
          if (l != t + 1) return false;
        } else if (c == 'C' && l == 0) {
          ++zero_c;
        } else if (l != t) {
          return false;
        }
      }
  return zero_c == 1;
}

// The tournament whose upper-triangle pairs (i<j, row-major) follow the bits
// of mask: bit set means i->j.
inline Matrix from_mask(int n, std::uint64_t mask) {
  Matrix m{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U)
        m.a[i][j] = true;
      else
        m.a[j][i] = true;
    }
  return m;
}

inline std::string key(const Matrix& m) {
  std::string s;
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v) s += m(u, v) ? '1' : '0';
  return s;
}

// Lexicographically least adjacency key over all n! relabelings.
inline std::string brute_canonical(const Matrix& m) {
  std::vector<int> p(m.n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int u = 0; u < m.n; ++u)
      for (int v = 0; v < m.n; ++v) s += m(p[u], p[v]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool brute_isomorphic(const Matrix& a, const Matrix& b) {
  return a.n == b.n && brute_canonical(a) == brute_canonical(b);
}

inline bool quadratic_residue(int x, int p) {
  x = ((x % p) + p) % p;
  if (x == 0) return false;
  for (int y = 1; y < p; ++y)
    if ((y * y) % p == x) return true;
  return false;
}

}  // namespace oracle
