#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "nht/search.hpp"

namespace nht {

namespace {

struct Partial {
  std::array<std::int8_t, kCanonicalBound> perm{};
  BitRow used = 0;
};

struct CanonicalResult {
  CanonicalForm form;
  std::vector<Vertex> labeling;
};

// Level-by-level minimisation: the code is a concatenation of per-position
// chunks of equal length across candidates, so the least code is found by
// keeping, at every position, only the partial labelings whose chunk is
// minimal. Candidates for a position are restricted to its degree cell.
CanonicalResult canonical_search(const Tournament& t) {
  const int n = t.order();
  if (n > kCanonicalBound) {
    throw Error(ErrorCode::OrderTooLarge,
                "canonical form supports order <= " + std::to_string(kCanonicalBound));
  }
  std::vector<Vertex> by_degree(n);
  for (Vertex v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return t.out_degree(a) < t.out_degree(b); });
  std::vector<BitRow> cell_of_position(n, 0);
  for (int pos = 0; pos < n; ++pos) {
    const int d = t.out_degree(by_degree[pos]);
    for (Vertex v = 0; v < n; ++v) {
      if (t.out_degree(v) == d) cell_of_position[pos] |= BitRow{1} << v;
    }
  }

  std::string code;
  std::vector<Partial> frontier(1);
  std::vector<Partial> next;
  for (int pos = 0; pos < n; ++pos) {
    next.clear();
    std::uint64_t best = ~std::uint64_t{0};
    for (const Partial& partial : frontier) {
      for (BitRow rest = cell_of_position[pos] & ~partial.used; rest; rest &= rest - 1) {
        const Vertex v = std::countr_zero(rest);
        std::uint64_t chunk = 0;
        for (int i = 0; i < pos; ++i) chunk = (chunk << 1) | (t.beats(partial.perm[i], v) ? 1U : 0U);
        if (chunk > best) continue;
        if (chunk < best) {
          best = chunk;
          next.clear();
        }
        Partial extended = partial;
        extended.perm[pos] = static_cast<std::int8_t>(v);
        extended.used |= BitRow{1} << v;
        next.push_back(extended);
      }
    }
    for (int i = pos - 1; i >= 0; --i) code.push_back(((best >> i) & 1U) ? '1' : '0');
    frontier.swap(next);
  }

  CanonicalResult result;
  result.form.bytes.push_back(static_cast<char>(n));
  for (std::size_t i = 0; i < code.size(); i += 8) {
    unsigned char byte = 0;
    for (std::size_t b = 0; b < 8; ++b) {
      byte = static_cast<unsigned char>(byte << 1);
      if (i + b < code.size() && code[i + b] == '1') byte |= 1U;
    }
    result.form.bytes.push_back(static_cast<char>(byte));
  }
  const Partial& winner = frontier.front();
  result.labeling.assign(winner.perm.begin(), winner.perm.begin() + n);
  return result;
}

}  // namespace

CanonicalForm canonical(const Tournament& t) { return canonical_search(t).form; }

std::vector<Vertex> canonical_labeling(const Tournament& t) { return canonical_search(t).labeling; }

Tournament canonical_representative(const Tournament& t) {
  return relabel(t, canonical_search(t).labeling);
}

Canonicalized canonicalize(const Tournament& t) {
  CanonicalResult r = canonical_search(t);
  return {std::move(r.form), relabel(t, r.labeling)};
}

bool are_isomorphic(const Tournament& a, const Tournament& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::OrderMismatch,
                "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
  }
  return canonical(a) == canonical(b);
}

std::string to_hex(const CanonicalForm& form) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (char c : form.bytes) {
    const auto byte = static_cast<unsigned char>(c);
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 15]);
  }
  return out;
}

}  // namespace nht
