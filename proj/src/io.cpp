#include "nht/io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

#include "nht/construct.hpp"

namespace nht {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

// Splits on '\n'; a final line must be terminated.
std::vector<std::string_view> terminated_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) parse_error("missing trailing newline");
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    parse_error(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

Tournament matrix_from_lines(std::span<const std::string_view> lines) {
  if (lines.empty()) parse_error("empty input");
  const int n = parse_int(lines[0], "order");
  if (n <= 0) parse_error("order must be positive");
  check_order(n);
  if (static_cast<int>(lines.size()) != n + 1) {
    parse_error("expected " + std::to_string(n) + " matrix rows, got " + std::to_string(lines.size() - 1));
  }
  std::vector<BitRow> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    const std::string_view row = lines[u + 1];
    if (static_cast<int>(row.size()) != n) parse_error("row " + std::to_string(u) + " has wrong length");
    for (int v = 0; v < n; ++v) {
      if (row[v] == '1') {
        rows[u] |= BitRow{1} << v;
      } else if (row[v] != '0') {
        parse_error("row " + std::to_string(u) + " contains '" + std::string(1, row[v]) + "'");
      }
    }
  }
  return Tournament::from_out_rows(n, std::move(rows));
}

}  // namespace

std::string to_matrix_text(const Tournament& t) {
  const int n = t.order();
  std::string out = std::to_string(n) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(n) * (n + 1));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) out.push_back(t.beats(u, v) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

Tournament parse_matrix_text(std::string_view text) {
  const auto lines = terminated_lines(text);
  return matrix_from_lines(lines);
}

std::vector<Tournament> parse_matrix_stream(std::string_view text) {
  const auto lines = terminated_lines(text);
  std::vector<Tournament> result;
  std::size_t i = 0;
  while (i < lines.size()) {
    if (lines[i].empty()) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < lines.size() && !lines[j].empty()) ++j;
    result.push_back(matrix_from_lines(std::span(lines).subspan(i, j - i)));
    i = j;
  }
  return result;
}

std::string to_digraph6(const Tournament& t) {
  const int n = t.order();
  std::string out = "&";
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int group = 0;
  int filled = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      group = (group << 1) | (t.beats(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  out.push_back('\n');
  return out;
}

Tournament parse_digraph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty() || line[0] != '&') parse_error("digraph6 must start with '&'");
  std::size_t pos = 1;
  auto next = [&]() -> int {
    if (pos >= line.size()) parse_error("digraph6 truncated");
    const int c = static_cast<unsigned char>(line[pos++]) - 63;
    if (c < 0 || c > 63) parse_error("digraph6 byte out of range");
    return c;
  };
  int n = next();
  if (n == 63) {
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  }
  if (n <= 0) parse_error("digraph6 order must be positive");
  check_order(n);
  const std::size_t bits = static_cast<std::size_t>(n) * n;
  const std::size_t groups = (bits + 5) / 6;
  if (line.size() - pos != groups) parse_error("digraph6 length does not match order " + std::to_string(n));
  std::vector<BitRow> rows(n, 0);
  std::size_t index = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const int value = next();
    for (int b = 5; b >= 0; --b, ++index) {
      const bool set = (value >> b) & 1;
      if (index >= bits) {
        if (set) parse_error("digraph6 padding bits must be zero");
        continue;
      }
      if (set) rows[index / n] |= BitRow{1} << (index % n);
    }
  }
  try {
    return Tournament::from_out_rows(n, std::move(rows));
  } catch (const Error& e) {
    throw Error(ErrorCode::NotATournament, e.what());
  }
}

std::string to_hadamard_text(const SkewHadamard& h) {
  const int m = h.order();
  std::string out = std::to_string(m) + "\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j > 0) out.push_back(' ');
      out += h.at(i, j) > 0 ? "+1" : "-1";
    }
    out.push_back('\n');
  }
  return out;
}

SkewHadamard parse_hadamard_text(std::string_view text) {
  const auto lines = terminated_lines(text);
  if (lines.empty()) parse_error("empty input");
  const int m = parse_int(lines[0], "order");
  if (m <= 0) parse_error("order must be positive");
  if (static_cast<int>(lines.size()) != m + 1) parse_error("expected " + std::to_string(m) + " matrix rows");
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    std::istringstream row{std::string(lines[i + 1])};
    std::string token;
    int count = 0;
    while (row >> token) {
      if (token == "+1" || token == "1") {
        entries.push_back(1);
      } else if (token == "-1") {
        entries.push_back(-1);
      } else {
        parse_error("bad entry '" + token + "'");
      }
      ++count;
    }
    if (count != m) parse_error("row " + std::to_string(i) + " has " + std::to_string(count) + " entries");
  }
  return SkewHadamard::from_entries(m, std::move(entries));
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace nht
