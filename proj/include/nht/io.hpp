#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nht/tournament.hpp"

namespace nht {

class SkewHadamard;

// Plain matrix text: "n\n" followed by n rows of '0'/'1', each ending in '\n'.
std::string to_matrix_text(const Tournament& t);
Tournament parse_matrix_text(std::string_view text);

// Several matrix blocks separated by blank lines (search output).
std::vector<Tournament> parse_matrix_stream(std::string_view text);

// digraph6: '&', N(n), then the n*n adjacency bits row-major in 6-bit groups.
std::string to_digraph6(const Tournament& t);
Tournament parse_digraph6(std::string_view line);

// "m\n" followed by m rows of space separated +1/-1 entries.
std::string to_hadamard_text(const SkewHadamard& h);
SkewHadamard parse_hadamard_text(std::string_view text);

std::string read_all(std::istream& in);

}  // namespace nht
