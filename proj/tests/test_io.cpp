#include <doctest.h>

#include <random>
#include <sstream>

#include "nht/construct.hpp"
#include "nht/io.hpp"
#include "support.hpp"

using namespace nht;
using ErrorCode = nht::ErrorCode;

TEST_CASE("golden matrix file reproduces bit-exactly") {
  const std::string text = support::read_file("nh6.mat");
  const Tournament m = parse_matrix_text(text);
  CHECK(m.order() == 6);
  CHECK(to_matrix_text(m) == text);
  CHECK(m.beats(0, 1));
  CHECK(m.beats(0, 3));
  CHECK(m.beats(5, 0));
}

TEST_CASE("matrix text errors") {
  CHECK_ERROR(parse_matrix_text("3\n010\n001\n100"), ErrorCode::ParseError);
  CHECK_ERROR(parse_matrix_text("3\n010\n001\n"), ErrorCode::ParseError);
  CHECK_ERROR(parse_matrix_text("3\n010\n0x1\n100\n"), ErrorCode::ParseError);
  CHECK_ERROR(parse_matrix_text("3\n0100\n001\n100\n"), ErrorCode::ParseError);
  CHECK_ERROR(parse_matrix_text("abc\n"), ErrorCode::ParseError);
  CHECK_ERROR(parse_matrix_text(""), ErrorCode::ParseError);
  CHECK_ERROR(parse_matrix_text("3\n110\n001\n100\n"), ErrorCode::LoopArc);
  CHECK_ERROR(parse_matrix_text("3\n011\n101\n000\n"), ErrorCode::DuplicateOrConflictingArc);
  CHECK_ERROR(parse_matrix_text("3\n000\n001\n100\n"), ErrorCode::MissingPair);
}

TEST_CASE("matrix stream") {
  const Tournament a = paley_tournament(3);
  const Tournament b = paley_tournament(7);
  const std::string text = to_matrix_text(a) + "\n" + to_matrix_text(b);
  const auto all = parse_matrix_stream(text);
  REQUIRE(all.size() == 2);
  CHECK(all[0] == a);
  CHECK(all[1] == b);
  CHECK(parse_matrix_stream("").empty());
}

TEST_CASE("digraph6 encoding by hand") {
  // C3: rows 010 001 100 -> bits 010001100 padded to 010001 100000.
  const std::string d6 = to_digraph6(support::c3());
  const std::string expected = std::string("&") + char(3 + 63) + char(0b010001 + 63) + char(0b100000 + 63) + "\n";
  CHECK(d6 == expected);
  CHECK(parse_digraph6(d6) == support::c3());
  CHECK(parse_digraph6(d6.substr(0, d6.size() - 1)) == support::c3());
}

TEST_CASE("digraph6 rejects non-tournaments and garbage") {
  // Empty digraph on 3 vertices.
  const std::string empty = std::string("&") + char(3 + 63) + char(63) + char(63);
  CHECK_ERROR(parse_digraph6(empty), ErrorCode::NotATournament);
  // Both 0->1 and 1->0.
  const std::string both = std::string("&") + char(2 + 63) + char(0b011000 + 63);
  CHECK_ERROR(parse_digraph6(both), ErrorCode::NotATournament);
  CHECK_ERROR(parse_digraph6("A?"), ErrorCode::ParseError);
  CHECK_ERROR(parse_digraph6(""), ErrorCode::ParseError);
  CHECK_ERROR(parse_digraph6(std::string("&") + char(3 + 63)), ErrorCode::ParseError);
}

TEST_CASE("serialization round trips") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 64; ++n) {
    const Tournament t = random_tournament(n, rng);
    CHECK(parse_matrix_text(to_matrix_text(t)) == t);
    CHECK(parse_digraph6(to_digraph6(t)) == t);
  }
}

TEST_CASE("hadamard text") {
  const SkewHadamard h = tournament_to_skew_hadamard(paley_tournament(7));
  const std::string text = to_hadamard_text(h);
  CHECK(text.substr(0, 2) == "8\n");
  CHECK(parse_hadamard_text(text) == h);
  CHECK_ERROR(parse_hadamard_text("2\n+1 +1\n+1 +1\n"), ErrorCode::NotSkewHadamard);
  CHECK_ERROR(parse_hadamard_text("2\n+1 +2\n-1 +1\n"), ErrorCode::ParseError);
}

TEST_CASE("read_all") {
  std::istringstream in("abc\ndef");
  CHECK(read_all(in) == "abc\ndef");
}
