#pragma once

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "nht/construct.hpp"
#include "nht/error.hpp"
#include "nht/io.hpp"

namespace support {

inline std::string data_path(const std::string& name) { return std::string(NHT_TEST_DATA) + "/" + name; }

inline std::string read_file(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing test data " << name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline nht::Tournament nh6() { return nht::parse_matrix_text(read_file("nh6.mat")); }

inline nht::Tournament c3() {
  const nht::Arc arcs[] = {{0, 1}, {1, 2}, {2, 0}};
  return nht::build(3, arcs);
}

inline nht::Tournament flip(const nht::Tournament& t, nht::Vertex u, nht::Vertex v) {
  std::vector<nht::Arc> arcs = t.arcs();
  for (auto& a : arcs)
    if ((a.tail == u && a.head == v) || (a.tail == v && a.head == u)) std::swap(a.tail, a.head);
  return nht::build(t.order(), arcs);
}

template <class F>
nht::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const nht::Error& e) {
    return e.code();
  }
  FAIL("expected an nht::Error");
  return nht::ErrorCode::ParseError;
}

}  // namespace support

#define CHECK_ERROR(expr, expected_code) \
  CHECK(support::error_code_of([&] { (void)(expr); }) == (expected_code))
