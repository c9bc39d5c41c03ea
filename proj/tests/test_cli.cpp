#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "nht/construct.hpp"
#include "nht/io.hpp"
#include "nht/search.hpp"
#include "support.hpp"

using namespace nht;

namespace {

struct Outcome {
  int status = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Outcome o;
  o.status = cli::run(args, in, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("gen then verify homogeneous") {
  const Outcome gen = run({"gen", "paley", "7"});
  REQUIRE(gen.status == cli::kOk);
  CHECK(gen.out == to_matrix_text(paley_tournament(7)));
  const Outcome v = run({"verify", "--homogeneous"}, gen.out);
  CHECK(v.status == cli::kOk);
  CHECK(first_line(v.out) == "homogeneous, t=1, lambda=2");
  CHECK(v.out.find("lambda: 2:21") != std::string::npos);
}

TEST_CASE("gen, construct h, verify near-homogeneous") {
  const Outcome gen = run({"gen", "paley", "7"});
  const Outcome h = run({"construct", "h", "--x", "0"}, gen.out);
  REQUIRE(h.status == cli::kOk);
  CHECK(parse_matrix_text(h.out) == h_construction(paley_tournament(7), 0).tournament);
  const Outcome v = run({"verify", "--nh"}, h.out);
  CHECK(v.status == cli::kOk);
  CHECK(first_line(v.out) == "near-homogeneous (4t+1), t=3");
  // Auto-detection picks the same definition.
  CHECK(first_line(run({"verify"}, h.out).out) == "near-homogeneous (4t+1), t=3");
}

TEST_CASE("verify fails on the transitive tournament with a witness") {
  const Outcome v = run({"verify", "--nh", "--in", support::data_path("transitive4.mat")});
  CHECK(v.status == cli::kVerdictFalse);
  CHECK(first_line(v.out).rfind("not near-homogeneous (4t), t=1: ", 0) == 0);
  CHECK(first_line(v.out).find("vertex 0") != std::string::npos);

  const Outcome j = run({"verify", "--json"}, support::read_file("transitive4.mat"));
  CHECK(j.status == cli::kVerdictFalse);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["holds"] == false);
  CHECK(doc["check"] == "nh_4t");
  CHECK(doc["verdicts"]["nh_4t"]["witness"].contains("kind"));
}

TEST_CASE("verify reports the per-class histograms") {
  const Outcome v = run({"verify"}, support::read_file("nh6.mat"));
  CHECK(v.status == cli::kOk);
  CHECK(first_line(v.out) == "near-homogeneous (4t+2), t=1");
  CHECK(v.out.find("class A (3 arcs): 2:3") != std::string::npos);
  CHECK(v.out.find("class B (3 arcs): 2:3") != std::string::npos);
  CHECK(v.out.find("class C (6 arcs): 1:6") != std::string::npos);
  CHECK(v.out.find("class D (3 arcs): 2:3") != std::string::npos);
  CHECK(v.out.find("cd_balance: C=6 D=6") != std::string::npos);
  CHECK(v.out.find("C(k,2)") != std::string::npos);

  const auto doc = nlohmann::json::parse(run({"verify", "--json"}, support::read_file("nh6.mat")).out);
  CHECK(doc["class_lambda_histograms"]["C"]["1"] == 6);
  CHECK(doc["two_paths"]["total"] == 36);
  CHECK(doc["two_paths"]["class_sum"] == 36);
  CHECK(doc["cd_balance"]["D"] == 6);

  CHECK(run({"verify", "--regular"}, support::read_file("nh6.mat")).status == cli::kVerdictFalse);
  CHECK(run({"verify", "--almost-regular"}, support::read_file("nh6.mat")).status == cli::kOk);
  CHECK(run({"verify", "--nh-4t1"}, support::read_file("nh6.mat")).status == cli::kVerdictFalse);
}

TEST_CASE("augment and delete through the cli") {
  const std::string p7 = to_matrix_text(paley_tournament(7));
  const Outcome a = run({"construct", "augment", "-x", "2"}, p7);
  REQUIRE(a.status == cli::kOk);
  CHECK(run({"verify", "--nh-4t"}, a.out).status == cli::kOk);
  const Outcome d = run({"construct", "delete", "-x", "2"}, p7);
  CHECK(run({"verify", "--nh-4t2"}, d.out).status == cli::kOk);
  const Outcome p = run({"construct", "paley", "11"});
  CHECK(p.out == to_matrix_text(paley_tournament(11)));
}

TEST_CASE("convert round trips") {
  const std::string text = support::read_file("nh6.mat");
  const Outcome d6 = run({"convert", "--to", "digraph6"}, text);
  REQUIRE(d6.status == cli::kOk);
  CHECK(d6.out == to_digraph6(support::nh6()));
  const Outcome back = run({"convert", "--from", "digraph6", "--to", "matrix"}, d6.out);
  CHECK(back.out == text);
  CHECK(run({"convert"}, d6.out).out == text);

  const std::string p7 = to_matrix_text(paley_tournament(7));
  const Outcome h = run({"convert", "--to", "hadamard"}, p7);
  REQUIRE(h.status == cli::kOk);
  CHECK(run({"convert", "--from", "hadamard"}, h.out).out == p7);
  CHECK(run({"convert", "--from", "hadamard", "--to", "hadamard"}, h.out).out == h.out);
}

TEST_CASE("search through the cli") {
  const Outcome s = run({"search", "--order", "6", "--filter", "nh_4t2", "--dedup"});
  REQUIRE(s.status == cli::kOk);
  const auto found = parse_matrix_stream(s.out);
  REQUIRE(found.size() == 1);
  CHECK(are_isomorphic(found[0], support::nh6()));
  CHECK(s.err.find("classes=1") != std::string::npos);

  const Outcome many = run({"search", "-n", "4", "--dedup"});
  CHECK(parse_matrix_stream(many.out).size() == 4);
  const Outcome jobs = run({"search", "-n", "4", "--dedup", "--jobs", "3"});
  CHECK(jobs.out == many.out);

  const Outcome summary = run({"search", "-n", "4", "--summary-only"});
  CHECK(summary.out == "order=4 filter=none visited=64 passing=64\n");

  const auto dir = std::filesystem::temp_directory_path() / "nht_cli_search";
  std::filesystem::remove_all(dir);
  const Outcome files = run({"search", "-n", "5", "--filter", "nh_4t1", "--out-dir", dir.string()});
  CHECK(files.status == cli::kOk);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 24);
  std::filesystem::remove_all(dir);
}

TEST_CASE("canon") {
  const Outcome a = run({"canon"}, support::read_file("nh6.mat"));
  const Outcome b = run({"canon"}, to_matrix_text(delete_vertex_construction(paley_tournament(7), 3)));
  CHECK(a.status == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out == to_hex(canonical(support::nh6())) + "\n");
  const Outcome m = run({"canon", "--matrix"}, support::read_file("nh6.mat"));
  CHECK(m.out == a.out + to_matrix_text(canonical_representative(support::nh6())));
}

TEST_CASE("usage and input errors exit with status 2") {
  CHECK(run({}).status == cli::kUsageError);
  CHECK(run({"frobnicate"}).status == cli::kUsageError);
  CHECK(run({"gen", "paley"}).status == cli::kUsageError);
  CHECK(run({"gen", "paley", "9"}).status == cli::kUsageError);
  CHECK(run({"gen", "cube", "3"}).status == cli::kUsageError);
  CHECK(run({"verify", "--homogeneous", "--nh"}, to_matrix_text(paley_tournament(7))).status == cli::kUsageError);
  CHECK(run({"verify"}, "3\n010\n").status == cli::kUsageError);
  CHECK(run({"verify", "--in", "/nonexistent/file.mat"}).status == cli::kUsageError);
  CHECK(run({"search", "-n", "12"}).status == cli::kUsageError);
  CHECK(run({"search", "-n", "6", "--filter", "bogus"}).status == cli::kUsageError);
  CHECK(run({"search", "-n", "6", "--jobs", "0"}).status == cli::kUsageError);
  CHECK(run({"construct", "h"}, support::read_file("nh6.mat")).status == cli::kUsageError);
  CHECK(run({"construct", "paley"}).status == cli::kUsageError);
  CHECK(run({"convert", "--to", "yaml"}).status == cli::kUsageError);

  const Outcome bad = run({"construct", "h", "--x", "9"}, to_matrix_text(paley_tournament(7)));
  CHECK(bad.status == cli::kUsageError);
  CHECK_FALSE(bad.err.empty());
  CHECK(bad.err.find('\n') == bad.err.size() - 1);
  CHECK(bad.out.empty());
}

TEST_CASE("help exits cleanly") {
  const Outcome h = run({"--help"});
  CHECK(h.status == cli::kOk);
  CHECK(h.out.find("verify") != std::string::npos);
}
