#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lsb/claims.hpp"
#include "lsb/cli.hpp"

using namespace lsb;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run lsb_run(std::vector<std::string> args) {
  args.insert(args.begin(), "lsb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/lsb_test_" + name;
  std::ofstream(path) << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("manifest parsing") {
  auto specs = parse_manifest("# comment\n\na.b | anchor | cybe | osp-r1 | CYBE\nc | x | table | table2 v | erratum\n");
  REQUIRE(specs.size() == 2);
  CHECK(specs[0].id == "a.b");
  CHECK(specs[0].args == std::vector<std::string>{"osp-r1"});
  CHECK(specs[1].args.size() == 2);
  CHECK_THROWS_AS(parse_manifest("a | b | c\n"), ParseError);
  CHECK_THROWS_AS(parse_manifest("a | | cybe | x | \n"), ParseError);
}

TEST_CASE("claim outcomes") {
  auto r = run_claim({"x", "", "cybe", {"osp-r3"}, "mCYBE-only"});
  CHECK(r.status == ClaimResult::Status::Pass);
  r = run_claim({"x", "", "cybe", {"osp-r3"}, "CYBE"});
  CHECK(r.status == ClaimResult::Status::Fail);
  CHECK(r.detail.find("got mCYBE-only") != std::string::npos);
  r = run_claim({"x", "", "cobracket", {"e2-case-A-printed"}, "erratum:cojacobi,cocycle"});
  CHECK(r.status == ClaimResult::Status::Erratum);
  r = run_claim({"x", "", "no-such-check", {}, "pass"});
  CHECK(r.status == ClaimResult::Status::Fail);
  CHECK(r.detail.rfind("error:", 0) == 0);
}

TEST_CASE("parameter strings") {
  auto b = parse_params("a=1, b=-1/2");
  CHECK(b.size() == 2);
  CHECK(parse_params("-").empty());
  CHECK_THROWS_AS(parse_params("a"), ParseError);
  CHECK_THROWS_AS(parse_params("nosuch=1"), ParseError);
}

TEST_CASE("schouten command") {
  Run r = lsb_run({"schouten", "--algebra", "super_e2", "--r", "1 H^P+"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[[r,r]] = 0") != std::string::npos);
  CHECK(r.out.find("CYBE") != std::string::npos);
  r = lsb_run({"schouten", "--family", "osp-r3", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("status\tmCYBE-only", 0) == 0);
}

TEST_CASE("validate command and algebra files") {
  CHECK(lsb_run({"validate", "--file", data_path("osp12.alg")}).code == 0);
  CHECK(lsb_run({"validate", "--algebra", "super_e2"}).code == 0);

  std::string text = slurp(data_path("osp12.alg"));
  for (const char* name : {"osp12", "super_e2"}) CHECK(parse_algebra(render_algebra(builtin(name))) == builtin(name));

  // breaking one structure constant breaks Jacobi
  std::string broken = text;
  broken.replace(broken.find("X+ X- = 2 H"), 11, "X+ X- = 3 H");
  Run r = lsb_run({"validate", "--file", temp_file("broken.alg", broken)});
  CHECK(r.code == 1);
  CHECK(r.out.find("jacobi: FAIL") != std::string::npos);
  CHECK_THROWS_AS(parse_algebra_file(temp_file("broken2.alg", broken)), PreconditionError);

  std::string dup = text;
  dup.replace(dup.find("X-:even"), 7, "X+:even");
  CHECK(lsb_run({"validate", "--file", temp_file("dup.alg", dup)}).code == 2);
  CHECK(lsb_run({"validate", "--file", "/nonexistent.alg"}).code == 2);
}

TEST_CASE("cobracket-check command") {
  CHECK(lsb_run({"cobracket-check", "--family", "e2-case-B", "--params", "c=0"}).code == 0);
  Run r = lsb_run({"cobracket-check", "--family", "e2-case-B", "--format", "machine"});
  CHECK(r.code == 1);
  CHECK(r.out.find("cojacobi\tfail") != std::string::npos);
  CHECK(lsb_run({"cobracket-check", "--family", "no-such-family"}).code == 2);
}

TEST_CASE("solve-cocycle command") {
  Run r = lsb_run({"solve-cocycle", "--algebra", "osp12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("nullity\t6\n") != std::string::npos);
  CHECK(r.out.find("coboundary-dimension\t6\n") != std::string::npos);
}

TEST_CASE("poisson command") {
  Run r = lsb_run({"poisson", "--group", "osp", "--structure", "2", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{a,b} = a^2 - 1\n") != std::string::npos);
  r = lsb_run({"poisson", "--group", "super-e2", "--structure", "i", "--format", "machine"});
  CHECK(r.out.find("{a,b} = c*s\n") != std::string::npos);
  CHECK(lsb_run({"poisson", "--group", "sl2", "--structure", "1"}).code == 2);
  CHECK(lsb_run({"poisson", "--group", "osp", "--structure", "vii"}).code == 2);
}

TEST_CASE("exit-code contract") {
  CHECK(lsb_run({}).code == 2);
  CHECK(lsb_run({"frobnicate"}).code == 2);
  CHECK(lsb_run({"schouten", "--bogus"}).code == 2);
  CHECK(lsb_run({"poisson", "--structure", "i", "--format", "xml"}).code == 2);
  CHECK(lsb_run({"--help"}).code == 0);
}

TEST_CASE("verify-paper on a filtered registry") {
  std::string report = "/tmp/lsb_test_report.tsv";
  std::remove(report.c_str());
  Run r = lsb_run({"verify-paper", "--filter", "table2", "--report", report});
  CHECK(r.code == 0);
  CHECK(r.out.find("6 claims: 5 pass, 0 fail, 1 errata") != std::string::npos);
  CHECK(slurp(report).find("table2.v\terratum\t") != std::string::npos);
  CHECK(lsb_run({"verify-paper", "--filter", "table2", "--strict"}).code == 1);
  CHECK(lsb_run({"verify-paper", "--filter", "table2.i", "--strict"}).code == 0);
  CHECK(lsb_run({"verify-paper", "--filter", "no-such"}).code == 2);

  // an expectation that disagrees with the computation is a failure
  std::string m = temp_file("manifest", "bad | anchor | cybe | osp-r3 | CYBE\n");
  r = lsb_run({"verify-paper", "--manifest", m, "--format", "machine"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("bad\tfail\texpected CYBE, got mCYBE-only", 0) == 0);
}
