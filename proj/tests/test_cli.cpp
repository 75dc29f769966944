#include "cfmonoid/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cfmonoid/presentation.hpp"
#include "doctest.h"

using namespace cfmonoid;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cfmonoid");
  std::vector<char const*> argv;
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  int const code =
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(std::string const& name) {
  return (std::filesystem::path(CFMONOID_TEST_TMPDIR) / name).string();
}

void write(std::string const& path, std::string const& text) {
  std::ofstream(path) << text;
}

std::string slurp(std::string const& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string build_builtin(std::string const& name) {
  auto const path = tmp("cli_" + name + ".json");
  auto const r = run({"build", "--builtin", name, "--out", path});
  REQUIRE(r.code == kOk);
  return path;
}

}  // namespace

TEST_CASE("build") {
  auto const r = run({"build", "--builtin", "trivial", "--out",
                      tmp("cli_trivial.json")});
  CHECK(r.code == kOk);
  CHECK(r.out.find("total=20") != std::string::npos);
  CHECK(parse_presentation(slurp(tmp("cli_trivial.json"))).rules().size() ==
        20);

  auto const z2 = run({"build", "--builtin", "z2", "--out",
                       tmp("cli_z2.json")});
  CHECK(z2.out.find("A=4 B=18 C=9") != std::string::npos);

  write(tmp("bad.txt"), "2\n2 1\n1 1\n");
  auto const bad =
      run({"build", "--cayley", tmp("bad.txt"), "--out", tmp("x.json")});
  CHECK(bad.code == kNotAssociative);
  CHECK(bad.err.find("(2,1,1)") != std::string::npos);

  write(tmp("syntax.txt"), "2\n1 3\n2 2\n");
  auto const syn =
      run({"build", "--cayley", tmp("syntax.txt"), "--out", tmp("x.json")});
  CHECK(syn.code == kSyntaxError);
  CHECK(syn.err.find("entry 3 out of range at row 1") != std::string::npos);

  write(tmp("zeros.f"), "slice 1\n0 0\n0 0\n");
  auto const col = run({"build", "--builtin", "trivial", "--coloring",
                        tmp("zeros.f"), "--out", tmp("x.json")});
  CHECK(col.code == kBadColoring);
  CHECK(col.err.find("C1 FAIL") != std::string::npos);

  CHECK(run({"build", "--builtin", "nope", "--out", tmp("x.json")}).code ==
        kSyntaxError);
  CHECK(run({"build", "--out", tmp("x.json")}).code == kSyntaxError);
  CHECK(run({"build", "--cayley", tmp("missing.txt"), "--out",
             tmp("x.json")})
            .code == kSyntaxError);
}

TEST_CASE("build is deterministic") {
  run({"build", "--builtin", "t2", "--out", tmp("t2a.json")});
  run({"build", "--builtin", "t2", "--out", tmp("t2b.json")});
  CHECK(slurp(tmp("t2a.json")) == slurp(tmp("t2b.json")));
}

TEST_CASE("nf") {
  auto const pres = build_builtin("z2");
  CHECK(run({"nf", "--pres", pres, "x1 y1"}).out == "0\n");
  CHECK(run({"nf", "--pres", pres, "1"}).out == "1\n");
  CHECK(run({"nf", "--pres", pres, "x1 s2 y1"}).out == "1\n");
  CHECK(run({"nf", "--pres", pres, "s2 s2 x1"}).out == "s1 x1\n");
  CHECK(run({"nf", "--pres", pres, "s9"}).code == kSyntaxError);
  CHECK(run({"nf", "--pres", tmp("nope.json"), "s1"}).code == kSyntaxError);
}

TEST_CASE("check-complete") {
  auto const pres = build_builtin("trivial");
  auto const r = run({"check-complete", "--pres", pres});
  CHECK(r.code == kOk);
  CHECK(r.out.find("A-A: 1\n") != std::string::npos);
  CHECK(r.out.find("COMPLETE") != std::string::npos);

  // tamper with the A-rule s1 s2 -> s2 in z2 (should be s2 -> ... s1 s2 = s2)
  auto text = slurp(build_builtin("z2"));
  auto const needle = std::string("\"lhs\": [\n        \"s1\",\n        \"s1\"\n"
                                  "      ],\n      \"rhs\": [\n        \"s1\"");
  auto const pos = text.find(needle);
  REQUIRE(pos != std::string::npos);
  text.replace(pos + needle.size() - 3, 2, "s2");
  write(tmp("tampered.json"), text);
  auto const t = run({"check-complete", "--pres", tmp("tampered.json")});
  CHECK(t.code == kVerificationFailed);
  CHECK(t.out.find("NOT joinable") != std::string::npos);
  CHECK(t.out.find("NOT COMPLETE") != std::string::npos);
}

TEST_CASE("check-f") {
  auto const r = run({"check-f", "--n", "3"});
  CHECK(r.code == kOk);
  CHECK(r.out == "C1 pass\nC2 pass\nC3 pass\nC4 pass\nC5 pass\nC6 pass\n");
  auto const printed = run({"check-f", "--n", "1", "--print"});
  CHECK(printed.out.starts_with("slice 1\n1 0\n0 1\n"));
  write(tmp("ones.f"), "slice 1\n1 1\n1 1\n");
  auto const ones = run({"check-f", "--file", tmp("ones.f")});
  CHECK(ones.code == kBadColoring);
  CHECK(ones.out.find("C3 FAIL") != std::string::npos);
  write(tmp("broken.f"), "slice 1\n1 2\n1 1\n");
  CHECK(run({"check-f", "--file", tmp("broken.f")}).code == kSyntaxError);
}

TEST_CASE("check-embed") {
  auto const r = run({"check-embed", "--pres", build_builtin("t2")});
  CHECK(r.code == kOk);
  CHECK(r.out.find("embedding: OK") != std::string::npos);
}

TEST_CASE("collapse and verify-trace through files") {
  auto const pres = build_builtin("trivial");
  auto const trace = tmp("x1x2.trace");
  auto const c = run({"collapse", "--pres", pres, "x1", "x2", "--out", trace});
  CHECK(c.code == kOk);
  CHECK(slurp(trace).starts_with("0\tGEN\tx1\tx2"));
  auto const v = run({"verify-trace", "--pres", pres, trace});
  CHECK(v.code == kOk);
  CHECK(v.out.starts_with("ACCEPTED (3 steps)"));

  auto const to_stdout = run({"collapse", "--pres", pres, "1", "s1"});
  CHECK(to_stdout.out.find("\tREWRITE both\t0\t1\t") != std::string::npos);

  write(tmp("bad.trace"), "0\tGEN\ts1\t0\n");
  auto const bad = run({"verify-trace", "--pres", pres, tmp("bad.trace")});
  CHECK(bad.code == kVerificationFailed);
  CHECK(bad.out.starts_with("REJECTED at step 0"));

  write(tmp("garbled.trace"), "0 GEN s1 0\n");
  CHECK(run({"verify-trace", "--pres", pres, tmp("garbled.trace")}).code ==
        kSyntaxError);
  CHECK(run({"collapse", "--pres", pres, "s1", "s1"}).code == kSyntaxError);
}

TEST_CASE("enumerate") {
  auto const pres = build_builtin("trivial");
  auto const r = run({"enumerate", "--pres", pres, "--maxlen", "1"});
  CHECK(r.out == "1\ns1\nx1\nx2\ny1\ny2\n# 6 nonzero normal forms of length "
                 "<= 1\n");
  CHECK(run({"enumerate", "--pres", pres, "--maxlen", "2"})
            .out.find("# 26 ") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kSyntaxError);
  CHECK(run({"frobnicate"}).code == kSyntaxError);
  CHECK(run({"--help"}).code == kOk);
}
