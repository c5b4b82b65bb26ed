#ifdef SUPCALC_HAVE_CLI

#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace supcalc::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& name) { return std::string(SUPCALC_CORPUS_DIR) + "/" + name + ".lsup"; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("supcalc_cli_test_" + name + ".lsup");
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, ParseAndCheck) {
  auto p = run({"parse", corpus_file("tens_elim")});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_EQ(p.out, "let_tens(tens(star(2),star(3)),a,b,unit_elim(a,b))\n");
  auto c = run({"check", corpus_file("adequacy_t")});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_EQ(c.out, "one\n");
  auto j = nlohmann::json::parse(run({"--json", "check", corpus_file("adequacy_t")}).out);
  EXPECT_EQ(j["type"], "one");
  EXPECT_EQ(j["derivation"]["rule"], "sup_e");
}

TEST(Cli, OpenTermsTakeAContext) {
  auto f = temp_file("open", "-- ctx: x:one & one\nsum(fst(x), snd(x))\n");
  EXPECT_EQ(run({"check", f}).out, "one\n");
  EXPECT_EQ(run({"check", f, "--ctx", "x:one & one & one"}).code, kExitFailure);
  auto d = run({"denote", f});
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_EQ(d.out, "1x2\n1 1\n");
}

TEST(Cli, RunAndStrategies) {
  EXPECT_EQ(run({"run", corpus_file("tens_elim")}).out, "star(6)\n");
  for (const char* s : {"lo", "ro", "li", "ri", "random"}) {
    EXPECT_EQ(run({"run", "--strategy", s, corpus_file("tens_elim")}).out, "star(6)\n") << s;
  }
  auto j = nlohmann::json::parse(run({"--json", "run", corpus_file("tens_elim")}).out);
  EXPECT_EQ(j["normal_form"], "star(6)");
  auto choice = run({"run", corpus_file("adequacy_t")});
  EXPECT_EQ(choice.code, kExitFailure);
  EXPECT_NE(choice.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"run", "--strategy", "sideways", corpus_file("tens_elim")}).code, kExitUsage);
}

TEST(Cli, Distribution) {
  auto d = run({"distro", corpus_file("adequacy_u")});
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_EQ(d.out, "1/2\tstar(3/4)\n1/2\tstar(1/4)\n");
  auto f = temp_file("same", "sup_elim{1/4,3/4}(sup(star(1),star(1)),x.x,y.y)\n");
  EXPECT_EQ(run({"distro", "--aggregate", f}).out, "1\tstar(1)\n");
  auto j = nlohmann::json::parse(run({"--json", "distro", corpus_file("adequacy_u")}).out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["weight"], "1/2");
  EXPECT_EQ(j[1]["term"], "star(1/4)");
}

TEST(Cli, DenoteAndSoundness) {
  EXPECT_EQ(run({"denote", corpus_file("encode_2x2")}).out, "4x1\n1\n2\n3\n4\n");
  auto j = nlohmann::json::parse(run({"--json", "denote", corpus_file("star")}).out);
  EXPECT_EQ(j["rows"], 1);
  EXPECT_EQ(j["entries"][0], "2");
  auto s = run({"soundness", corpus_file("adequacy_u")});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_EQ(s.out, "redexes checked: 1\nstep soundness: PASS\nglobal soundness: PASS\n");
}

TEST(Cli, EncodeThenApply) {
  auto e = run({"encode", "--matrix", "[[1,2],[3,4]]", "--from", "one & one", "--to", "one & one"});
  ASSERT_EQ(e.code, kExitOk);
  auto f = temp_file("encoded", e.out);
  auto a = run({"apply", f, "--vec", "(5, 6)"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, "(17, 39)\n");
  EXPECT_EQ(run({"apply", f, "--vec", "[5, 6]"}).out, "(17, 39)\n");
  EXPECT_EQ(run({"apply", f, "--vec", "(5)"}).code, kExitFailure);
  EXPECT_EQ(run({"encode", "--matrix", "[[1,2]]", "--from", "one & one", "--to", "one & one"}).code, kExitFailure);
}

TEST(Cli, SemiringOption) {
  auto f = temp_file("half", "scal(1/2, star(1))\n");
  EXPECT_EQ(run({"run", f}).out, "star(1/2)\n");
  EXPECT_EQ(run({"--semiring", "bool", "run", f}).code, kExitFailure);
  EXPECT_EQ(run({"--semiring", "f64", "run", f}).out, "star(0.5)\n");
  EXPECT_EQ(run({"--semiring", "reals", "run", f}).code, kExitUsage);
}

TEST(Cli, Laws) {
  auto l = run({"laws", "--trials", "5", "--max-dim", "2"});
  EXPECT_EQ(l.code, kExitOk);
  EXPECT_NE(l.out.find("negative control"), std::string::npos);
  EXPECT_EQ(run({"laws", "--trials", "0"}).code, kExitUsage);
}

TEST(Cli, CorpusListingAndExport) {
  auto c = run({"corpus"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_EQ(c.out.rfind("adequacy_t\tone\n", 0), 0u);
  auto dir = std::filesystem::temp_directory_path() / "supcalc_cli_test_export";
  std::filesystem::remove_all(dir);
  EXPECT_EQ(run({"corpus", "--export", dir.string()}).code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "adequacy_u.lsup"));
  EXPECT_EQ(run({"check", (dir / "eta_identity.lsup").string()}).out, "(one & one) -o (one & one)\n");
}

TEST(Cli, UsageAndErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"check"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"check", "/nonexistent/file.lsup"}).code, kExitFailure);
  auto bad = run({"check", temp_file("bad", "pair(star(1),\n")});
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_NE(bad.err.find(":2:"), std::string::npos) << bad.err;
  auto ill = run({"check", temp_file("ill", "app(star(1), star(1))\n")});
  EXPECT_EQ(ill.code, kExitFailure);
  EXPECT_NE(ill.err.find("TypeMismatch"), std::string::npos) << ill.err;
}

#endif
