#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wfsep/cli.hpp"
#include "wfsep/selftest.hpp"

using namespace wfsep;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("wfsep-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& text) const {
    auto p = path / name;
    std::ofstream out(p);
    out << text;
    return p.string();
  }
  std::string name(const std::string& n) const { return (path / n).string(); }
};

std::pair<int, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out;
  int code = dispatch(args, out);
  return {code, out.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("dfa check and minimize") {
  TempDir tmp;
  std::string f = tmp.file("l.dfa", serialize_dfa(corpus::contains_aa()));
  auto [code, out] = run({"dfa", "check", f});
  CHECK(code == 0);
  CHECK(has_line(out, "RESULT valid"));

  auto [mcode, mout] = run({"dfa", "minimize", f});
  CHECK(mcode == 0);
  CHECK(equivalent(parse_dfa(mout), corpus::contains_aa()));
}

TEST_CASE("usage and input errors exit with code two") {
  auto [code, out] = run({"dfa", "frobnicate", "x"});
  CHECK(code == 2);
  CHECK(out.find("ERROR") != std::string::npos);
  TempDir tmp;
  std::string bad = tmp.file("bad.dfa", "alphabet a\nstates 1\n");
  auto [code2, out2] = run({"dfa", "check", bad});
  CHECK(code2 == 2);
  CHECK(out2.find("ERROR") != std::string::npos);
  auto [code3, out3] = run({"dfa", "check", tmp.name("missing.dfa")});
  CHECK(code3 == 2);
}

TEST_CASE("semigroup verb with identity presets") {
  TempDir tmp;
  std::string f = tmp.file("l.dfa", serialize_dfa(corpus::contains_aa()));
  auto [code, out] = run({"semigroup", f, "--identities", "aperiodic,D"});
  CHECK(code == 1);
  CHECK(has_line(out, "IDENTITY aperiodic true"));
  CHECK(has_line(out, "IDENTITY D false"));
  CHECK(out.find("elements 5") != std::string::npos);
}

TEST_CASE("member verb") {
  TempDir tmp;
  std::string aa = tmp.file("aa.dfa", serialize_dfa(corpus::contains_aa()));
  std::string parity = tmp.file("p.dfa", serialize_dfa(corpus::even_a()));

  auto [c1, o1] = run({"member", "--logic", "sigma1", aa});
  CHECK(c1 == 1);
  CHECK(has_line(o1, "RESULT false"));

  auto [c2, o2] = run({"member", "--logic", "sigma1+", aa});
  CHECK(c2 == 0);
  CHECK(has_line(o2, "RESULT true"));

  auto [c3, o3] = run({"member", "--logic", "sigma1+", parity});
  CHECK(c3 == 1);
  CHECK(has_line(o3, "RESULT false"));
}

TEST_CASE("separate verb emits a verified separator") {
  TempDir tmp;
  std::string l = tmp.file("l.dfa", serialize_dfa(corpus::contains_aa()));
  std::string lp = tmp.file(
      "lp.dfa",
      serialize_dfa(strip_epsilon(complement(corpus::contains_aa()))));
  std::string sep = tmp.name("sep.dfa");
  auto [code, out] =
      run({"separate", "--logic", "sigma1+", l, lp, "--emit-separator", sep});
  CHECK(code == 0);
  CHECK(has_line(out, "VERDICT SEPARABLE"));
  CHECK(has_line(out, "SEPARATOR " + sep));
  Dfa s = parse_dfa([&] {
    std::ifstream in(sep);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }());
  CHECK(includes(s, corpus::contains_aa()));
}

TEST_CASE("separate verb reports witnesses when inseparable") {
  TempDir tmp;
  std::string l = tmp.file("l.dfa", serialize_dfa(corpus::even_a()));
  std::string lp = tmp.file("lp.dfa", serialize_dfa(corpus::odd_a()));
  auto [code, out] =
      run({"separate", "--logic", "sigma1+", l, lp, "--witness-k", "2"});
  CHECK(code == 1);
  CHECK(has_line(out, "VERDICT NOT_SEPARABLE"));
  CHECK(out.find("WITNESS_L ") != std::string::npos);
  CHECK(out.find("WITNESS_LP ") != std::string::npos);
  CHECK(has_line(out, "K 2"));
}

TEST_CASE("ef verb plays the requested game") {
  auto [c1, o1] = run({"ef", "--game", "sigma", "-n", "1", "-k", "2", "ab",
                       "aabb"});
  CHECK(c1 == 0);
  CHECK(has_line(o1, "RESULT true"));
  // min and max are adjacent in ab but not in aabb
  auto [c1p, o1p] = run({"ef", "--game", "sigmap", "-n", "1", "-k", "2", "ab",
                         "aabb"});
  CHECK(c1p == 1);
  CHECK(has_line(o1p, "RESULT false"));
  auto [c2, o2] = run({"ef", "--game", "sigma", "-k", "2", "ab", "ba"});
  CHECK(c2 == 1);
  CHECK(has_line(o2, "RESULT false"));
  auto [c3, o3] = run({"ef", "--game", "fo2", "-k", "1", "aab", "aba"});
  CHECK(c3 == 0);
  auto [c4, o4] = run({"ef", "--game", "fo2p", "-k", "1", "aab", "aba"});
  CHECK(c4 == 1);
}

TEST_CASE("reduce canonical and expand form a pipeline") {
  TempDir tmp;
  std::string l = tmp.file("l.dfa", serialize_dfa(corpus::contains_b()));
  std::string lp = tmp.file("lp.dfa", serialize_dfa(corpus::a_plus()));
  std::string dir = tmp.name("red");
  auto [code, out] = run({"reduce", l, lp, "--out", dir});
  REQUIRE(code == 0);
  CHECK(has_line(out, "OUT " + dir));
  CHECK(std::filesystem::exists(dir + "/ctx"));
  CHECK(std::filesystem::exists(dir + "/L.dfa"));
  CHECK(std::filesystem::exists(dir + "/Lp.dfa"));

  auto [ccode, cout_] = run({"canonical", l, lp, "abab"});
  REQUIRE(ccode == 0);
  REQUIRE(cout_.rfind("CANONICAL ", 0) == 0);
  std::string wfword = cout_.substr(10, cout_.find('\n') - 10);

  auto [ecode, eout] = run({"expand", dir, wfword, "-i", "2"});
  REQUIRE(ecode == 0);
  CHECK(eout.rfind("WORD ", 0) == 0);
  std::string word = eout.substr(5, eout.find('\n') - 5);
  CHECK(accepts(corpus::contains_b(), parse_word(word)));
}

TEST_CASE("algebra-verify runs the bundled instances") {
  auto [gcode, gout] = run({"algebra-verify", "gamma"});
  CHECK(gcode == 0);
  CHECK(has_line(gout, "RESULT pass"));
  auto [dcode, dout] = run({"algebra-verify", "delta"});
  CHECK(dcode == 0);
  CHECK(has_line(dout, "RESULT pass"));
}

TEST_CASE("selftest reports suites and honors the fault hook") {
  auto [code, out] = run({"selftest", "--max-len", "4", "--max-k", "1"});
  CHECK(code == 0);
  CHECK(has_line(out, "RESULT pass"));
  CHECK(out.find("SUITE wellformed-canonical-encoding PASS") !=
        std::string::npos);

  auto [fcode, fout] = run({"selftest", "--max-len", "4", "--max-k", "1",
                            "--inject-beta-fault"});
  CHECK(fcode == 1);
  CHECK(fout.find("SUITE wellformed-canonical-encoding FAIL") !=
        std::string::npos);
}

TEST_CASE("reports are deterministic") {
  TempDir tmp;
  std::string l = tmp.file("l.dfa", serialize_dfa(corpus::even_a()));
  std::string lp = tmp.file("lp.dfa", serialize_dfa(corpus::odd_a()));
  auto a = run({"separate", "--logic", "sigma1+", l, lp});
  auto b = run({"separate", "--logic", "sigma1+", l, lp});
  CHECK(a == b);
}
