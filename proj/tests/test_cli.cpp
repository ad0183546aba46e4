#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

#include "acm/cli.hpp"
#include "acm/error.hpp"
#include "acm/parse.hpp"

using namespace acm;
using namespace acm::cli;

namespace {

const std::string kData = ACM_DATA_DIR;

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "acmkit");
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Outcome on_examples(std::vector<std::string> args) {
  args.push_back("--input");
  args.push_back(kData + "/examples.acm");
  return invoke(std::move(args));
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("acmkit_test_" + name)).string();
}

BettiTable table(std::initializer_list<std::tuple<int, int, int>> entries) {
  BettiTable b;
  for (auto [i, a, n] : entries) b.add(i, a, n);
  return b;
}

const char* kTetDoc =
    "ring p=32003 vars=x,y,z,w\n"
    "ideal IX = x*y, x*z, x*w, y*z, y*w, z*w\n";

}  // namespace

TEST_CASE("parse examples") {
  auto doc = parse_document(kTetDoc);
  REQUIRE(doc.ring);
  CHECK(doc.ring->characteristic() == 32003);
  CHECK(doc.ring->nvars() == 4);
  CHECK(doc.ideal("IX").size() == 6);
  CHECK(doc.ideal("IX")[5] == parse_polynomial(doc.ring, "z*w"));

  auto p = parse_document("ring p=32003 vars=x,y,z,w\nfree P = -3,-3,-3\n");
  CHECK(p.free_modules[0].second == std::vector<int>{-3, -3, -3});
  CHECK(p.free_module("P") == FreeModule{{3, 3, 3}});
  CHECK(parse_twist_list("-3,-3,-3") == FreeModule{{3, 3, 3}});
  CHECK(parse_twist_list("2") == FreeModule{{-2}});

  auto comments = parse_document("# header\n\nring p=7 vars=a,b  # trailing\nform F = (a+b)^2 # square\n");
  CHECK(comments.form("F") == parse_polynomial(comments.ring, "a^2 + 2*a*b + b^2"));
  CHECK_THROWS_AS(comments.form("G"), DomainError);
  CHECK_THROWS_AS(comments.ideal("F"), DomainError);
}

TEST_CASE("parse errors carry positions") {
  auto message = [](const std::string& text) {
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  std::string bad = message("ring p=32003 vars=x,y,z,w\nideal bad = x + y^2\n");
  CHECK(bad.find("line 2, column 13") == 0);
  CHECK(bad.find("ideal bad generator 1 'x + y^2' is not homogeneous") != std::string::npos);

  std::string second = message("ring p=32003 vars=x,y\nideal J = x, y*(x - y^3)\n");
  CHECK(second.find("line 2, column 14") == 0);
  CHECK(second.find("generator 2") != std::string::npos);

  CHECK(message("ideal I = x\n").find("line 1, column 1: the ring must be declared first") == 0);
  CHECK(message("ring p=5 vars=x,y\nideal I = x\nfree I = 1\n").find("line 3, column 6: duplicate name 'I'") == 0);
  CHECK(message("ring p=5 vars=x,y\nfree P = 1,a\n").find("line 2, column 12: expected an integer") == 0);
  CHECK(message("ring p=5 vars=x,y\nideal I = x, 0\n").find("is zero") != std::string::npos);
  CHECK(message("ring p=5 vars=x,y\nmatrix M = x\n").find("unknown statement 'matrix'") != std::string::npos);
  CHECK(message("").find("missing ring declaration") != std::string::npos);
  CHECK(message("ring p=5 vars=x,y\nideal I = x +* x\n").find("line 2") == 0);

  try {
    parse_document("ring p=5 vars=x,y\nideal I = x +* x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() >= 18);
    CHECK(e.offset() < 35);
  }
  CHECK_THROWS_AS(parse_twist_list("-3,,1"), ParseError);
}

TEST_CASE("property: render then parse is the identity") {
  std::mt19937_64 rng(41);
  const std::vector<std::uint32_t> primes{3, 5, 101, 32003};
  const std::vector<std::string> pool{"x", "y", "z", "w", "t", "u1", "v_2"};
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> nv(2, 6);
    std::vector<std::string> vars(pool.begin(), pool.begin() + nv(rng));
    auto r = PolyRing::make(primes[static_cast<std::size_t>(trial) % primes.size()], vars);
    InputDocument doc;
    doc.ring = r;
    int name = 0;
    std::uniform_int_distribution<int> count(0, 3);
    auto nonzero_form = [&] {
      std::uniform_int_distribution<int> deg(0, 3);
      std::uniform_int_distribution<int> terms(1, 4);
      for (;;) {
        auto f = testing::random_form(r, rng, deg(rng), terms(rng));
        if (!f.is_zero()) return f;
      }
    };
    for (int i = count(rng); i > 0; --i) {
      std::vector<Polynomial> gens;
      for (int g = 1 + count(rng); g > 0; --g) gens.push_back(nonzero_form());
      doc.ideals.emplace_back("I" + std::to_string(name++), std::move(gens));
    }
    for (int i = count(rng); i > 0; --i) {
      std::uniform_int_distribution<int> twist(-9, 9);
      std::vector<int> ts;
      for (int g = 1 + count(rng); g > 0; --g) ts.push_back(twist(rng));
      doc.free_modules.emplace_back("P" + std::to_string(name++), std::move(ts));
    }
    for (int i = count(rng); i > 0; --i) doc.forms.emplace_back("f" + std::to_string(name++), nonzero_form());
    std::string text = render_document(doc);
    auto back = parse_document(text);
    CHECK(back == doc);
    CHECK(render_document(back) == text);
  }
}

TEST_CASE("the examples file round-trips") {
  auto doc = parse_document(slurp(kData + "/examples.acm"));
  CHECK(parse_document(render_document(doc)) == doc);
  CHECK(doc.ideals.size() == 7);
  CHECK(doc.free_module("P3") == FreeModule{{3, 3, 3}});
}

TEST_CASE("JSON reports round-trip") {
  RunReport r;
  r.command = "construct";
  r.seed = 18446744073709551615ull;
  r.k = -1;
  r.betti["ID"] = table({{1, 3, 2}, {2, 5, 1}});
  r.betti["P"] = table({{1, 3, 3}});
  r.codim = 2;
  r.acm = true;
  r.contains_x = true;
  r.cm_type = {{"D", 1}, {"X", 1}};
  r.gorenstein = true;
  r.checks = {{"h1", true}, {"dual_sequence", false}};
  r.details = {{"ideal_D", "(x, y)"}, {"note", "quote \" and \\ backslash"}};
  r.timings_ms = {{"total", 1.5}};
  r.pass = true;
  CHECK(report_from_json(report_to_json(r)) == r);

  RunReport bare;
  bare.command = "resolve";
  bare.error = "retries exhausted: torsion cokernel";
  CHECK(report_from_json(report_to_json(bare)) == bare);

  auto no_time = report_from_json(report_to_json(r, false));
  CHECK(no_time.timings_ms.empty());
  CHECK_THROWS_AS(report_from_json("{not json"), ParseError);
}

TEST_CASE("golden Betti texts") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"IXtet", "tetrahedron.betti"},
      {"IX5", "five_points.betti"},
      {"IX4", "four_planar_points.betti"},
      {"IC", "three_lines.betti"},
  };
  for (const auto& [ideal, file] : cases) {
    CAPTURE(ideal);
    auto o = on_examples({"resolve", "--ideal", ideal});
    CHECK(o.code == kExitPass);
    CHECK(o.out == slurp(kData + "/golden/" + file));
  }
  // generators in degree 2, then 8 and 3 linear syzygies
  CHECK(slurp(kData + "/golden/tetrahedron.betti") ==
        "       1 2 3\n"
        "total: 6 8 3\n"
        "    1: 6 8 3\n");
}

TEST_CASE("golden construct report") {
  std::string path = temp_path("construct.json");
  auto o = on_examples({"--no-timings", "construct", "--ideal", "IX5", "--syzygy", "1", "--p-free", "-3,-3,-3",
                        "--seed", "1", "--json", path});
  CHECK(o.code == kExitPass);
  std::string got = slurp(path);
  CHECK(got == slurp(kData + "/golden/five_points_construct.json"));
  auto rep = report_from_json(got);
  CHECK(rep.k == -1);
  CHECK(rep.betti.at("ID") == table({{1, 3, 2}, {2, 5, 1}}));
  CHECK(rep.acm == true);
  CHECK(rep.contains_x == true);
  CHECK(rep.seed == 1u);
  std::filesystem::remove(path);
}

TEST_CASE("hilbert command") {
  auto o = on_examples({"hilbert", "--ideal", "IXtet"});
  CHECK(o.code == kExitPass);
  CHECK(o.out.find("dim 0\n") != std::string::npos);
  CHECK(o.out.find("codim 3\n") != std::string::npos);
  CHECK(o.out.find("degree 4\n") != std::string::npos);
}

TEST_CASE("JSON output is byte-stable without timings") {
  const std::vector<std::vector<std::string>> commands{
      {"construct", "--ideal", "IX4", "--syzygy", "1", "--p-free", "P1", "--seed", "7"},
      {"serre", "--ideal", "ICI", "--c", "1", "--seed", "3"},
      {"resolve", "--ideal", "IC"},
  };
  for (const auto& cmd : commands) {
    std::string a = temp_path("stable_a.json");
    std::string b = temp_path("stable_b.json");
    auto with = [&](const std::string& path) {
      auto args = cmd;
      args.insert(args.begin(), "--no-timings");
      args.push_back("--json");
      args.push_back(path);
      return on_examples(args);
    };
    auto oa = with(a);
    auto ob = with(b);
    CHECK(oa.code == ob.code);
    CHECK(oa.out == ob.out);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).find("timings_ms") == std::string::npos);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }
}

TEST_CASE("property: exit-code contract on the examples corpus") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  std::vector<Case> cases{
      {{"resolve", "--ideal", "IXtet"}, kExitPass},
      {{"resolve", "--ideal", "IPT", "--max-len", "1"}, kExitPass},
      {{"hilbert", "--ideal", "IC"}, kExitPass},
      {{"construct", "--ideal", "IX4", "--syzygy", "1", "--p-free", "P5", "--seed", "2"}, kExitPass},
      {{"construct-n", "--n-ideal-sum", "IY", "--p-free", "-1", "--seed", "0"}, kExitPass},
      {{"serre", "--ideal", "ICI", "--c", "0", "--seed", "1"}, kExitPass},
      {{"twist", "--ideal", "ICI", "--c", "0", "--form", "H", "--seed", "1"}, kExitPass},
      {{"twist", "--ideal", "ICI", "--c", "0", "--form", "ONE", "--seed", "1"}, kExitPass},
      {{"koszul", "--ideal", "IY", "--forms", "F"}, kExitPass},
      {{"certify", "--ideal", "IC", "--x", "IXtet"}, kExitFailedCertificate},
      {{"serre", "--ideal", "ICI", "--c", "-5", "--seed", "1"}, kExitFailedCertificate},
      {{"construct", "--ideal", "IX5", "--syzygy", "1", "--p-free", "-3,-3", "--seed", "1"},
       kExitFailedCertificate},
      {{"construct-n", "--n-ideal-sum", "IY", "--p-free", "0", "--seed", "0"}, kExitFailedCertificate},
      {{"resolve", "--ideal", "NOPE"}, kExitError},
      {{"construct", "--ideal", "IX5", "--syzygy", "1", "--p-free", "P3"}, kExitError},
      {{"twist", "--ideal", "ICI", "--c", "0", "--form", "NOPE", "--seed", "1"}, kExitError},
      {{"koszul", "--ideal", "IY", "--forms", "F,H,ONE"}, kExitError},
      {{"frobnicate"}, kExitError},
      {{"construct", "--ideal", "IX5", "--syzygy", "1", "--p-free", "x", "--seed", "1"}, kExitError},
  };
  // seeds sweep the randomized commands up to 100+ invocations
  for (std::uint64_t s = 0; s < 30; ++s) {
    cases.push_back({{"construct", "--ideal", "IX5", "--syzygy", "1", "--p-free", "P3", "--seed", std::to_string(s)},
                     kExitPass});
    cases.push_back({{"serre", "--ideal", "ICI", "--c", "1", "--seed", std::to_string(s)}, kExitPass});
    cases.push_back({{"twist", "--ideal", "ICI", "--c", "0", "--form", "F", "--seed", std::to_string(s)},
                     kExitPass});
  }
  CHECK(cases.size() >= 100);
  for (const auto& c : cases) {
    std::string shown;
    for (const auto& a : c.args) shown += a + " ";
    CAPTURE(shown);
    auto o = on_examples(c.args);
    CHECK(o.code == c.code);
    if (c.code == kExitError) CHECK(o.err.find("error") != std::string::npos);
    if (c.code == kExitPass) CHECK(o.err.empty());
  }
}

TEST_CASE("missing input file is an error") {
  auto o = invoke({"resolve", "--ideal", "IX", "--input", temp_path("does_not_exist.acm")});
  CHECK(o.code == kExitError);
  CHECK(o.err.find("cannot read input file") != std::string::npos);
}

TEST_CASE("standard input is the default source") {
  std::istringstream in(kTetDoc);
  std::ostringstream out;
  std::ostringstream err;
  int code = run({"acmkit", "resolve", "--ideal", "IX"}, in, out, err);
  CHECK(code == kExitPass);
  CHECK(out.str() == slurp(kData + "/golden/tetrahedron.betti"));
}
