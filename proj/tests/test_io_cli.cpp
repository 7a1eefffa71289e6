#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "axial/cli.hpp"
#include "axial/io.hpp"

using namespace testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "axial");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

AlgebraFile round_trip(const AlgebraFile& f) {
  std::stringstream s;
  write_algebra_file(s, f);
  return parse_algebra_file(s);
}

}  // namespace

TEST_CASE("algebra files") {
  std::istringstream in(R"(# two idempotents
field Q
basis e1 e2
e1*e1 = e1
e2*e2 = e2
e1*e2 = -e1 - e2
element a4 = -e1 - e2
axes X = e1, a4
law F values 1, -1
law F unit
law F cell -1 -1 = 1
cocycle th 1
th e1*e2 = 1
)");
  AlgebraFile f = parse_algebra_file(in);
  CatalogEntry b = entry("B");
  CHECK(f.algebra == b.algebra);
  CHECK(f.elements.at("a4") == b.element("a4"));
  CHECK(f.axes.at("X") == std::vector<std::string>{"e1", "a4"});
  CHECK(f.laws.at("F") == b.law("FB"));
  CHECK(f.cocycles.at("th") == *b.cocycle);

  std::istringstream bad("field Q\nbasis e1\ne1*e3 = e1\n");
  CHECK_THROWS(parse_algebra_file(bad));
  std::istringstream gauss("field Q(i)\nbasis x\nx*x = (1+i) x\n");
  AlgebraFile g = parse_algebra_file(gauss);
  CHECK(g.algebra.coeff(0, 0, 0) == Scalar(mpq_class(1), mpq_class(1)));
}

TEST_CASE("catalog entries survive a file round trip") {
  for (auto name : {"B", "Monster4", "JordanD", "J59"}) {
    AlgebraFile f = from_catalog(build_entry(name));
    AlgebraFile g = round_trip(f);
    CHECK(g.algebra == f.algebra);
    CHECK(g.elements == f.elements);
    CHECK(g.axes == f.axes);
    CHECK(g.laws == f.laws);
    CHECK(g.cocycles == f.cocycles);
  }
}

TEST_CASE("random algebras survive a file round trip") {
  Rng r(91);
  for (std::size_t k = 0; k < kInstances; ++k) {
    FieldTag f = k % 2 ? FieldTag::GaussianRationals : FieldTag::Rationals;
    std::size_t n = std::size_t(r.integer(1, 4));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    AlgebraBuilder b(f, labels);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (r.integer(0, 2) > 0) b.set(i, j, r.vector(n, f));
    AlgebraFile file;
    file.algebra = b.build();
    file.elements["x"] = r.vector(n, f);
    AlgebraFile back = round_trip(file);
    CHECK(back.algebra == file.algebra);
    CHECK(back.elements == file.elements);
    CHECK(parse_combination(format_combination(file.elements["x"], file.algebra), file.algebra) == file.elements["x"]);
  }
}

TEST_CASE("linear combinations") {
  CatalogEntry m = entry("Monster4");
  CHECK(parse_combination("am1 + 2 a0 - a1 - 2 a2", m.algebra) == m.element("u"));
  CHECK(parse_combination("1/2 u", m.algebra, m.elements) == scale(m.element("u"), q(1, 2)));
  CHECK_THROWS(parse_combination("3 zz", m.algebra));
}

TEST_CASE("command line") {
  Run c = run({"check-axial", "--catalog", "B", "--axes", "X12", "--law", "FB"});
  CHECK(c.code == 0);
  Run q0 = run({"cocycles", "--catalog", "S", "--param", "n=4", "--axes", "standard", "--law", "J12", "--json"});
  REQUIRE(q0.code == 0);
  auto doc = nlohmann::json::parse(q0.out);
  CHECK(doc["cocycle_space"]["quotient_dim"] == 0);
  CHECK(run({"radical", "--catalog", "F", "--axes", "X12"}).code == 1);
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"check-axial", "--catalog", "nothing", "--axes", "X", "--law", "F"}).code == 2);
  CHECK(run({"check-axial", "--catalog", "A", "--axes", "X1a3", "--law", "FA"}).code == 0);

  Run mi = run({"miyamoto", "--catalog", "I", "--axes", "Xab", "--law", "FI", "--cap", "20", "--json"});
  CHECK(mi.code == 0);
  CHECK(nlohmann::json::parse(mi.out)["axis_closure"]["completed"] == false);

  Run t3 = run({"reproduce", "table3"});
  for (auto row : {"B_theta", "C(alpha=3)_theta", "H(gamma=3)_theta"}) CHECK(t3.out.find(row) != std::string::npos);
  CHECK(t3.out.find("PASS table3: B_theta X12 induced law = GB") != std::string::npos);
}

TEST_CASE("files through the command line") {
  auto path = std::filesystem::temp_directory_path() / "axial_test_bt.alg";
  Run e = run({"extend", "--catalog", "B", "--axes", "X12", "--law", "FB", "--output", path.string()});
  CHECK(e.code == 0);
  AlgebraFile f = read_algebra_file(path.string());
  CHECK(f.algebra.dim() == 3);
  Run d = run({"decompose", "--file", path.string(), "--axes", f.axes.begin()->first, "--json"});
  CHECK(d.code == 0);
  std::filesystem::remove(path);
  CHECK(run({"check-axial", "--file", "/nonexistent/file.alg", "--axes", "X", "--law", "F"}).code == 2);
}

TEST_CASE("json output is deterministic") {
  std::vector<std::vector<std::string>> cmds = {
      {"spectrum", "--catalog", "Monster4", "--element", "a0", "--json"},
      {"check-axial", "--catalog", "H", "--axes", "X12", "--law", "FH", "--json"},
      {"cocycles", "--catalog", "Monster4", "--axes", "X01", "--law", "M", "--json"},
      {"miyamoto", "--catalog", "B", "--axes", "X12", "--law", "FB", "--json"},
      {"catalog", "JordanC", "--json"}};
  for (const auto& c : cmds) {
    Run a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out).is_object());
  }
}
