#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eqhom/cli.hpp"
#include "eqhom/errors.hpp"
#include "eqhom/io.hpp"
#include "support/fixtures.hpp"

using namespace eqhom;

namespace {

const std::string dir = EQHOM_FIXTURE_DIR;

std::string fx(const std::string& name) { return dir + "/" + name; }

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "eqhom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

const std::vector<std::vector<std::string>>& commands() {
  static const std::vector<std::vector<std::string>> cmds{
      {"orbit-cat", "--group", fx("s3.json")},
      {"fixed-points", "--group", fx("c2.json"), "--sset", fx("wedge.json")},
      {"fixed-points", "--group", fx("c2.json"), "--sset", fx("swap_set.json")},
      {"homology", "--group", fx("c2.json"), "--sset", fx("wedge.json")},
      {"homology", "--group", fx("c2.json"), "--chain", fx("free_cell_chain.json"), "--ring", "Q"},
      {"cofib-check", "--group", fx("c2.json"), "--map", fx("incl.json"), "--family", "e"},
      {"cells", "--group", fx("c2.json"), "--map", fx("apex_into_wedge.json")},
      {"elmendorf", "--group", fx("c2.json"), "--sset", fx("wedge.json")},
      {"elmendorf", "--group", fx("c2.json"), "--chain", fx("free_cell_chain.json")},
      {"whitehead", "--group", fx("c2.json"), "--map", fx("vertex_into_delta1.json")},
      {"whitehead", "--group", fx("c2.json"), "--map", fx("collapse.json")},
      {"census", "--group", fx("c2.json")},
  };
  return cmds;
}

Matrix matrix_from(const io::Json& j, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = Rational(j[i][c].get<long>());
  return m;
}

}  // namespace

TEST_CASE("documented command examples", "[cli]") {
  Run census = run({"census", "--group", fx("c2.json"), "--family", "all"});
  CHECK(census.status == 0);
  CHECK(census.out.rfind("3 diagrams vs 2 G-objects\n", 0) == 0);

  Run h = run({"homology", "--sset", fx("boundary2.json"), "--ring", "Z"});
  CHECK(h.status == 0);
  CHECK(h.out.find("invariants:   H_0 = Z, H_1 = Z\n") != std::string::npos);
  CHECK(h.out.find("fixed points: H_0 = Z, H_1 = Z\n") != std::string::npos);

  Run c = run({"cofib-check", "--group", fx("c2.json"), "--map", fx("incl.json"), "--family", "e"});
  CHECK(c.status == 0);
  CHECK(c.out.rfind("cofibration: yes\n", 0) == 0);
  Run cf = run({"cofib-check", "--group", fx("c2.json"), "--map", fx("incl.json"), "--family", fx("family_e.json")});
  CHECK(cf.out == c.out);
}

TEST_CASE("exit statuses", "[cli]") {
  Run no = run({"cofib-check", "--group", fx("c2.json"), "--map", fx("incl.json"), "--family", "G"});
  CHECK(no.status == 1);
  CHECK(no.out.rfind("cofibration: no\n", 0) == 0);
  CHECK(no.out.find("stabilizer {0}") != std::string::npos);

  Run ok = run({"whitehead", "--group", fx("c2.json"), "--map", fx("vertex_into_delta1.json")});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("g_0 = [[1,1]]") != std::string::npos);
  Run fail = run({"whitehead", "--group", fx("c2.json"), "--map", fx("collapse.json")});
  CHECK(fail.status == 1);
  CHECK(fail.out.find("hypothesis (b) fixed points: fails at {0}") != std::string::npos);

  Run el = run({"elmendorf", "--group", fx("c2.json"), "--chain", fx("free_cell_chain.json")});
  CHECK(el.status == 1);
  CHECK(el.out.find("at {0,1}: unit iso no, quasi-iso no (H_0 = 0 -> H_0 = Z)") != std::string::npos);
  CHECK(run({"elmendorf", "--group", fx("c2.json"), "--sset", fx("wedge.json")}).status == 0);
}

TEST_CASE("input errors name the first invalid field", "[cli]") {
  struct Case {
    std::vector<std::string> args;
    std::string needle;
  };
  const std::vector<Case> cases{
      {{"census", "--group", fx("bad_group.json")}, "group.mult"},
      {{"homology", "--sset", fx("bad_sset.json")}, "sset.faces.e[1][0]"},
      {{"homology", "--chain", fx("bad_chain.json")}, "chain.d.1[0][0]"},
      {{"homology", "--sset", fx("missing.json")}, "cannot open"},
      {{"homology", "--group", fx("c2.json")}, "--sset"},
      {{"census", "--ring", "Fp:4"}, "ring"},
      {{"census", "--format", "xml"}, "xml"},
      {{"census", "--bogus"}, "--bogus"},
      {{"frobnicate"}, ""},
      {{"cofib-check", "--group", fx("c2.json"), "--map", fx("incl.json"), "--chain", fx("free_cell_chain.json")}, "--chain"},
  };
  for (const auto& c : cases) {
    Run r = run(c.args);
    INFO(c.args[0] << " " << r.err);
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find(c.needle) != std::string::npos);
  }
}

TEST_CASE("output is byte-identical across runs", "[cli]") {
  for (const auto& cmd : commands())
    for (const char* format : {"text", "json"}) {
      auto args = cmd;
      args.insert(args.end(), {"--format", format});
      Run a = run(args), b = run(args);
      INFO(cmd[0] << " " << format);
      CHECK(a.status == b.status);
      CHECK(a.out == b.out);
      CHECK(!a.out.empty());
    }
}

TEST_CASE("json reports round-trip", "[cli]") {
  for (const auto& cmd : commands()) {
    auto args = cmd;
    args.insert(args.end(), {"--format", "json"});
    Run r = run(args);
    INFO(cmd[0]);
    auto j = io::OrderedJson::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
  }
  auto wh = io::Json::parse(run({"whitehead", "--group", fx("c2.json"), "--map", fx("vertex_into_delta1.json"), "--format", "json"}).out);
  for (const char* key : {"isotropy", "hyp_a", "hyp_b", "certificate"}) CHECK(wh.contains(key));
  CHECK(wh["hyp_b"]["{0,1}"] == true);
  auto el = io::Json::parse(run({"elmendorf", "--group", fx("c2.json"), "--sset", fx("wedge.json"), "--format", "json"}).out);
  for (const char* key : {"unit_iso", "counit_iso", "per_object"}) CHECK(el.contains(key));
  auto oc = io::Json::parse(run({"orbit-cat", "--group", fx("c2.json"), "--format", "json"}).out);
  CHECK(oc["hom"]["{0},{0}"] == io::Json::array({0, 1}));
  auto none = io::Json::parse(run({"whitehead", "--group", fx("c2.json"), "--map", fx("collapse.json"), "--format", "json"}).out);
  CHECK(none["certificate"].is_null());
}

TEST_CASE("the certificate in a json report verifies", "[cli]") {
  Group g = io::group_from_json(io::read_json_file(fx("c2.json")));
  auto m = io::map_from_json(io::read_json_file(fx("vertex_into_delta1.json")), g, dir);
  auto j = io::Json::parse(run({"whitehead", "--group", fx("c2.json"), "--map", fx("vertex_into_delta1.json"), "--format", "json"}).out);
  const Ring Z = Ring::integers();
  EqChainComplex c = normalized_chains(m.source.object, Z), d = normalized_chains(m.target.object, Z);
  ChainMap f = induced_map(m.map, Z);
  auto degrees = [&](const io::Json& part, const ChainComplex& from, const ChainComplex& to, int shift) {
    std::vector<Matrix> out;
    for (std::size_t n = 0; n < part.size(); ++n) {
      int k = static_cast<int>(n);
      out.push_back(matrix_from(part[std::to_string(n)], to.rank(k + shift), from.rank(k)));
    }
    return out;
  };
  Certificate cert{ChainMap(d.complex(), c.complex(), degrees(j["certificate"]["g"], d.complex(), c.complex(), 0)),
                   ChainHomotopy{d.complex(), d.complex(), degrees(j["certificate"]["s"], d.complex(), d.complex(), 1)},
                   ChainHomotopy{c.complex(), c.complex(), degrees(j["certificate"]["t"], c.complex(), c.complex(), 1)}};
  CHECK(verify_certificate(cert, f, c, d));
}

TEST_CASE("--out writes the report", "[cli]") {
  auto path = std::filesystem::temp_directory_path() / "eqhom_cli_out.txt";
  Run to_stdout = run({"census", "--group", fx("c2.json")});
  Run to_file = run({"census", "--group", fx("c2.json"), "--out", path.string()});
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == to_stdout.out);
  std::filesystem::remove(path);
}

TEST_CASE("input files round-trip", "[io]") {
  for (const Group& g : fixtures::small_groups()) CHECK(io::group_from_json(io::to_json(g)) == g);
  Group s3 = io::group_from_json(io::read_json_file(fx("s3.json")));
  CHECK(s3.order() == 6);

  for (const auto& x : {fixtures::wedge(), fixtures::mixed_triangle(), fixtures::free_circle3(), GSSet::standard_simplex(3),
                        GSSet::empty(fixtures::c2())}) {
    auto loaded = io::gsset_from_json(io::to_json(x), x.group());
    CHECK(loaded.object == x);
    auto named = io::gsset_from_json(io::to_json(loaded.object, loaded.names), x.group());
    CHECK(named.object == x);
  }
  auto wedge = io::gsset_from_json(io::read_json_file(fx("wedge.json")), fixtures::c2());
  CHECK(wedge.object == fixtures::wedge());
  CHECK(wedge.names == std::vector<std::string>{"a", "b0", "b1", "e0", "e1"});

  auto c = normalized_chains(fixtures::swap_triangle(), Ring::prime_field(3));
  CHECK(io::chain_from_json(io::to_json(c), c.group()) == c);
  auto q = io::chain_from_json(io::Json::parse(R"({"ring": "Q", "ranks": [1, 1], "d": {"1": [["1/2"]]}})"), Group::trivial());
  CHECK(q.complex().d(1)(0, 0) == Rational(1, 2));
  CHECK(io::chain_from_json(io::to_json(q), Group::trivial()) == q);
  CHECK_THROWS_AS(io::chain_from_json(io::Json::parse(R"({"ring": "Z", "ranks": [1, 1], "d": {"1": [["1/2"]]}})"), Group::trivial()),
                  InputError);
}

TEST_CASE("loader validation", "[io]") {
  Group c2 = fixtures::c2();
  auto err = [&](const char* text) {
    try {
      io::gsset_from_json(io::Json::parse(text), c2);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(err(R"({"dims": 0, "simplices": {"0": ["a", "a"]}})").find("duplicate") != std::string::npos);
  CHECK(err(R"({"dims": 0, "simplices": {"0": ["a", "b"]}, "action": {"1": {"a": "b"}}})").find("sset.action.1.b") !=
        std::string::npos);
  CHECK(err(R"({"dims": 0, "simplices": {"0": ["a", "b"]}, "action": {"2": {}}})").find("sset.action.2") !=
        std::string::npos);
  CHECK(err(R"({"dims": 1, "simplices": {"0": ["a"], "1": ["e"]}, "faces": {"e": [["a", []]]}})").find("sset.faces.e") !=
        std::string::npos);
  CHECK(err(R"({"dims": 0, "simplices": {"3": ["a"]}})").find("sset.simplices.3") != std::string::npos);
  // An action that does not commute with faces is rejected by the model.
  CHECK(!err(R"({"dims": 1, "simplices": {"0": ["a", "b"], "1": ["e"]}, "faces": {"e": [["b", []], ["a", []]]},
                 "action": {"1": {"a": "b", "b": "a", "e": "e"}}})")
             .empty());
  CHECK_THROWS_AS(io::family_from_json(io::Json::parse("[[0, 2]]"), c2), InputError);
  CHECK(io::family_from_json(io::Json::parse("[[0], [0, 1]]"), c2).size() == 2);
  CHECK_THROWS_AS(io::gset_from_json(io::Json::parse(R"({"size": 2, "action": {"1": [0, 0]}})"), c2), InputError);
  CHECK_THROWS_AS(io::gset_from_json(io::Json::parse(R"({"size": 2})"), c2), InputError);
}
