#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "json.hpp"
#include "matdecide/cli.hpp"

using namespace matdecide;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string const kA = R"([[1,2],[0,1]])";
std::string const kB = R"([[1,0],[2,1]])";

// 4x4 block with S in the top corner and a shear below
std::string const kS4 =
    R"([[0,-1,0,0],[1,0,0,0],[0,0,1,0],[0,0,0,1]])";
std::string const kShear4 =
    R"([[1,0,0,0],[0,1,0,0],[0,0,1,1],[0,0,0,1]])";

std::string automaton_a_then_ainv() {
  return R"J({"states":["p","q","r"],"alphabet":["x"],"label_domain":"matrix(2)",
    "initial":"p","accepting":["r"],
    "edges":[{"from":"p","input":"x","label":[[1,2],[0,1]],"to":"q"},
             {"from":"q","input":"x","label":[[1,-2],[0,1]],"to":"r"}]})J";
}

}  // namespace

TEST_CASE("factor", "[cli]") {
  auto r = run({"factor", kA});
  CHECK(r.code == cli::kYes);
  CHECK(r.out == "a\n");
  CHECK(run({"factor", R"([[1,1],[0,1]])"}).code == cli::kNo);
  CHECK(run({"factor", R"([["5","2"],["2","1"]])"}).out == "a b\n");
}

TEST_CASE("cosets", "[cli]") {
  auto r = run({"cosets"});
  CHECK(r.code == cli::kYes);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 24);
  auto s = run({"--format", "structured", "cosets"});
  auto j = nlohmann::json::parse(s.out);
  CHECK(j["size"] == 24);
}

TEST_CASE("member and identity", "[cli]") {
  CHECK(run({"member", "--target", kB, "--gens", "[" + kA + "]"}).code ==
        cli::kNo);
  auto yes = run({"member", "--target", "[[5,2],[2,1]]", "--gens",
                  "[" + kA + "," + kB + "]", "--checked"});
  CHECK(yes.code == cli::kYes);
  CHECK(yes.out.find("witness: 1 2") != std::string::npos);

  auto id = run({"identity", "--gens", "[" + kA + ",[[1,-2],[0,1]]]"});
  CHECK(id.code == cli::kYes);
  CHECK(id.out.find("witness: 1 2") != std::string::npos);
  CHECK(run({"identity", "--gens", "[" + kA + "]"}).code == cli::kNo);

  // bounded mode never says no
  CHECK(run({"identity", "--gens", "[" + kA + "]", "--bounded", "4"}).code ==
        cli::kUnknown);
}

TEST_CASE("4x4 inputs never get a definitive no", "[cli][honesty]") {
  auto id = run({"identity", "--gens", "[" + kShear4 + "]"});
  CHECK(id.code == cli::kUnknown);
  CHECK(id.out.find("unknown") != std::string::npos);

  auto s4 = run({"identity", "--gens", "[" + kS4 + "]"});
  CHECK(s4.code == cli::kYes);
  CHECK(s4.out.find("witness: 1 1 1 1") != std::string::npos);

  auto mem = run({"member", "--target", kS4, "--gens", "[" + kShear4 + "]",
                  "--bounded", "6"});
  CHECK(mem.code == cli::kUnknown);

  std::string aut = R"J({"states":["p"],"alphabet":["x"],
    "label_domain":"matrix(4)","initial":"p","accepting":["p"],
    "edges":[{"from":"p","input":"x","label":)J" + kShear4 + R"(,"to":"p"}]})";
  // the empty string is accepted: nonempty with witness ε
  auto e = run({"empty", aut});
  CHECK(e.code == cli::kYes);
  std::string never = R"J({"states":["p","q"],"alphabet":["x"],
    "label_domain":"matrix(4)","initial":"p","accepting":["q"],
    "edges":[{"from":"p","input":"x","label":)J" + kShear4 + R"(,"to":"q"},
             {"from":"q","input":"x","label":)" + kShear4 + R"(,"to":"q"}]})";
  auto u = run({"empty", never, "--bounded", "5"});
  CHECK(u.code == cli::kUnknown);
  CHECK(u.code != cli::kNo);
}

TEST_CASE("empty", "[cli]") {
  auto r = run({"empty", automaton_a_then_ainv(), "--checked"});
  CHECK(r.code == cli::kYes);
  CHECK(r.out == "NONEMPTY\nwitness: xx\n");

  std::string words = R"J({"states":["p","q"],"alphabet":["x"],
    "label_domain":"word(2)","initial":"p","accepting":["q"],
    "edges":[{"from":"p","input":null,"label":"a","to":"q"},
             {"from":"q","input":"x","label":"b","to":"q"}]})J";
  CHECK(run({"empty", words}).code == cli::kNo);
}

TEST_CASE("convert round-trips", "[cli]") {
  auto once = run({"convert", automaton_a_then_ainv()});
  REQUIRE(once.code == cli::kYes);
  auto twice = run({"convert", once.out});
  CHECK(twice.out == once.out);

  auto f = run({"convert", automaton_a_then_ainv(), "--free"});
  REQUIRE(f.code == cli::kYes);
  auto j = nlohmann::json::parse(f.out);
  CHECK(j["states"].size() == 3 * 24);
  CHECK(j["label_domain"] == "word(2)");
  CHECK(run({"convert", automaton_a_then_ainv(), "--free", "--pda"}).code ==
        cli::kYes);
}

TEST_CASE("output is deterministic", "[cli]") {
  std::vector<std::string> args{"--format", "structured", "member", "--target",
                                "[[5,2],[2,1]]", "--gens",
                                "[" + kA + "," + kB + "]"};
  CHECK(run(args).out == run(args).out);
  auto j = nlohmann::json::parse(run(args).out);
  CHECK(j["result"] == "yes");
}

TEST_CASE("search", "[cli]") {
  auto r = run({"search", "--target", R"([[5,2],[2,1]])", "--gens",
                "[" + kA + "," + kB + "]", "--max-len", "3"});
  CHECK(r.code == cli::kYes);
  CHECK(r.out.find("witness: 1 2") != std::string::npos);
  auto g = run({"search", "--target", R"([[1,-2],[0,1]])", "--gens",
                "[" + kA + "]", "--group"});
  CHECK(g.code == cli::kYes);
  CHECK(g.out.find("witness: -1") != std::string::npos);
  CHECK(run({"search", "--target", R"([[1,-2],[0,1]])", "--gens",
             "[" + kA + "]", "--max-len", "4"})
            .code == cli::kUnknown);
}

TEST_CASE("error exit codes", "[cli]") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"member", "--target", kA}).code == cli::kUsage);
  CHECK(run({"--format", "xml", "cosets"}).code == cli::kUsage);

  auto bad = run({"factor", "[[1,2],[0"});
  CHECK(bad.code == cli::kDataErr);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"factor", "[[1,2],[0]]"}).code == cli::kDataErr);
  CHECK(run({"factor", R"([["x",2],[0,1]])"}).code == cli::kDataErr);
  CHECK(run({"factor", "/nonexistent/file.json"}).code == cli::kDataErr);
  CHECK(run({"member", "--target", kA, "--gens", "[]"}).code ==
        cli::kDataErr);
  CHECK(run({"member", "--target", kA, "--gens", "[" + kS4 + "]"}).code ==
        cli::kDataErr);
  CHECK(run({"empty", R"({"states":["p"]})"}).code == cli::kDataErr);
}
