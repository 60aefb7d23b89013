#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "compsem/cli.hpp"
#include "compsem/distributional.hpp"

using namespace compsem;

namespace {

const std::string kDemo = COMPSEM_DEMO_DIR;
const std::string kLexicon = kDemo + "/lexicon.tsv";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "compsem_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse prints the canonical diagram") {
  const Run r = run({"parse", "--lexicon", kLexicon, "Alice hates Bob"});
  CHECK(r.code == 0);
  CHECK(r.out.find("links: (0,1) (3,4)") != std::string::npos);
  CHECK(r.out.find("through: 2") != std::string::npos);
  CHECK(r.out.find("n  n^r  s  n^l  n\n\\__/    |  \\____/\n") != std::string::npos);

  const Run words = run({"parse", "--lexicon", kLexicon, "Alice", "hates", "Bob"});
  CHECK(words.out == r.out);
}

TEST_CASE("parse rejections and errors") {
  const Run partial = run({"parse", "--lexicon", kLexicon, "Alice hates"});
  CHECK(partial.code == 1);
  CHECK(partial.out == "no reduction to s\n");

  const Run unknown = run({"parse", "--lexicon", kLexicon, "Alice xyzzy Bob"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("xyzzy") != std::string::npos);

  CHECK(run({"parse", "Alice hates Bob"}).code == 2);  // no lexicon
  CHECK(run({"parse", "--lexicon", "/nonexistent.tsv", "Alice"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("parse json") {
  const Run r = run({"parse", "--json", "--lexicon", kLexicon, "alice does not like bob"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["reduces"] == true);
  CHECK(j["links"] == nlohmann::json::parse("[[0,1],[3,6],[4,5],[7,10],[8,9],[11,12]]"));
  CHECK(j["through"] == nlohmann::json::parse("[2]"));
  CHECK(j["types"][1] == "n^r s s^l n");
}

TEST_CASE("meaning of the demo sentences") {
  // hates[0, k, 1] from demo/hates.tns
  const Run text = run({"meaning", "--lexicon", kLexicon, "Alice hates Bob"});
  CHECK(text.code == 0);
  CHECK(text.out.find("vector: 0.9 0.1\n") != std::string::npos);

  // f^T alice with f = demo/dreams.mat, alice = e0
  const Run dreams = run({"meaning", "--json", "--lexicon", kLexicon, "Alice dreams"});
  REQUIRE(dreams.code == 0);
  const auto j = nlohmann::json::parse(dreams.out);
  CHECK(j["vector"] == nlohmann::json::parse("[0.25,0.75]"));

  const Run bad = run({"meaning", "--lexicon", kLexicon, "Alice hates"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("vector") == std::string::npos);
}

TEST_CASE("compare") {
  const Run same = run({"compare", "--lexicon", kLexicon, "Alice hates Bob", "Alice hates Bob"});
  CHECK(same.code == 0);
  CHECK(same.out == "cosine: 1\n");

  const Run swapped =
      run({"compare", "--json", "--lexicon", kLexicon, "Alice hates Bob", "Bob hates Alice"});
  REQUIRE(swapped.code == 0);
  CHECK(nlohmann::json::parse(swapped.out)["cosine"].get<double>() < 0.999);

  CHECK(run({"compare", "--lexicon", kLexicon, "Alice hates", "Alice hates Bob"}).code == 1);
  CHECK(run({"compare", "--lexicon", kLexicon, "Alice hates Bob"}).code == 2);
}

TEST_CASE("compare reports a zero meaning as degenerate") {
  const auto dir = scratch_dir();
  std::ofstream(dir / "zero.mat") << "2 2\n0 0\n0 0\n";
  std::ofstream(dir / "e0.tns") << "2\n1 0\n";
  std::ofstream(dir / "lex.tsv") << "x\tn\ttensor:e0.tns\nnull\tn^r s\tchoi:zero.mat\n"
                                    "dreams\tn^r s\tchoi:" + kDemo + "/dreams.mat\n";
  const Run r = run({"compare", "--lexicon", (dir / "lex.tsv").string(), "x null", "x dreams"});
  CHECK(r.code == 2);
  CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("space build") {
  const auto dir = scratch_dir();
  const std::string model = (dir / "model.vsm").string();
  const Run r = run({"space", "build", kDemo + "/corpus/doc1.txt", kDemo + "/corpus/doc2.txt",
                     kDemo + "/corpus/doc3.txt", "-k", "4", "-o", model});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("basis size: 4\n") != std::string::npos);
  const VectorSpaceModel m = VectorSpaceModel::load(model);
  CHECK(m.dimension() == 4);
  for (const auto& [word, v] : m.vectors()) CHECK(v.size() == 4);

  CHECK(run({"space", "build", kDemo + "/corpus/doc1.txt", "-k", "1000", "-o", model}).code == 2);
  std::ofstream(dir / "empty.txt") << "\n\n";
  CHECK(run({"space", "build", (dir / "empty.txt").string(), "-k", "1", "-o", model}).code == 2);
  CHECK(run({"space", "build", "/nonexistent.txt", "-k", "1", "-o", model}).code == 2);
}

TEST_CASE("demo snake") {
  const Run two = run({"demo", "snake", "--dim", "2"});
  CHECK(two.code == 0);
  CHECK(two.out == "dimension: 2\nmax deviation: 0\nPASS\n");
  CHECK(run({"demo", "snake", "-d", "1"}).code == 0);
  CHECK(run({"demo", "snake", "-d", "64"}).code == 0);
  CHECK(run({"demo", "snake", "-d", "65"}).code == 2);
  CHECK(run({"demo", "snake", "-d", "0"}).code == 2);
}
