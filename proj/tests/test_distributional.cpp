#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "compsem/distributional.hpp"
#include "compsem/error.hpp"

using namespace compsem;

namespace {

Corpus corpus_of(std::vector<std::vector<std::string>> docs) { return Corpus{std::move(docs)}; }

std::string model_text(const VectorSpaceModel& m) {
  std::ostringstream out;
  m.write(out);
  return out.str();
}

std::vector<double> values(const Tensor& t) { return {t.data().begin(), t.data().end()}; }

}  // namespace

TEST_CASE("tokenize") {
  CHECK(tokenize("Alice hates Bob.") == std::vector<std::string>{"alice", "hates", "bob"});
  CHECK(tokenize("don't") == std::vector<std::string>{"don", "t"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("  --  ").empty());
  CHECK(tokenize("R2-D2, C3PO") == std::vector<std::string>{"r2", "d2", "c3po"});
  CHECK(tokenize("Caf\xc3\xa9 ok") == std::vector<std::string>{"caf\xc3\xa9", "ok"});
}

TEST_CASE("corpus text splits documents on blank lines") {
  Corpus c;
  c.add_text("Alice hates Bob.\nBob hates Alice.\n\n  \nCarol sleeps\n");
  REQUIRE(c.documents.size() == 2);
  CHECK(c.documents[0].size() == 6);
  CHECK(c.documents[1] == std::vector<std::string>{"carol", "sleeps"});
  c.add_text("");
  CHECK(c.documents.size() == 2);
  CHECK(c.token_count() == 8);
  CHECK_THROWS_AS(read_corpus({"/nonexistent/corpus.txt"}), IoError);
}

TEST_CASE("build_basis") {
  CHECK(build_basis(corpus_of({{"a", "b", "a"}}), 1).basis_words == std::vector<std::string>{"a"});
  const BasisSpec two = build_basis(corpus_of({{"a", "b"}, {"b", "c"}}), 2);
  CHECK(two.basis_words == std::vector<std::string>{"b", "a"});
  CHECK(two.window == 2);
  CHECK_THROWS_WITH_AS(build_basis(corpus_of({{"a", "b", "c"}}), 5), doctest::Contains("short by 2"),
                       ConfigError);
  CHECK(build_basis(corpus_of({{"a", "a", "b", "c"}}), 1, {"a"}).basis_words ==
        std::vector<std::string>{"b"});
}

TEST_CASE("meaning_vector counts co-occurrence within the window") {
  const Corpus c = corpus_of({{"alice", "hates", "bob"}});
  CHECK(values(meaning_vector(c, "alice", {{"hates", "bob"}, 2})) == std::vector<double>{1.0, 1.0});
  CHECK(values(meaning_vector(c, "alice", {{"alice"}, 2})) == std::vector<double>{0.0});
  const Corpus far = corpus_of({{"alice", "x", "x", "x", "bob"}});
  CHECK(values(meaning_vector(far, "alice", {{"bob"}, 2})) == std::vector<double>{0.0});
  CHECK(values(meaning_vector(far, "alice", {{"bob"}, 4})) == std::vector<double>{1.0});
  CHECK_THROWS_WITH_AS(meaning_vector(c, "carol", {{"bob"}, 2}), doctest::Contains("carol"),
                       UnknownWordError);
}

TEST_CASE("relative frequency divides by occurrences and never crosses documents") {
  // alice twice; x appears near the first occurrence twice, never near the
  // second; the document boundary hides the y.
  const Corpus c = corpus_of({{"x", "alice", "x"}, {"alice", "z"}, {"y"}});
  CHECK(values(meaning_vector(c, "alice", {{"x", "y", "z"}, 2})) ==
        std::vector<double>{1.0, 0.0, 0.5});
}

TEST_CASE("model build agrees with meaning_vector for every word") {
  const Corpus c = corpus_of({{"the", "cat", "sat", "on", "the", "mat"},
                              {"the", "dog", "sat", "on", "the", "cat"},
                              {"a", "cat", "and", "a", "dog"}});
  const BasisSpec basis = build_basis(c, 3);
  const VectorSpaceModel m = VectorSpaceModel::build(c, basis);
  for (const auto& [word, v] : m.vectors()) {
    CHECK(v == meaning_vector(c, word, basis));
    for (double x : v.data()) {
      CHECK(x >= 0.0);
      CHECK(x <= 2.0 * basis.window);
    }
  }
  CHECK(m.occurrences("the") == 4);
  CHECK_THROWS_AS(m.vector("zebra"), UnknownWordError);
}

TEST_CASE("models are invariant under document order") {
  std::vector<std::vector<std::string>> docs{{"a", "b", "c", "a"}, {"b", "b", "d"},
                                             {"c", "a", "d", "d", "b"}, {"e"}};
  const BasisSpec basis{{"a", "b", "d"}, 1};
  const std::string reference = model_text(VectorSpaceModel::build(corpus_of(docs), basis));
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(docs.begin(), docs.end(), rng);
    CHECK(model_text(VectorSpaceModel::build(corpus_of(docs), basis)) == reference);
  }
}

TEST_CASE("similarity") {
  // w1 and w2 occur in copies of the same sentences
  const Corpus c = corpus_of({{"red", "w1", "blue"}, {"red", "w2", "blue"}, {"green", "other"}});
  const VectorSpaceModel m = VectorSpaceModel::build(c, {{"red", "blue", "green"}, 2});
  CHECK(std::abs(similarity(m, "w1", "w2") - 1.0) < 1e-12);
  CHECK(similarity(m, "w1", "w1") == doctest::Approx(1.0));
  CHECK(similarity(m, "w1", "other") == 0.0);
  CHECK_THROWS_AS(similarity(m, "w1", "nope"), UnknownWordError);
  CHECK_THROWS_AS(similarity(m, "w1", "green"), DegenerateInputError);
}

TEST_CASE("model file format") {
  const Corpus c = corpus_of({{"x", "alice", "x", "y"}, {"alice", "y"}, {"y", "x", "x"}});
  const VectorSpaceModel m = VectorSpaceModel::build(c, {{"x", "y"}, 1});
  const std::string text = model_text(m);
  CHECK(text.rfind("#basis x y\n", 0) == 0);
  CHECK(text.find("\nalice 2 1 0.5\n") != std::string::npos);

  std::istringstream in(text);
  const VectorSpaceModel back = VectorSpaceModel::read(in);
  CHECK(back.basis().basis_words == m.basis().basis_words);
  CHECK(back.vectors() == m.vectors());
  CHECK(model_text(back) == text);

  std::istringstream no_header("alice 1 0.5\n");
  CHECK_THROWS_AS(VectorSpaceModel::read(no_header), ParseError);
  std::istringstream short_row("#basis a b\nalice 1 0.5\n");
  CHECK_THROWS_WITH_AS(VectorSpaceModel::read(short_row), doctest::Contains(":2:"), ParseError);
}
