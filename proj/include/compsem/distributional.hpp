#pragma once

// Vector space model of word meaning: relative co-occurrence frequencies
// against a fixed basis of context words.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "compsem/tensor.hpp"

namespace compsem {

// Lowercases and splits on maximal runs of non-alphanumeric characters.
// Bytes >= 0x80 count as word characters so UTF-8 letters stay in tokens.
std::vector<std::string> tokenize(std::string_view text);

struct Corpus {
  std::vector<std::vector<std::string>> documents;

  // Each blank-line separated block of `text` becomes one document; blocks
  // with no tokens are dropped.
  void add_text(std::string_view text);
  std::size_t token_count() const;
};

// Reads each file with Corpus::add_text. IoError on unreadable files.
Corpus read_corpus(const std::vector<std::string>& paths);

struct BasisSpec {
  std::vector<std::string> basis_words;
  std::size_t window = 2;
};

// The k most frequent tokens outside `stop`, ties broken lexicographically.
// Throws ConfigError when fewer than k tokens are eligible.
BasisSpec build_basis(const Corpus& corpus, std::size_t k,
                      const std::set<std::string>& stop = {});

// Coordinate m: count of basis_words[m] occurrences within `window` tokens
// of an occurrence of `word` in the same document, divided by the number of
// occurrences of `word`. UnknownWordError when `word` never occurs.
Tensor meaning_vector(const Corpus& corpus, const std::string& word, const BasisSpec& basis);

class VectorSpaceModel {
 public:
  VectorSpaceModel() = default;
  VectorSpaceModel(BasisSpec basis, std::map<std::string, Tensor> vectors,
                   std::map<std::string, std::uint64_t> occurrences);

  // Meaning vectors for every token of the corpus.
  static VectorSpaceModel build(const Corpus& corpus, BasisSpec basis);

  const BasisSpec& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.basis_words.size(); }
  const std::map<std::string, Tensor>& vectors() const noexcept { return vectors_; }
  bool contains(const std::string& word) const { return vectors_.count(word) != 0; }
  // UnknownWordError when absent.
  const Tensor& vector(const std::string& word) const;
  std::uint64_t occurrences(const std::string& word) const;

  // "#basis w1 w2 ..." then "token count c1 c2 ..." per word, 17
  // significant digits.
  void write(std::ostream& out) const;
  static VectorSpaceModel read(std::istream& in, const std::string& source_name = "<stream>");
  void save(const std::string& path) const;
  static VectorSpaceModel load(const std::string& path);

 private:
  BasisSpec basis_;
  std::map<std::string, Tensor> vectors_;
  std::map<std::string, std::uint64_t> occurrences_;
};

// Cosine of the two words' meaning vectors.
double similarity(const VectorSpaceModel& model, const std::string& w1, const std::string& w2);

}  // namespace compsem
