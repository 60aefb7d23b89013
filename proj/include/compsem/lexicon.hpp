#pragma once

// Word -> (pregroup type, tensor) bindings.
//
// Lexicon file: UTF-8, one entry per line, three TAB-separated fields
//
//   word <TAB> type <TAB> source
//
// where source is one of
//   vector              meaning vector from the distributional model
//   tensor:<path>       tensor file
//   choi:<path>         rank-2 tensor file f, bound as choi_embed(f)
//   logical:does        wire-routing auxiliary
//   logical:not:<path>  wire routing with a sentence-space matrix
// Relative paths resolve against the lexicon file's directory. Lines
// starting with '#' are comments.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "compsem/distributional.hpp"
#include "compsem/pregroup.hpp"
#include "compsem/semantics.hpp"

namespace compsem {

namespace source {
struct Vector {};
struct TensorFile {
  std::string path;
};
struct ChoiFile {
  std::string path;
};
struct LogicalDoes {};
struct LogicalNot {
  std::string matrix_path;
};
}  // namespace source

using LexSource = std::variant<source::Vector, source::TensorFile, source::ChoiFile,
                               source::LogicalDoes, source::LogicalNot>;

struct LexEntry {
  std::string word;
  PregroupType type;
  LexSource source;
};

// Type n^r s s^l n with D[i,a,b,j] = delta_ij delta_ab: the subject wire and
// the sentence wire pass straight through.
WordMeaning make_logical_does(const SpaceAssignment& sa);

// Type n^r s s^l n with N[i,a,b,j] = delta_ij negation[a,b]: the wiring of
// `does` with `negation` applied to the sentence wire on its way out.
// ShapeError unless negation is d_s x d_s.
WordMeaning make_logical_not(const SpaceAssignment& sa, const Tensor& negation);

struct LexiconOptions {
  // Required by `vector` entries.
  const VectorSpaceModel* model = nullptr;
  // Dimensions fixed up front. Bases not listed here take their dimension
  // from the first entry that determines one: a model vector, a tensor
  // file, a Choi matrix or a negation matrix.
  SpaceAssignment dims;
};

class Lexicon {
 public:
  // Parses, resolves every source and validates every shape. Throws
  // ParseError (with line number), ShapeError (naming word, expected and
  // found shapes), IoError for dangling file references, ConfigError.
  static Lexicon load(const std::string& path, const LexiconOptions& options = {});
  static Lexicon parse(std::istream& in, const std::string& base_dir,
                       const LexiconOptions& options = {},
                       const std::string& source_name = "<lexicon>");

  const SpaceAssignment& space() const noexcept { return space_; }
  const std::map<std::string, LexEntry>& entries() const noexcept { return entries_; }
  bool contains(const std::string& word) const { return bound_.count(word) != 0; }

  // UnknownWordError naming the word when absent.
  const WordMeaning& bind(const std::string& word) const;
  std::vector<WordMeaning> bind_all(const std::vector<std::string>& words) const;

 private:
  std::map<std::string, LexEntry> entries_;
  std::map<std::string, WordMeaning> bound_;
  SpaceAssignment space_;
};

}  // namespace compsem
