#pragma once

// Sentence meaning as tensor contraction along a reduction diagram, plus
// the cup/cap toolkit it rests on.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "compsem/pregroup.hpp"
#include "compsem/tensor.hpp"

namespace compsem {

// Dimension of the space carried by each basic type. Every space has a
// fixed orthonormal basis and is identified with its dual, so adjoints
// keep the dimension of their base.
class SpaceAssignment {
 public:
  SpaceAssignment() = default;
  SpaceAssignment(std::initializer_list<std::pair<const std::string, std::size_t>> dims);

  // Throws ConfigError for dim == 0.
  void set(const std::string& base, std::size_t dim);
  bool has(const std::string& base) const { return dims_.count(base) != 0; }
  // Throws ConfigError naming the base when absent.
  std::size_t dim(const std::string& base) const;
  std::size_t dim(const SimpleType& t) const { return dim(t.base.name); }
  const std::map<std::string, std::size_t>& entries() const noexcept { return dims_; }

 private:
  std::map<std::string, std::size_t> dims_;
};

// Parses "n:2,s:3".
SpaceAssignment parse_dims(const std::string& text);

Shape shape_of(const PregroupType& type, const SpaceAssignment& sa);

struct WordMeaning {
  std::string word;
  PregroupType type;
  Tensor tensor;
};

struct MeaningOptions {
  // Largest word-product tensor meaning_naive will materialize.
  std::size_t naive_size_cap = 10'000'000;
};

// Reference evaluation: materializes the tensor product of all word
// tensors and applies the diagram's linear map (a sum over delta-linked
// indices for every cup, identity on through wires) entry by entry.
Tensor meaning_naive(std::span<const WordMeaning> words, const ReductionDiagram& diagram,
                     const SpaceAssignment& sa, const MeaningOptions& options = {});

// Same value as meaning_naive, computed by pairwise contractions, cups
// innermost first, without forming the full product.
Tensor meaning(std::span<const WordMeaning> words, const ReductionDiagram& diagram,
               const SpaceAssignment& sa);

// Concatenated types of a word list.
PregroupType sentence_type(std::span<const WordMeaning> words);

// sum_i |ii>, shape [d, d]. The cap sum_i <ii| is the same array read as a
// bilinear functional.
Tensor cup(std::size_t d);

// (cap (x) Id) o (Id (x) cup) by explicit index sums; rows index the output
// wire. Equals the identity matrix.
Tensor snake_check(std::size_t d);

// Bipartite state (Id (x) f) sum_i |ii> for f of shape [d_in, d_out]. As an
// intransitive verb tensor it makes meaning(subject verb) = f^T subject.
Tensor choi_embed(const Tensor& f);

// Rank <= 1 across the split between axes [0, split_after) and the rest,
// judged by singular values: sigma_2 <= tol * sigma_1. The zero tensor is
// separable.
bool is_separable(const Tensor& t, std::size_t split_after, double tol = 1e-9);

// Cosine of two rank-1 tensors; DegenerateInputError for a zero vector.
double cosine(const Tensor& u, const Tensor& v);

}  // namespace compsem
