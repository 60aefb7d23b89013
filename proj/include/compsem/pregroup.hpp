#pragma once

// Pregroup type calculus: simple types with integer adjoint order, type
// sequences, and contraction-only reduction search producing planar
// cup diagrams.

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compsem {

// A basic grammatical type such as "n" (noun) or "s" (sentence).
struct BasicType {
  std::string name;

  friend bool operator==(const BasicType&, const BasicType&) = default;
  friend auto operator<=>(const BasicType&, const BasicType&) = default;
};

// A basic type with an adjoint order z. z = -1 is the left adjoint x^l,
// z = +1 the right adjoint x^r; iterated adjoints use |z| > 1.
//
// The two contraction rules of a pregroup, x^l . x <= 1 and x . x^r <= 1,
// are both the single rule (b, z)(b, z + 1) <= 1. The expansion rules
// 1 <= x . x^l and 1 <= x^r . x are never needed for recognition and are
// not implemented.
struct SimpleType {
  BasicType base;
  int adjoint_order = 0;

  SimpleType() = default;
  SimpleType(std::string name, int z) : base{std::move(name)}, adjoint_order(z) {}
  SimpleType(BasicType b, int z) : base(std::move(b)), adjoint_order(z) {}

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

SimpleType left_adjoint(const SimpleType& t);
SimpleType right_adjoint(const SimpleType& t);

// True iff a . b <= 1 by a single contraction: same base, b.z == a.z + 1.
bool contracts(const SimpleType& a, const SimpleType& b);

// Renders in the `^l` / `^r` notation accepted by parse_type.
std::string to_string(const SimpleType& t);

// An ordered product of simple types; the empty sequence is the unit 1.
class PregroupType {
 public:
  PregroupType() = default;
  PregroupType(std::vector<SimpleType> simples) : simples_(std::move(simples)) {}
  PregroupType(std::initializer_list<SimpleType> simples) : simples_(simples) {}

  const std::vector<SimpleType>& simples() const noexcept { return simples_; }
  std::size_t size() const noexcept { return simples_.size(); }
  bool empty() const noexcept { return simples_.empty(); }
  const SimpleType& operator[](std::size_t i) const { return simples_[i]; }

  auto begin() const noexcept { return simples_.begin(); }
  auto end() const noexcept { return simples_.end(); }

  friend PregroupType operator*(const PregroupType& a, const PregroupType& b);
  friend bool operator==(const PregroupType&, const PregroupType&) = default;

 private:
  std::vector<SimpleType> simples_;
};

// Space separated, `^l` / `^r` suffixes. The unit renders as "1".
std::string to_string(const PregroupType& t);

// Parses surface notation. Simple types are separated by whitespace or '.',
// each a base name optionally followed by '^' and a run of 'l'/'r' letters
// ('l' decrements z, 'r' increments it). "n^r s n^l" is the transitive verb
// type. Throws ParseError naming the offending token.
PregroupType parse_type(std::string_view text);

// A cup joining positions first < second.
struct Link {
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

// The proof object of a reduction: planar nested cups plus the positions
// that pass through to the target type. `links` is kept sorted.
struct ReductionDiagram {
  std::size_t length = 0;
  std::vector<Link> links;
  std::vector<std::size_t> through;

  friend bool operator==(const ReductionDiagram&, const ReductionDiagram&) = default;
};

// Checks every structural invariant of `d` against the sequence it claims
// to reduce: partition, planarity, nesting, contraction of each cup, and
// that the through positions spell `target`. Returns an empty string when
// valid, otherwise a description of the first violation.
std::string validate_diagram(const ReductionDiagram& d, const PregroupType& seq,
                             const PregroupType& target);

// The canonical reduction of `seq` to `target`, if any: the witness with
// the lexicographically smallest sorted link list.
std::optional<ReductionDiagram> reduce(const PregroupType& seq, const PregroupType& target);

// All witnesses in canonical order, at most `limit` of them. The first
// element equals reduce(seq, target).
std::vector<ReductionDiagram> enumerate_reductions(
    const PregroupType& seq, const PregroupType& target,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// seq reduces to the sentence type "s".
bool is_sentence(const PregroupType& seq);

// "(0,1) (3,4)" style listing of the cups.
std::string render_links(const ReductionDiagram& d);

// Multi-line drawing: the type line followed by nested \__/ arcs for cups
// and | for through wires.
std::string render_ascii(const ReductionDiagram& d, const PregroupType& seq);

}  // namespace compsem
