#include "compsem/lexicon.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "compsem/error.hpp"

namespace compsem {

namespace {

PregroupType auxiliary_type() { return parse_type("n^r s s^l n"); }

void require_auxiliary_type(const PregroupType& type, const std::string& word) {
  if (!(type == auxiliary_type()))
    throw ShapeError("logical word '" + word + "' must have type n^r s s^l n, not " +
                     to_string(type));
}

// shape [d_n, d_s, d_s, d_n] with entries delta_ij * route(a, b)
template <typename Route>
Tensor routing_tensor(std::size_t dn, std::size_t ds, Route route) {
  Tensor t(Shape{dn, ds, ds, dn});
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t a = 0; a < ds; ++a)
      for (std::size_t b = 0; b < ds; ++b) t.at({i, a, b, i}) = route(a, b);
  return t;
}

}  // namespace

WordMeaning make_logical_does(const SpaceAssignment& sa) {
  const std::size_t dn = sa.dim("n"), ds = sa.dim("s");
  return {"does", auxiliary_type(),
          routing_tensor(dn, ds, [](std::size_t a, std::size_t b) { return a == b ? 1.0 : 0.0; })};
}

WordMeaning make_logical_not(const SpaceAssignment& sa, const Tensor& negation) {
  const std::size_t dn = sa.dim("n"), ds = sa.dim("s");
  if (negation.shape() != Shape{ds, ds})
    throw ShapeError("negation matrix must be " + shape_to_string({ds, ds}) + ", got " +
                     shape_to_string(negation.shape()));
  return {"not", auxiliary_type(), routing_tensor(dn, ds, [&](std::size_t a, std::size_t b) {
            return negation.at({a, b});
          })};
}

Lexicon Lexicon::load(const std::string& path, const LexiconOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon '" + path + "'");
  const auto dir = std::filesystem::path(path).parent_path().string();
  return parse(in, dir, options, path);
}

Lexicon Lexicon::parse(std::istream& in, const std::string& base_dir,
                       const LexiconOptions& options, const std::string& source_name) {
  auto resolve = [&](const std::string& p) {
    const std::filesystem::path fp(p);
    if (fp.is_absolute() || base_dir.empty()) return fp.string();
    return (std::filesystem::path(base_dir) / fp).string();
  };

  Lexicon lex;
  std::vector<std::string> order;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t")] == '#') continue;
    const std::string where = source_name + ":" + std::to_string(line_no) + ": ";

    std::vector<std::string> fields;
    std::istringstream split(line);
    for (std::string f; std::getline(split, f, '\t');) fields.push_back(f);
    if (fields.size() != 3)
      throw ParseError(where + "expected 3 TAB-separated fields, found " +
                       std::to_string(fields.size()));
    LexEntry entry;
    entry.word = fields[0];
    if (entry.word.empty()) throw ParseError(where + "empty word");
    try {
      entry.type = parse_type(fields[1]);
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
    const std::string& src = fields[2];
    if (src == "vector") {
      entry.source = source::Vector{};
    } else if (src.rfind("tensor:", 0) == 0 && src.size() > 7) {
      entry.source = source::TensorFile{resolve(src.substr(7))};
    } else if (src.rfind("choi:", 0) == 0 && src.size() > 5) {
      entry.source = source::ChoiFile{resolve(src.substr(5))};
    } else if (src == "logical:does") {
      entry.source = source::LogicalDoes{};
    } else if (src.rfind("logical:not:", 0) == 0 && src.size() > 12) {
      entry.source = source::LogicalNot{resolve(src.substr(12))};
    } else {
      throw ParseError(where + "unknown source '" + src + "'");
    }
    if (lex.entries_.count(entry.word))
      throw ParseError(where + "duplicate entry for '" + entry.word + "'");
    order.push_back(entry.word);
    lex.entries_.emplace(entry.word, std::move(entry));
  }

  // Load data, then fix every undetermined dimension from the first data
  // source that mentions the base (file order).
  std::map<std::string, Tensor> data;
  SpaceAssignment space = options.dims;
  auto infer = [&](const PregroupType& type, const Shape& found) {
    if (type.size() != found.size()) return;
    for (std::size_t k = 0; k < found.size(); ++k)
      if (!space.has(type[k].base.name)) space.set(type[k].base.name, found[k]);
  };
  for (const auto& word : order) {
    const LexEntry& e = lex.entries_.at(word);
    std::visit(
        [&](const auto& s) {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, source::Vector>) {
            if (!options.model)
              throw ConfigError("word '" + word + "' needs a distributional model (--model)");
            data.emplace(word, options.model->vector(word));
            infer(e.type, data.at(word).shape());
          } else if constexpr (std::is_same_v<S, source::TensorFile>) {
            data.emplace(word, load_tensor(s.path));
            infer(e.type, data.at(word).shape());
          } else if constexpr (std::is_same_v<S, source::ChoiFile>) {
            Tensor f = load_tensor(s.path);
            if (f.rank() != 2)
              throw ShapeError("choi source for '" + word + "' must be a matrix, found shape " +
                               shape_to_string(f.shape()));
            data.emplace(word, choi_embed(f));
            infer(e.type, data.at(word).shape());
          } else if constexpr (std::is_same_v<S, source::LogicalNot>) {
            require_auxiliary_type(e.type, word);
            Tensor m = load_tensor(s.matrix_path);
            if (m.rank() == 2 && !space.has("s")) space.set("s", m.shape()[0]);
            data.emplace(word, std::move(m));
          } else {
            require_auxiliary_type(e.type, word);
          }
        },
        e.source);
  }

  for (const auto& word : order) {
    const LexEntry& e = lex.entries_.at(word);
    WordMeaning wm;
    if (std::holds_alternative<source::LogicalDoes>(e.source)) {
      wm = make_logical_does(space);
    } else if (std::holds_alternative<source::LogicalNot>(e.source)) {
      wm = make_logical_not(space, data.at(word));
    } else {
      wm.type = e.type;
      wm.tensor = data.at(word);
    }
    wm.word = word;
    const Shape expected = shape_of(e.type, space);
    if (wm.tensor.shape() != expected)
      throw ShapeError("shape mismatch for '" + word + "': type " + to_string(e.type) +
                       " expects " + shape_to_string(expected) + ", found " +
                       shape_to_string(wm.tensor.shape()));
    lex.bound_.emplace(word, std::move(wm));
  }
  lex.space_ = std::move(space);
  return lex;
}

const WordMeaning& Lexicon::bind(const std::string& word) const {
  const auto it = bound_.find(word);
  if (it == bound_.end()) throw UnknownWordError(word);
  return it->second;
}

std::vector<WordMeaning> Lexicon::bind_all(const std::vector<std::string>& words) const {
  std::vector<WordMeaning> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(bind(w));
  return out;
}

}  // namespace compsem
