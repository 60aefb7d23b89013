#include "compsem/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>

#include "compsem/distributional.hpp"
#include "compsem/error.hpp"
#include "compsem/lexicon.hpp"
#include "compsem/pregroup.hpp"
#include "compsem/semantics.hpp"

namespace compsem::cli {

namespace {

struct CommonFlags {
  std::string lexicon;
  std::string model;
  std::string dims;
  bool json = false;
};

// A sentence that reduced to s, with everything needed to report it.
struct ParsedSentence {
  std::vector<std::string> words;
  std::vector<WordMeaning> meanings;
  PregroupType seq;
  ReductionDiagram diagram;
};

class Session {
 public:
  explicit Session(const CommonFlags& flags) {
    if (flags.lexicon.empty()) throw ConfigError("--lexicon is required");
    LexiconOptions options;
    if (!flags.model.empty()) {
      model_ = std::make_unique<VectorSpaceModel>(VectorSpaceModel::load(flags.model));
      options.model = model_.get();
    }
    if (!flags.dims.empty()) options.dims = parse_dims(flags.dims);
    lexicon_ = Lexicon::load(flags.lexicon, options);
  }

  // nullopt when the words bind but do not reduce to s.
  std::optional<ParsedSentence> parse(const std::string& sentence) const {
    ParsedSentence p;
    p.words = tokenize(sentence);
    if (p.words.empty()) throw ConfigError("empty sentence");
    p.meanings = lexicon_.bind_all(p.words);
    p.seq = sentence_type(p.meanings);
    auto diagram = reduce(p.seq, PregroupType{SimpleType("s", 0)});
    if (!diagram) return std::nullopt;
    p.diagram = std::move(*diagram);
    return p;
  }

  Tensor evaluate(const ParsedSentence& p) const {
    return meaning(p.meanings, p.diagram, lexicon_.space());
  }

 private:
  std::unique_ptr<VectorSpaceModel> model_;
  Lexicon lexicon_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string format_vector(const Tensor& v, int digits, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += format_double(v[i], digits);
  }
  return out;
}

std::string word_types(const ParsedSentence& p) {
  std::vector<std::string> types;
  for (const auto& m : p.meanings) types.push_back(to_string(m.type));
  return join(types, " | ");
}

// JSON object members describing the parse, without braces.
std::string json_parse_members(const ParsedSentence& p) {
  nlohmann::json types = nlohmann::json::array();
  for (const auto& m : p.meanings) types.push_back(to_string(m.type));
  nlohmann::json links = nlohmann::json::array();
  for (const Link& l : p.diagram.links) links.push_back({l.first, l.second});
  return "\"words\":" + nlohmann::json(p.words).dump() + ",\"types\":" + types.dump() +
         ",\"links\":" + links.dump() + ",\"through\":" + nlohmann::json(p.diagram.through).dump();
}

void print_parse_text(std::ostream& out, const ParsedSentence& p) {
  out << "words: " << join(p.words, " ") << '\n';
  out << "types: " << word_types(p) << '\n';
  out << "links: " << render_links(p.diagram) << '\n';
  std::vector<std::string> through;
  for (std::size_t t : p.diagram.through) through.push_back(std::to_string(t));
  out << "through: " << join(through, " ") << '\n';
  out << render_ascii(p.diagram, p.seq);
}

int report_rejection(std::ostream& out, const CommonFlags& flags, const std::string& sentence) {
  if (flags.json)
    out << "{\"sentence\":" << nlohmann::json(sentence).dump() << ",\"reduces\":false}\n";
  else
    out << "no reduction to s\n";
  return kRejected;
}

int cmd_space_build(const std::vector<std::string>& corpus_paths, std::size_t k,
                    std::size_t window, const std::string& out_path, const CommonFlags& flags,
                    std::ostream& out) {
  const Corpus corpus = read_corpus(corpus_paths);
  if (corpus.token_count() == 0) throw ConfigError("corpus contains no tokens");
  BasisSpec basis = build_basis(corpus, k);
  basis.window = window;
  const VectorSpaceModel model = VectorSpaceModel::build(corpus, std::move(basis));
  model.save(out_path);
  if (flags.json)
    out << "{\"basis_size\":" << model.dimension() << ",\"vocabulary_size\":"
        << model.vectors().size() << ",\"output\":" << nlohmann::json(out_path).dump() << "}\n";
  else
    out << "basis size: " << model.dimension() << '\n'
        << "vocabulary size: " << model.vectors().size() << '\n';
  return kSuccess;
}

int cmd_parse(const std::string& sentence, const CommonFlags& flags, std::ostream& out) {
  const Session session(flags);
  const auto parsed = session.parse(sentence);
  if (!parsed) return report_rejection(out, flags, sentence);
  if (flags.json)
    out << '{' << json_parse_members(*parsed) << ",\"reduces\":true}\n";
  else
    print_parse_text(out, *parsed);
  return kSuccess;
}

int cmd_meaning(const std::string& sentence, const CommonFlags& flags, std::ostream& out) {
  const Session session(flags);
  const auto parsed = session.parse(sentence);
  if (!parsed) return report_rejection(out, flags, sentence);
  const Tensor v = session.evaluate(*parsed);
  if (flags.json) {
    out << '{' << json_parse_members(*parsed) << ",\"vector\":[" << format_vector(v, 17, ",")
        << "]}\n";
  } else {
    print_parse_text(out, *parsed);
    out << "vector: " << format_vector(v, 6, " ") << '\n';
  }
  return kSuccess;
}

int cmd_compare(const std::string& first, const std::string& second, const CommonFlags& flags,
                std::ostream& out) {
  const Session session(flags);
  const auto a = session.parse(first);
  if (!a) return report_rejection(out, flags, first);
  const auto b = session.parse(second);
  if (!b) return report_rejection(out, flags, second);
  const Tensor va = session.evaluate(*a);
  const Tensor vb = session.evaluate(*b);
  double c = 0.0;
  try {
    c = cosine(va, vb);
  } catch (const DegenerateInputError&) {
    throw DegenerateInputError("degenerate meaning: a sentence vector is zero");
  }
  if (flags.json)
    out << "{\"first\":" << nlohmann::json(first).dump() << ",\"second\":"
        << nlohmann::json(second).dump() << ",\"first_vector\":[" << format_vector(va, 17, ",")
        << "],\"second_vector\":[" << format_vector(vb, 17, ",")
        << "],\"cosine\":" << format_double(c, 17) << "}\n";
  else
    out << "cosine: " << format_double(c, 6) << '\n';
  return kSuccess;
}

int cmd_demo_snake(std::size_t d, const CommonFlags& flags, std::ostream& out) {
  const Tensor m = snake_check(d);
  const double deviation = max_abs_diff(m, cup(d));
  const bool pass = deviation < 1e-12;
  if (flags.json)
    out << "{\"dimension\":" << d << ",\"max_deviation\":" << format_double(deviation, 17)
        << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
  else
    out << "dimension: " << d << '\n'
        << "max deviation: " << format_double(deviation, 6) << '\n'
        << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kSuccess : kRejected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compositional sentence meaning from pregroup reductions and word tensors",
               "compsem"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags flags;
  app.add_option("--lexicon", flags.lexicon, "Lexicon file (word TAB type TAB source)");
  app.add_option("--model", flags.model, "Vector space model file for `vector` entries");
  app.add_option("--dims", flags.dims, "Space dimensions, e.g. n:2,s:2");
  app.add_flag("--json", flags.json, "Emit one JSON object per line");

  auto* space = app.add_subcommand("space", "Distributional vector space tools");
  space->require_subcommand(1);
  auto* build = space->add_subcommand("build", "Build a vector space model from a corpus");
  std::vector<std::string> corpus_paths;
  std::size_t basis_size = 0;
  std::size_t window = 2;
  std::string out_path;
  build->add_option("corpus", corpus_paths, "Corpus files")->required();
  build->add_option("-k,--basis-size", basis_size, "Number of basis (context) words")->required();
  build->add_option("-w,--window", window, "Context window radius")->check(CLI::PositiveNumber);
  build->add_option("-o,--out", out_path, "Output model file")->required();

  auto* parse = app.add_subcommand("parse", "Show the canonical reduction of a sentence");
  std::vector<std::string> sentence_parts;
  parse->add_option("sentence", sentence_parts, "Sentence")->required();

  auto* mean = app.add_subcommand("meaning", "Compute a sentence meaning vector");
  mean->add_option("sentence", sentence_parts, "Sentence")->required();

  auto* compare = app.add_subcommand("compare", "Cosine between two sentence meanings");
  std::vector<std::string> pair;
  compare->add_option("sentences", pair, "Two sentences")->required()->expected(2);

  auto* demo = app.add_subcommand("demo", "Demonstrations");
  demo->require_subcommand(1);
  auto* snake = demo->add_subcommand("snake", "Check the cup/cap snake identity");
  std::size_t snake_dim = 2;
  snake->add_option("-d,--dim", snake_dim, "Dimension")->check(CLI::Range(1, 64));

  std::vector<const char*> argv{"compsem"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (build->parsed())
      return cmd_space_build(corpus_paths, basis_size, window, out_path, flags, out);
    if (parse->parsed()) return cmd_parse(join(sentence_parts, " "), flags, out);
    if (mean->parsed()) return cmd_meaning(join(sentence_parts, " "), flags, out);
    if (compare->parsed()) return cmd_compare(pair[0], pair[1], flags, out);
    if (snake->parsed()) return cmd_demo_snake(snake_dim, flags, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no command\n";
  return kUsageError;
}

}  // namespace compsem::cli
