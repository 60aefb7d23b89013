#include "compsem/distributional.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "compsem/error.hpp"
#include "compsem/semantics.hpp"

namespace compsem {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      current += static_cast<char>(std::tolower(u));
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

void Corpus::add_text(std::string_view text) {
  std::vector<std::string> doc;
  auto flush = [&] {
    if (!doc.empty()) documents.push_back(std::move(doc));
    doc.clear();
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r\f\v") == std::string_view::npos) {
      flush();
    } else {
      auto tokens = tokenize(line);
      doc.insert(doc.end(), std::make_move_iterator(tokens.begin()),
                 std::make_move_iterator(tokens.end()));
    }
    start = end + 1;
  }
  flush();
}

std::size_t Corpus::token_count() const {
  std::size_t n = 0;
  for (const auto& d : documents) n += d.size();
  return n;
}

Corpus read_corpus(const std::vector<std::string>& paths) {
  Corpus corpus;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read corpus file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    corpus.add_text(text.str());
  }
  return corpus;
}

BasisSpec build_basis(const Corpus& corpus, std::size_t k, const std::set<std::string>& stop) {
  if (k == 0) throw ConfigError("basis size must be at least 1");
  std::map<std::string, std::uint64_t> freq;
  for (const auto& doc : corpus.documents)
    for (const auto& tok : doc)
      if (!stop.count(tok)) ++freq[tok];
  if (freq.size() < k)
    throw ConfigError("corpus has " + std::to_string(freq.size()) +
                      " eligible distinct tokens, basis needs " + std::to_string(k) +
                      " (short by " + std::to_string(k - freq.size()) + ")");
  std::vector<std::pair<std::string, std::uint64_t>> ranked(freq.begin(), freq.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  BasisSpec basis;
  for (std::size_t i = 0; i < k; ++i) basis.basis_words.push_back(ranked[i].first);
  return basis;
}

namespace {

std::unordered_map<std::string, std::size_t> basis_index(const BasisSpec& basis) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t m = 0; m < basis.basis_words.size(); ++m) {
    if (!index.emplace(basis.basis_words[m], m).second)
      throw ConfigError("duplicate basis word '" + basis.basis_words[m] + "'");
  }
  if (basis.window == 0) throw ConfigError("context window must be at least 1");
  return index;
}

// Calls visit(m) once per basis-word occurrence within the window of
// position p, excluding p itself.
template <typename Visit>
void for_each_context(const std::vector<std::string>& doc, std::size_t p, std::size_t window,
                      const std::unordered_map<std::string, std::size_t>& index, Visit visit) {
  const std::size_t lo = p >= window ? p - window : 0;
  const std::size_t hi = std::min(doc.size() - 1, p + window);
  for (std::size_t q = lo; q <= hi; ++q) {
    if (q == p) continue;
    const auto it = index.find(doc[q]);
    if (it != index.end()) visit(it->second);
  }
}

Tensor relative_frequencies(const std::vector<std::uint64_t>& counts, std::uint64_t occurrences) {
  std::vector<double> values(counts.size());
  for (std::size_t m = 0; m < counts.size(); ++m)
    values[m] = static_cast<double>(counts[m]) / static_cast<double>(occurrences);
  return Tensor::vector(std::move(values));
}

}  // namespace

Tensor meaning_vector(const Corpus& corpus, const std::string& word, const BasisSpec& basis) {
  const auto index = basis_index(basis);
  std::vector<std::uint64_t> counts(basis.basis_words.size(), 0);
  std::uint64_t occurrences = 0;
  for (const auto& doc : corpus.documents) {
    for (std::size_t p = 0; p < doc.size(); ++p) {
      if (doc[p] != word) continue;
      ++occurrences;
      for_each_context(doc, p, basis.window, index, [&](std::size_t m) { ++counts[m]; });
    }
  }
  if (occurrences == 0) throw UnknownWordError(word);
  return relative_frequencies(counts, occurrences);
}

VectorSpaceModel::VectorSpaceModel(BasisSpec basis, std::map<std::string, Tensor> vectors,
                                   std::map<std::string, std::uint64_t> occurrences)
    : basis_(std::move(basis)), vectors_(std::move(vectors)), occurrences_(std::move(occurrences)) {
  for (const auto& [word, v] : vectors_) {
    if (v.shape() != Shape{dimension()})
      throw ShapeError("vector for '" + word + "' has shape " + shape_to_string(v.shape()) +
                       ", basis has " + std::to_string(dimension()) + " words");
  }
}

VectorSpaceModel VectorSpaceModel::build(const Corpus& corpus, BasisSpec basis) {
  const auto index = basis_index(basis);
  const std::size_t dim = basis.basis_words.size();
  // Integer counts make the result independent of document order.
  std::map<std::string, std::vector<std::uint64_t>> counts;
  std::map<std::string, std::uint64_t> occurrences;
  for (const auto& doc : corpus.documents) {
    for (std::size_t p = 0; p < doc.size(); ++p) {
      ++occurrences[doc[p]];
      auto& row = counts.try_emplace(doc[p], dim, 0).first->second;
      for_each_context(doc, p, basis.window, index, [&](std::size_t m) { ++row[m]; });
    }
  }
  std::map<std::string, Tensor> vectors;
  for (const auto& [word, row] : counts)
    vectors.emplace(word, relative_frequencies(row, occurrences.at(word)));
  return VectorSpaceModel(std::move(basis), std::move(vectors), std::move(occurrences));
}

const Tensor& VectorSpaceModel::vector(const std::string& word) const {
  const auto it = vectors_.find(word);
  if (it == vectors_.end()) throw UnknownWordError(word);
  return it->second;
}

std::uint64_t VectorSpaceModel::occurrences(const std::string& word) const {
  const auto it = occurrences_.find(word);
  if (it == occurrences_.end()) throw UnknownWordError(word);
  return it->second;
}

void VectorSpaceModel::write(std::ostream& out) const {
  out << "#basis";
  for (const auto& w : basis_.basis_words) out << ' ' << w;
  out << '\n';
  for (const auto& [word, v] : vectors_) {
    const auto occ = occurrences_.find(word);
    out << word << ' ' << (occ == occurrences_.end() ? 0 : occ->second);
    for (double x : v.data()) out << ' ' << format_double(x, 17);
    out << '\n';
  }
}

VectorSpaceModel VectorSpaceModel::read(std::istream& in, const std::string& source_name) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError(source_name + ":" + std::to_string(line_no) + ": " + why);
  };
  BasisSpec basis;
  bool have_header = false;
  std::map<std::string, Tensor> vectors;
  std::map<std::string, std::uint64_t> occurrences;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (!have_header) {
      if (head != "#basis") fail("expected '#basis' header");
      have_header = true;
      for (std::string w; fields >> w;) basis.basis_words.push_back(w);
      if (basis.basis_words.empty()) fail("empty basis");
      continue;
    }
    std::string count_text;
    if (!(fields >> count_text)) fail("missing occurrence count for '" + head + "'");
    std::uint64_t count = 0;
    auto [cp, cec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (cec != std::errc() || cp != count_text.data() + count_text.size())
      fail("bad occurrence count '" + count_text + "'");
    std::vector<double> values;
    for (std::string tok; fields >> tok;) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("bad coordinate '" + tok + "'");
      values.push_back(v);
    }
    if (values.size() != basis.basis_words.size())
      fail("'" + head + "' has " + std::to_string(values.size()) + " coordinates, basis has " +
           std::to_string(basis.basis_words.size()));
    if (!vectors.emplace(head, Tensor::vector(std::move(values))).second)
      fail("duplicate word '" + head + "'");
    occurrences[head] = count;
  }
  if (!have_header) throw ParseError(source_name + ": missing '#basis' header");
  return VectorSpaceModel(std::move(basis), std::move(vectors), std::move(occurrences));
}

void VectorSpaceModel::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write model file '" + path + "'");
  write(out);
  if (!out) throw IoError("write failed for '" + path + "'");
}

VectorSpaceModel VectorSpaceModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file '" + path + "'");
  return read(in, path);
}

double similarity(const VectorSpaceModel& model, const std::string& w1, const std::string& w2) {
  return cosine(model.vector(w1), model.vector(w2));
}

}  // namespace compsem
