#include "compsem/pregroup.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "compsem/error.hpp"

namespace compsem {

SimpleType left_adjoint(const SimpleType& t) { return {t.base, t.adjoint_order - 1}; }

SimpleType right_adjoint(const SimpleType& t) { return {t.base, t.adjoint_order + 1}; }

bool contracts(const SimpleType& a, const SimpleType& b) {
  return a.base == b.base && b.adjoint_order == a.adjoint_order + 1;
}

std::string to_string(const SimpleType& t) {
  std::string out = t.base.name;
  if (t.adjoint_order != 0) {
    out += '^';
    const char letter = t.adjoint_order > 0 ? 'r' : 'l';
    const int count = t.adjoint_order > 0 ? t.adjoint_order : -t.adjoint_order;
    out.append(static_cast<std::size_t>(count), letter);
  }
  return out;
}

PregroupType operator*(const PregroupType& a, const PregroupType& b) {
  std::vector<SimpleType> out = a.simples_;
  out.insert(out.end(), b.simples_.begin(), b.simples_.end());
  return PregroupType(std::move(out));
}

std::string to_string(const PregroupType& t) {
  if (t.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += to_string(t[i]);
  }
  return out;
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

SimpleType parse_simple(std::string_view token) {
  auto fail = [&](const std::string& why) -> SimpleType {
    throw ParseError("bad type token '" + std::string(token) + "': " + why);
  };
  const auto caret = token.find('^');
  const std::string_view name = token.substr(0, caret);
  if (name.empty()) return fail("missing base name");
  for (char c : name) {
    if (!is_name_char(c)) return fail(std::string("unexpected character '") + c + "'");
  }
  int z = 0;
  if (caret != std::string_view::npos) {
    const std::string_view marks = token.substr(caret + 1);
    if (marks.empty()) return fail("'^' must be followed by l/r letters");
    for (char c : marks) {
      if (c == 'l')
        --z;
      else if (c == 'r')
        ++z;
      else
        return fail(std::string("adjoint marks must be 'l' or 'r', got '") + c + "'");
    }
  }
  return SimpleType(std::string(name), z);
}

}  // namespace

PregroupType parse_type(std::string_view text) {
  std::vector<SimpleType> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == '.' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) out.push_back(parse_simple(text.substr(i, j - i)));
    i = j;
  }
  return PregroupType(std::move(out));
}

std::string validate_diagram(const ReductionDiagram& d, const PregroupType& seq,
                             const PregroupType& target) {
  std::ostringstream why;
  if (d.length != seq.size()) {
    why << "diagram length " << d.length << " != sequence length " << seq.size();
    return why.str();
  }
  std::vector<int> partner(d.length, -1);
  for (std::size_t k = 0; k < d.links.size(); ++k) {
    const Link& l = d.links[k];
    if (!(l.first < l.second && l.second < d.length)) {
      why << "link (" << l.first << "," << l.second << ") out of range";
      return why.str();
    }
    if (k > 0 && !(d.links[k - 1] < l)) return "links not strictly sorted";
    if (partner[l.first] != -1 || partner[l.second] != -1) {
      why << "position reused by link (" << l.first << "," << l.second << ")";
      return why.str();
    }
    partner[l.first] = static_cast<int>(l.second);
    partner[l.second] = static_cast<int>(l.first);
    if (!contracts(seq[l.first], seq[l.second])) {
      why << "link (" << l.first << "," << l.second << ") joins " << to_string(seq[l.first])
          << " and " << to_string(seq[l.second]) << " which do not contract";
      return why.str();
    }
  }
  std::vector<std::size_t> free_positions;
  for (std::size_t p = 0; p < d.length; ++p)
    if (partner[p] == -1) free_positions.push_back(p);
  if (free_positions != d.through) return "through list is not the set of unlinked positions";

  for (const Link& l : d.links) {
    for (std::size_t p = l.first + 1; p < l.second; ++p) {
      const int q = partner[p];
      if (q == -1) {
        why << "through position " << p << " lies under link (" << l.first << "," << l.second
            << ")";
        return why.str();
      }
      if (static_cast<std::size_t>(q) < l.first || static_cast<std::size_t>(q) > l.second) {
        why << "link at " << p << " crosses (" << l.first << "," << l.second << ")";
        return why.str();
      }
    }
  }
  if (d.through.size() != target.size()) return "through wires do not match target length";
  for (std::size_t t = 0; t < target.size(); ++t) {
    if (!(seq[d.through[t]] == target[t])) {
      why << "through position " << d.through[t] << " is " << to_string(seq[d.through[t]])
          << ", target wants " << to_string(target[t]);
      return why.str();
    }
  }
  return {};
}

namespace {

// Feasibility tables for the interval dynamic program.
//   cancel(i, j): the half-open span [i, j) contracts fully to 1.
//   suffix(p, t): positions [p, L) reduce to target[t, m).
class ReductionTables {
 public:
  ReductionTables(const PregroupType& seq, const PregroupType& target)
      : seq_(seq), target_(target), n_(seq.size()), m_(target.size()),
        cancel_((n_ + 1) * (n_ + 1), 0), suffix_((n_ + 1) * (m_ + 1), 0) {
    for (std::size_t i = 0; i <= n_; ++i) cancel_[idx(i, i)] = 1;
    for (std::size_t len = 2; len <= n_; len += 2) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        const std::size_t j = i + len;
        for (std::size_t k = i + 1; k < j; k += 2) {
          if (contracts(seq_[i], seq_[k]) && cancel(i + 1, k) && cancel(k + 1, j)) {
            cancel_[idx(i, j)] = 1;
            break;
          }
        }
      }
    }
    suffix_[sidx(n_, m_)] = 1;
    for (std::size_t p = n_; p-- > 0;) {
      for (std::size_t t = 0; t <= m_; ++t) {
        bool ok = t < m_ && seq_[p] == target_[t] && suffix(p + 1, t + 1);
        for (std::size_t k = p + 1; !ok && k < n_; k += 2)
          ok = contracts(seq_[p], seq_[k]) && cancel(p + 1, k) && suffix(k + 1, t);
        suffix_[sidx(p, t)] = ok ? 1 : 0;
      }
    }
  }

  bool cancel(std::size_t i, std::size_t j) const { return cancel_[idx(i, j)] != 0; }
  bool suffix(std::size_t p, std::size_t t) const { return suffix_[sidx(p, t)] != 0; }
  std::size_t length() const { return n_; }
  std::size_t target_length() const { return m_; }
  const PregroupType& seq() const { return seq_; }
  const PregroupType& target() const { return target_; }

 private:
  std::size_t idx(std::size_t i, std::size_t j) const { return i * (n_ + 1) + j; }
  std::size_t sidx(std::size_t p, std::size_t t) const { return p * (m_ + 1) + t; }

  const PregroupType& seq_;
  const PregroupType& target_;
  std::size_t n_, m_;
  std::vector<char> cancel_;
  std::vector<char> suffix_;
};

// Depth-first walk over witnesses. Every branch taken is feasible, so each
// leaf is a witness and there is no backtracking from dead ends. Branches
// are tried in the order that makes the emitted link lists ascend
// lexicographically: at each open position, cups to the nearest feasible
// partner first, the through wire last.
class WitnessWalker {
 public:
  using Sink = std::function<bool(const ReductionDiagram&)>;

  WitnessWalker(const ReductionTables& tables, Sink sink) : tables_(tables), sink_(std::move(sink)) {}

  void run() {
    if (!tables_.suffix(0, 0)) return;
    pending_.push_back({Task::kSuffix, 0, 0});
    step();
  }

 private:
  struct Task {
    enum Kind { kCancel, kSuffix } kind;
    std::size_t a, b;  // kCancel: span [a, b); kSuffix: position a, target index b
  };

  bool step() {
    if (pending_.empty()) {
      ReductionDiagram d;
      d.length = tables_.length();
      d.links = links_;
      d.through = through_;
      return sink_(d);
    }
    const Task task = pending_.back();
    pending_.pop_back();
    const bool keep_going = task.kind == Task::kCancel ? expand_cancel(task) : expand_suffix(task);
    pending_.push_back(task);
    return keep_going;
  }

  bool expand_cancel(const Task& task) {
    const std::size_t i = task.a, j = task.b;
    if (i == j) return step();
    const auto& seq = tables_.seq();
    for (std::size_t k = i + 1; k < j; k += 2) {
      if (!(contracts(seq[i], seq[k]) && tables_.cancel(i + 1, k) && tables_.cancel(k + 1, j)))
        continue;
      if (!with_cup(i, k, {Task::kCancel, k + 1, j})) return false;
    }
    return true;
  }

  bool expand_suffix(const Task& task) {
    const std::size_t p = task.a, t = task.b;
    const std::size_t n = tables_.length();
    if (p == n) return step();
    const auto& seq = tables_.seq();
    for (std::size_t k = p + 1; k < n; k += 2) {
      if (!(contracts(seq[p], seq[k]) && tables_.cancel(p + 1, k) && tables_.suffix(k + 1, t)))
        continue;
      if (!with_cup(p, k, {Task::kSuffix, k + 1, t})) return false;
    }
    if (t < tables_.target_length() && seq[p] == tables_.target()[t] && tables_.suffix(p + 1, t + 1)) {
      through_.push_back(p);
      pending_.push_back({Task::kSuffix, p + 1, t + 1});
      const bool keep_going = step();
      pending_.pop_back();
      through_.pop_back();
      return keep_going;
    }
    return true;
  }

  // Places cup (i, k), then fully cancels its interior, then continues
  // with `after`.
  bool with_cup(std::size_t i, std::size_t k, Task after) {
    links_.push_back({i, k});
    pending_.push_back(after);
    pending_.push_back({Task::kCancel, i + 1, k});
    const bool keep_going = step();
    pending_.pop_back();
    pending_.pop_back();
    links_.pop_back();
    return keep_going;
  }

  const ReductionTables& tables_;
  Sink sink_;
  std::vector<Task> pending_;
  std::vector<Link> links_;
  std::vector<std::size_t> through_;
};

}  // namespace

std::vector<ReductionDiagram> enumerate_reductions(const PregroupType& seq,
                                                   const PregroupType& target, std::size_t limit) {
  std::vector<ReductionDiagram> out;
  if (limit == 0) return out;
  ReductionTables tables(seq, target);
  WitnessWalker walker(tables, [&](const ReductionDiagram& d) {
    out.push_back(d);
    return out.size() < limit;
  });
  walker.run();
  return out;
}

std::optional<ReductionDiagram> reduce(const PregroupType& seq, const PregroupType& target) {
  auto found = enumerate_reductions(seq, target, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

bool is_sentence(const PregroupType& seq) {
  static const PregroupType sentence{SimpleType("s", 0)};
  return ReductionTables(seq, sentence).suffix(0, 0);
}

std::string render_links(const ReductionDiagram& d) {
  std::string out;
  for (const Link& l : d.links) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(l.first) + "," + std::to_string(l.second) + ")";
  }
  return out;
}

std::string render_ascii(const ReductionDiagram& d, const PregroupType& seq) {
  std::vector<std::size_t> column(seq.size());
  std::string type_line;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    if (p) type_line += "  ";
    column[p] = type_line.size();
    type_line += to_string(seq[p]);
  }

  // Depth of a cup is one more than the deepest cup nested inside it.
  std::vector<std::size_t> depth(d.links.size(), 1);
  std::vector<std::size_t> order(d.links.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.links[a].second - d.links[a].first < d.links[b].second - d.links[b].first;
  });
  std::size_t rows = d.through.empty() ? 0 : 1;
  for (std::size_t a : order) {
    for (std::size_t b : order) {
      if (d.links[b].first > d.links[a].first && d.links[b].second < d.links[a].second)
        depth[a] = std::max(depth[a], depth[b] + 1);
    }
    rows = std::max(rows, depth[a]);
  }

  std::vector<std::string> grid(rows, std::string(type_line.size(), ' '));
  for (std::size_t p : d.through)
    for (auto& row : grid) row[column[p]] = '|';
  for (std::size_t k = 0; k < d.links.size(); ++k) {
    const std::size_t left = column[d.links[k].first];
    const std::size_t right = column[d.links[k].second];
    for (std::size_t r = 0; r + 1 < depth[k]; ++r) {
      grid[r][left] = '|';
      grid[r][right] = '|';
    }
    std::string& row = grid[depth[k] - 1];
    row[left] = '\\';
    for (std::size_t c = left + 1; c < right; ++c) row[c] = '_';
    row[right] = '/';
  }

  std::string out = type_line + '\n';
  for (auto& row : grid) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + '\n';
  }
  return out;
}

}  // namespace compsem
