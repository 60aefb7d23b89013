#include "compsem/semantics.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "compsem/error.hpp"

namespace compsem {

SpaceAssignment::SpaceAssignment(
    std::initializer_list<std::pair<const std::string, std::size_t>> dims) {
  for (const auto& [base, dim] : dims) set(base, dim);
}

void SpaceAssignment::set(const std::string& base, std::size_t dim) {
  if (base.empty()) throw ConfigError("empty basic type name in space assignment");
  if (dim == 0) throw ConfigError("dimension of '" + base + "' must be at least 1");
  dims_[base] = dim;
}

std::size_t SpaceAssignment::dim(const std::string& base) const {
  const auto it = dims_.find(base);
  if (it == dims_.end()) throw ConfigError("no dimension assigned to basic type '" + base + "'");
  return it->second;
}

SpaceAssignment parse_dims(const std::string& text) {
  SpaceAssignment sa;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
      throw ConfigError("bad dimension spec '" + item + "', expected base:dim");
    const std::string digits = item.substr(colon + 1);
    if (digits.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("bad dimension in '" + item + "'");
    sa.set(item.substr(0, colon), std::stoul(digits));
  }
  return sa;
}

Shape shape_of(const PregroupType& type, const SpaceAssignment& sa) {
  Shape shape;
  shape.reserve(type.size());
  for (const SimpleType& t : type) shape.push_back(sa.dim(t));
  return shape;
}

PregroupType sentence_type(std::span<const WordMeaning> words) {
  PregroupType all;
  for (const WordMeaning& w : words) all = all * w.type;
  return all;
}

namespace {

// Checks words against the diagram and returns the concatenated type.
PregroupType check_inputs(std::span<const WordMeaning> words, const ReductionDiagram& diagram,
                          const SpaceAssignment& sa) {
  for (const WordMeaning& w : words) {
    const Shape expected = shape_of(w.type, sa);
    if (w.tensor.shape() != expected)
      throw ShapeError("word '" + w.word + "' of type " + to_string(w.type) + " needs shape " +
                       shape_to_string(expected) + ", tensor has " +
                       shape_to_string(w.tensor.shape()));
  }
  PregroupType seq = sentence_type(words);
  std::vector<SimpleType> through_types;
  for (std::size_t p : diagram.through) {
    if (p >= seq.size()) throw ShapeError("diagram through position out of range");
    through_types.push_back(seq[p]);
  }
  const std::string problem = validate_diagram(diagram, seq, PregroupType(through_types));
  if (!problem.empty()) throw ShapeError("diagram does not fit the words: " + problem);
  return seq;
}

Shape through_shape(const ReductionDiagram& diagram, const Shape& position_dims) {
  Shape out;
  for (std::size_t p : diagram.through) out.push_back(position_dims[p]);
  return out;
}

}  // namespace

Tensor meaning_naive(std::span<const WordMeaning> words, const ReductionDiagram& diagram,
                     const SpaceAssignment& sa, const MeaningOptions& options) {
  const PregroupType seq = check_inputs(words, diagram, sa);
  const Shape dims = shape_of(seq, sa);
  const std::size_t total = shape_size(dims);
  if (total > options.naive_size_cap)
    throw SizeLimitError("word product has " + std::to_string(total) +
                         " entries, naive evaluation cap is " +
                         std::to_string(options.naive_size_cap));

  Tensor product = Tensor::scalar(1.0);
  for (const WordMeaning& w : words) product = kron(product, w.tensor);

  const Shape out_shape = through_shape(diagram, dims);
  Tensor out(out_shape);
  const auto out_strides = strides_of(out_shape);
  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::size_t flat = 0; flat < product.size(); ++flat) {
    bool on_diagonal = true;
    for (const Link& l : diagram.links) {
      if (idx[l.first] != idx[l.second]) {
        on_diagonal = false;
        break;
      }
    }
    if (on_diagonal) {
      std::size_t dst = 0;
      for (std::size_t t = 0; t < diagram.through.size(); ++t)
        dst += idx[diagram.through[t]] * out_strides[t];
      out[dst] += product[flat];
    }
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

Tensor meaning(std::span<const WordMeaning> words, const ReductionDiagram& diagram,
               const SpaceAssignment& sa) {
  const PregroupType seq = check_inputs(words, diagram, sa);

  // One factor per connected group of words; axis k of a factor carries
  // sentence position labels[k].
  struct Factor {
    Tensor tensor;
    std::vector<std::size_t> labels;
    bool alive = true;
  };
  std::vector<Factor> factors;
  std::vector<std::size_t> owner(seq.size());
  std::size_t position = 0;
  for (const WordMeaning& w : words) {
    Factor f{w.tensor, {}, true};
    for (std::size_t k = 0; k < w.type.size(); ++k) {
      f.labels.push_back(position);
      owner[position++] = factors.size();
    }
    factors.push_back(std::move(f));
  }

  // Narrowest cups first; a cup's interior is always narrower.
  std::vector<Link> order = diagram.links;
  std::stable_sort(order.begin(), order.end(), [](const Link& a, const Link& b) {
    return a.second - a.first < b.second - b.first;
  });

  auto axis_of = [](const Factor& f, std::size_t label) {
    return static_cast<std::size_t>(std::find(f.labels.begin(), f.labels.end(), label) -
                                    f.labels.begin());
  };
  for (const Link& l : order) {
    const std::size_t fa = owner[l.first];
    const std::size_t fb = owner[l.second];
    Factor& a = factors[fa];
    const std::size_t axis_a = axis_of(a, l.first);
    if (fa == fb) {
      const std::size_t axis_b = axis_of(a, l.second);
      a.tensor = trace(a.tensor, axis_a, axis_b);
      std::erase_if(a.labels, [&](std::size_t p) { return p == l.first || p == l.second; });
      continue;
    }
    Factor& b = factors[fb];
    const std::size_t axis_b = axis_of(b, l.second);
    a.tensor = contract(a.tensor, axis_a, b.tensor, axis_b);
    a.labels.erase(a.labels.begin() + static_cast<std::ptrdiff_t>(axis_a));
    for (std::size_t k = 0; k < b.labels.size(); ++k) {
      if (k == axis_b) continue;
      a.labels.push_back(b.labels[k]);
      owner[b.labels[k]] = fa;
    }
    b.alive = false;
    b.tensor = Tensor();
    b.labels.clear();
  }

  // Remaining factors are disconnected; their product, with axes sorted by
  // sentence position, is the result.
  Tensor result = Tensor::scalar(1.0);
  std::vector<std::size_t> labels;
  for (const Factor& f : factors) {
    if (!f.alive) continue;
    result = kron(result, f.tensor);
    labels.insert(labels.end(), f.labels.begin(), f.labels.end());
  }
  std::vector<std::size_t> perm(labels.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t x, std::size_t y) { return labels[x] < labels[y]; });
  return permute(result, perm);
}

Tensor cup(std::size_t d) {
  Tensor t(Shape{d, d});
  for (std::size_t i = 0; i < d; ++i) t.at({i, i}) = 1.0;
  return t;
}

Tensor snake_check(std::size_t d) {
  const Tensor c = cup(d);  // used as the cup on wires (b, c)
  const Tensor k = cup(d);  // used as the cap on wires (a, b)
  Tensor out(Shape{d, d});
  for (std::size_t out_wire = 0; out_wire < d; ++out_wire)
    for (std::size_t in_wire = 0; in_wire < d; ++in_wire) {
      double sum = 0.0;
      for (std::size_t mid = 0; mid < d; ++mid) sum += k.at({in_wire, mid}) * c.at({mid, out_wire});
      out.at({out_wire, in_wire}) = sum;
    }
  return out;
}

Tensor choi_embed(const Tensor& f) {
  if (f.rank() != 2) throw ShapeError("choi_embed needs a matrix, got " + shape_to_string(f.shape()));
  // Psi[i, k] = sum_j cup[i, j] f[j, k]
  return contract(cup(f.shape()[0]), 1, f, 0);
}

bool is_separable(const Tensor& t, std::size_t split_after, double tol) {
  if (split_after < 1 || split_after >= t.rank())
    throw ShapeError("split position " + std::to_string(split_after) + " invalid for rank " +
                     std::to_string(t.rank()));
  std::size_t rows = 1;
  for (std::size_t k = 0; k < split_after; ++k) rows *= t.shape()[k];
  const std::size_t cols = t.size() / rows;
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> m(t.data().data(), static_cast<Eigen::Index>(rows),
                                     static_cast<Eigen::Index>(cols));
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sigma = svd.singularValues();
  if (sigma.size() < 2 || sigma(0) == 0.0) return true;
  return sigma(1) <= tol * sigma(0);
}

double cosine(const Tensor& u, const Tensor& v) {
  if (u.rank() != 1 || v.rank() != 1 || u.shape() != v.shape())
    throw ShapeError("cosine needs two vectors of equal length, got " +
                     shape_to_string(u.shape()) + " and " + shape_to_string(v.shape()));
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) throw DegenerateInputError("cosine of a zero vector is undefined");
  return dot / (std::sqrt(uu) * std::sqrt(vv));
}

}  // namespace compsem
