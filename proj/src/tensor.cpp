#include "compsem/tensor.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "compsem/error.hpp"

namespace compsem {

std::size_t shape_size(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

std::string shape_to_string(const Shape& shape) {
  std::string out = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(shape[i]);
  }
  return out + "]";
}

std::vector<std::size_t> strides_of(const Shape& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t k = shape.size(); k-- > 1;) strides[k - 1] = strides[k] * shape[k];
  return strides;
}

Tensor::Tensor(Shape shape) : shape_(std::move(shape)), data_(shape_size(shape_), 0.0) {}

Tensor::Tensor(Shape shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != shape_size(shape_))
    throw ShapeError("tensor data has " + std::to_string(data_.size()) +
                     " entries, shape " + shape_to_string(shape_) + " needs " +
                     std::to_string(shape_size(shape_)));
}

Tensor Tensor::vector(std::vector<double> values) {
  Shape shape{values.size()};
  return Tensor(std::move(shape), std::move(values));
}

Tensor Tensor::matrix(std::size_t rows, std::size_t cols, std::vector<double> values) {
  return Tensor(Shape{rows, cols}, std::move(values));
}

Tensor Tensor::reshaped(Shape shape) const {
  if (shape_size(shape) != data_.size())
    throw ShapeError("cannot reshape " + shape_to_string(shape_) + " to " + shape_to_string(shape));
  return Tensor(std::move(shape), data_);
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size())
    throw ShapeError("index of rank " + std::to_string(index.size()) + " into tensor " +
                     shape_to_string(shape_));
  std::size_t off = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= shape_[k])
      throw ShapeError("index out of range on axis " + std::to_string(k) + " of " +
                       shape_to_string(shape_));
    off = off * shape_[k] + index[k];
  }
  return off;
}

Tensor kron(const Tensor& a, const Tensor& b) {
  Shape shape = a.shape();
  shape.insert(shape.end(), b.shape().begin(), b.shape().end());
  std::vector<double> data;
  data.reserve(a.size() * b.size());
  for (double x : a.data())
    for (double y : b.data()) data.push_back(x * y);
  return Tensor(std::move(shape), std::move(data));
}

Tensor permute(const Tensor& t, std::span<const std::size_t> perm) {
  const std::size_t rank = t.rank();
  if (perm.size() != rank) throw ShapeError("permutation rank mismatch");
  std::vector<bool> seen(rank, false);
  Shape shape(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    if (perm[k] >= rank || seen[perm[k]]) throw ShapeError("invalid axis permutation");
    seen[perm[k]] = true;
    shape[k] = t.shape()[perm[k]];
  }
  const auto in_strides = strides_of(t.shape());
  std::vector<std::size_t> src_stride(rank);
  for (std::size_t k = 0; k < rank; ++k) src_stride[k] = in_strides[perm[k]];

  Tensor out(shape);
  if (out.size() == 0) return out;
  std::vector<std::size_t> idx(rank, 0);
  std::size_t src = 0;
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    out[flat] = t[src];
    for (std::size_t k = rank; k-- > 0;) {
      if (++idx[k] < shape[k]) {
        src += src_stride[k];
        break;
      }
      src -= src_stride[k] * (shape[k] - 1);
      idx[k] = 0;
    }
  }
  return out;
}

Tensor contract(const Tensor& a, std::size_t axis_a, const Tensor& b, std::size_t axis_b) {
  if (axis_a >= a.rank() || axis_b >= b.rank()) throw ShapeError("contraction axis out of range");
  const std::size_t d = a.shape()[axis_a];
  if (b.shape()[axis_b] != d)
    throw ShapeError("contracted axes differ: " + shape_to_string(a.shape()) + " axis " +
                     std::to_string(axis_a) + " vs " + shape_to_string(b.shape()) + " axis " +
                     std::to_string(axis_b));

  // a -> (rows x d), b -> (d x cols), then a plain matrix product.
  std::vector<std::size_t> perm_a, perm_b;
  Shape out_shape;
  for (std::size_t k = 0; k < a.rank(); ++k)
    if (k != axis_a) {
      perm_a.push_back(k);
      out_shape.push_back(a.shape()[k]);
    }
  perm_a.push_back(axis_a);
  perm_b.push_back(axis_b);
  for (std::size_t k = 0; k < b.rank(); ++k)
    if (k != axis_b) {
      perm_b.push_back(k);
      out_shape.push_back(b.shape()[k]);
    }
  const Tensor am = permute(a, perm_a);
  const Tensor bm = permute(b, perm_b);
  const std::size_t rows = d ? am.size() / d : 0;
  const std::size_t cols = d ? bm.size() / d : 0;

  Tensor out(out_shape);
  for (std::size_t r = 0; r < rows; ++r) {
    double* dst = out.data().data() + r * cols;
    for (std::size_t k = 0; k < d; ++k) {
      const double x = am[r * d + k];
      if (x == 0.0) continue;
      const double* src = bm.data().data() + k * cols;
      for (std::size_t c = 0; c < cols; ++c) dst[c] += x * src[c];
    }
  }
  return out;
}

Tensor trace(const Tensor& t, std::size_t axis1, std::size_t axis2) {
  if (axis1 == axis2 || axis1 >= t.rank() || axis2 >= t.rank())
    throw ShapeError("invalid trace axes");
  const std::size_t d = t.shape()[axis1];
  if (t.shape()[axis2] != d) throw ShapeError("traced axes differ in dimension");
  std::vector<std::size_t> perm;
  Shape out_shape;
  for (std::size_t k = 0; k < t.rank(); ++k)
    if (k != axis1 && k != axis2) {
      perm.push_back(k);
      out_shape.push_back(t.shape()[k]);
    }
  perm.push_back(axis1);
  perm.push_back(axis2);
  const Tensor p = permute(t, perm);
  Tensor out(out_shape);
  for (std::size_t r = 0; r < out.size(); ++r) {
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) sum += p[(r * d + i) * d + i];
    out[r] = sum;
  }
  return out;
}

Tensor scaled(const Tensor& t, double factor) {
  Tensor out = t;
  for (double& x : out.data()) x *= factor;
  return out;
}

namespace {
void require_same_shape(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape())
    throw ShapeError("shape mismatch: " + shape_to_string(a.shape()) + " vs " +
                     shape_to_string(b.shape()));
}
}  // namespace

Tensor operator+(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b);
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Tensor operator-(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b);
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

double max_abs(const Tensor& t) {
  double m = 0.0;
  for (double x : t.data()) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool approx_equal_rel(const Tensor& a, const Tensor& b, double tol) {
  if (a.shape() != b.shape()) return false;
  return max_abs_diff(a, b) <= tol * std::max(max_abs(a), max_abs(b));
}

std::string format_double(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return buf;
}

namespace {

bool is_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first != std::string::npos && line[first] == '#';
}

}  // namespace

Tensor read_tensor(std::istream& in, const std::string& source_name) {
  std::string line;
  bool have_header = false;
  Shape shape;
  std::vector<double> values;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> Tensor {
    throw ParseError(source_name + ":" + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) continue;
    std::istringstream fields(line);
    std::string tok;
    if (!have_header) {
      have_header = true;
      while (fields >> tok) {
        std::size_t dim = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), dim);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || dim == 0)
          return fail("bad dimension '" + tok + "'");
        shape.push_back(dim);
      }
      continue;
    }
    while (fields >> tok) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        return fail("bad value '" + tok + "'");
      values.push_back(v);
    }
  }
  if (!have_header) throw ParseError(source_name + ": missing dimension line");
  if (values.size() != shape_size(shape))
    throw ParseError(source_name + ": shape " + shape_to_string(shape) + " needs " +
                     std::to_string(shape_size(shape)) + " values, found " +
                     std::to_string(values.size()));
  return Tensor(std::move(shape), std::move(values));
}

Tensor load_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tensor file '" + path + "'");
  return read_tensor(in, path);
}

void write_tensor(std::ostream& out, const Tensor& t) {
  for (std::size_t k = 0; k < t.rank(); ++k) {
    if (k) out << ' ';
    out << t.shape()[k];
  }
  out << '\n';
  const std::size_t row = t.rank() == 0 ? 1 : t.shape().back();
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << format_double(t[i], 17);
    out << ((i + 1) % row == 0 ? '\n' : ' ');
  }
}

void save_tensor(const std::string& path, const Tensor& t) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write tensor file '" + path + "'");
  write_tensor(out, t);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace compsem
