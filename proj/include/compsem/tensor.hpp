#pragma once

// Dense row-major real tensors.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace compsem {

using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& shape);
std::string shape_to_string(const Shape& shape);

class Tensor {
 public:
  // Rank-0 tensor holding 0.
  Tensor() : data_(1, 0.0) {}
  explicit Tensor(Shape shape);
  Tensor(Shape shape, std::vector<double> data);

  static Tensor scalar(double value) { return Tensor(Shape{}, {value}); }
  static Tensor vector(std::vector<double> values);
  // Rows are the first axis.
  static Tensor matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  double operator[](std::size_t flat) const { return data_[flat]; }
  double& operator[](std::size_t flat) { return data_[flat]; }

  double at(std::span<const std::size_t> index) const { return data_[offset(index)]; }
  double& at(std::span<const std::size_t> index) { return data_[offset(index)]; }
  double at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }
  double& at(std::initializer_list<std::size_t> index) {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }

  Tensor reshaped(Shape shape) const;

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::size_t offset(std::span<const std::size_t> index) const;

  Shape shape_;
  std::vector<double> data_;
};

// Row-major strides for `shape`.
std::vector<std::size_t> strides_of(const Shape& shape);

// Tensor product: shape concat(a, b), entry a[i...] * b[j...].
Tensor kron(const Tensor& a, const Tensor& b);

// Result axis k is input axis perm[k].
Tensor permute(const Tensor& t, std::span<const std::size_t> perm);

// Sums over the shared index of axis `axis_a` of a and `axis_b` of b. The
// result keeps a's remaining axes in order, then b's.
Tensor contract(const Tensor& a, std::size_t axis_a, const Tensor& b, std::size_t axis_b);

// Sums the diagonal of two axes of one tensor, removing both.
Tensor trace(const Tensor& t, std::size_t axis1, std::size_t axis2);

Tensor scaled(const Tensor& t, double factor);
Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);

double max_abs(const Tensor& t);
// Infinity-norm distance; shapes must match.
double max_abs_diff(const Tensor& a, const Tensor& b);
// ||a - b||_inf <= tol * max(||a||_inf, ||b||_inf). Shapes must match.
bool approx_equal_rel(const Tensor& a, const Tensor& b, double tol);

// Tensor file format: first non-comment line holds the dimensions, the
// rest hold row-major values. Lines starting with '#' are comments. A
// rank-0 tensor has an empty dimension line.
Tensor read_tensor(std::istream& in, const std::string& source_name = "<stream>");
Tensor load_tensor(const std::string& path);
void write_tensor(std::ostream& out, const Tensor& t);
void save_tensor(const std::string& path, const Tensor& t);

// printf %.*g with the given significant digits; 17 round-trips doubles.
std::string format_double(double value, int significant_digits);

}  // namespace compsem
