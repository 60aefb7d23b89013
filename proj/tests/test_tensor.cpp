#include <doctest.h>

#include <random>
#include <sstream>

#include "compsem/error.hpp"
#include "compsem/tensor.hpp"
#include "oracles.hpp"

using namespace compsem;

TEST_CASE("kron of basis vectors and the scalar unit") {
  const Tensor k = kron(Tensor::vector({1, 0}), Tensor::vector({0, 1}));
  CHECK(k.shape() == Shape{2, 2});
  CHECK(std::vector<double>(k.data().begin(), k.data().end()) == std::vector<double>{0, 1, 0, 0});

  const Tensor s = kron(Tensor::scalar(3), Tensor::vector({1, 2}));
  CHECK(s == Tensor::vector({3, 6}));

  // The all-ones product is not the cup [1,0,0,1].
  const Tensor ones = kron(Tensor::vector({1, 1}), Tensor::vector({1, 1}));
  CHECK(ones == Tensor(Shape{2, 2}, {1, 1, 1, 1}));
  CHECK_FALSE(ones == Tensor(Shape{2, 2}, {1, 0, 0, 1}));
}

TEST_CASE("kron is associative") {
  std::mt19937_64 rng(7);
  const Tensor a = oracle::random_tensor({2, 3}, rng);
  const Tensor b = oracle::random_tensor({3}, rng);
  const Tensor c = oracle::random_tensor({2, 1, 2}, rng);
  const Tensor left = kron(kron(a, b), c);
  const Tensor right = kron(a, kron(b, c));
  CHECK(left.shape() == Shape{2, 3, 3, 2, 1, 2});
  CHECK(approx_equal_rel(left, right, 1e-15));
}

TEST_CASE("construction and indexing") {
  CHECK_THROWS_AS(Tensor(Shape{2, 2}, {1, 2, 3}), ShapeError);
  Tensor t(Shape{2, 3});
  t.at({1, 2}) = 5;
  CHECK(t[5] == 5);
  CHECK_THROWS_AS(t.at({2, 0}), ShapeError);
  CHECK_THROWS_AS(t.at({0}), ShapeError);
  CHECK(Tensor().rank() == 0);
  CHECK(Tensor().size() == 1);
}

TEST_CASE("permute, contract and trace against index loops") {
  std::mt19937_64 rng(11);
  const Tensor a = oracle::random_tensor({2, 3, 4}, rng);
  const std::size_t perm[] = {2, 0, 1};
  const Tensor p = permute(a, perm);
  CHECK(p.shape() == Shape{4, 2, 3});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 4; ++k) CHECK(p.at({k, i, j}) == a.at({i, j, k}));

  const Tensor b = oracle::random_tensor({3, 5}, rng);
  const Tensor c = contract(a, 1, b, 0);
  REQUIRE(c.shape() == Shape{2, 4, 5});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t m = 0; m < 5; ++m) {
        double sum = 0;
        for (std::size_t j = 0; j < 3; ++j) sum += a.at({i, j, k}) * b.at({j, m});
        CHECK(c.at({i, k, m}) == doctest::Approx(sum).epsilon(1e-14));
      }

  const Tensor sq = oracle::random_tensor({3, 2, 3}, rng);
  const Tensor tr = trace(sq, 0, 2);
  REQUIRE(tr.shape() == Shape{2});
  for (std::size_t j = 0; j < 2; ++j) {
    double sum = 0;
    for (std::size_t i = 0; i < 3; ++i) sum += sq.at({i, j, i});
    CHECK(tr[j] == doctest::Approx(sum).epsilon(1e-14));
  }
  CHECK_THROWS_AS(contract(a, 0, b, 0), ShapeError);
  CHECK_THROWS_AS(trace(a, 0, 1), ShapeError);
}

TEST_CASE("relative comparison") {
  const Tensor a = Tensor::vector({1e6, 1});
  const Tensor b = Tensor::vector({1e6, 1 + 1e-4});
  CHECK(approx_equal_rel(a, b, 1e-9));
  CHECK_FALSE(approx_equal_rel(a, b, 1e-11));
  CHECK(approx_equal_rel(Tensor::vector({0, 0}), Tensor::vector({0, 0}), 1e-9));
  CHECK_FALSE(approx_equal_rel(Tensor::vector({0}), Tensor::vector({0, 0}), 1e-9));
}

TEST_CASE("tensor file format") {
  std::istringstream in(
      "# a verb\n"
      "2 1 2\n"
      "1 2\n"
      "# values may wrap anywhere\n"
      "3\n"
      "4.5e-1\n");
  const Tensor t = read_tensor(in);
  CHECK(t.shape() == Shape{2, 1, 2});
  CHECK(t.at({1, 0, 1}) == 0.45);

  std::istringstream scalar("\n7.25\n");
  const Tensor s = read_tensor(scalar);
  CHECK(s.rank() == 0);
  CHECK(s[0] == 7.25);

  std::istringstream short_data("2 2\n1 2 3\n");
  CHECK_THROWS_AS(read_tensor(short_data), ParseError);
  std::istringstream bad_dim("2 x\n1 2\n");
  CHECK_THROWS_AS(read_tensor(bad_dim), ParseError);
  std::istringstream bad_value("2\n1 two\n");
  CHECK_THROWS_WITH_AS(read_tensor(bad_value), doctest::Contains("two"), ParseError);
  CHECK_THROWS_AS(load_tensor("/nonexistent/file.tns"), IoError);
}

TEST_CASE("tensor files round-trip bitwise") {
  std::mt19937_64 rng(3);
  for (const Shape& shape : {Shape{}, Shape{5}, Shape{2, 3, 2}}) {
    Tensor t = oracle::random_tensor(shape, rng);
    if (t.size() > 1) t[1] = 1.0 / 3.0;
    std::stringstream io;
    write_tensor(io, t);
    CHECK(read_tensor(io) == t);
  }
}
