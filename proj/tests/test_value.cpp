#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "generators.hpp"
#include "mtcgp/value.hpp"

using namespace mtcgp;

TEST_CASE("constrain clamps and zeroes non-finite elements") {
  CHECK(constrain(Value::scalar(3.7)) == Value::scalar(1.0));
  CHECK(constrain(Value::scalar(std::nan(""))) == Value::scalar(0.0));
  CHECK(constrain(Value::scalar(-std::numeric_limits<double>::infinity())) ==
        Value::scalar(0.0));
  CHECK(constrain(Value::matrix(1, 2, {-5.0, 0.25})) == Value::matrix(1, 2, {-1.0, 0.25}));
}

TEST_CASE("constrain is idempotent and lands in range") {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    auto v = testing::random_matrix(rng);
    for (auto& e : v.elements()) {
      const double u = unit_uniform(rng);
      e = u < 0.1 ? std::nan("") : u < 0.2 ? 1e308 * 10 : (u - 0.5) * 20.0;
    }
    const auto once = constrain(v);
    CHECK(constrain(once) == once);
    CHECK(testing::constrained(once));
    CHECK(scalar_of(once) >= -1.0);
    CHECK(scalar_of(once) <= 1.0);
  }
}

TEST_CASE("scalar_of averages matrices") {
  CHECK(scalar_of(Value::scalar(0.5)) == 0.5);
  CHECK(scalar_of(Value::matrix(2, 2, {0.0, 1.0, -1.0, 0.0})) == 0.0);
  CHECK(scalar_of(Value::matrix(1, 3, {0.2, 0.4, 0.6})) == doctest::Approx(0.4));
}

TEST_CASE("crop_to_common keeps the top-left region") {
  std::vector<double> a(12), b(10);
  for (int i = 0; i < 12; ++i) a[i] = i;
  for (int i = 0; i < 10; ++i) b[i] = 100 + i;
  const auto [ca, cb] = crop_to_common(Value::matrix(3, 4, a), Value::matrix(2, 5, b));
  CHECK(ca == Value::matrix(2, 4, {0, 1, 2, 3, 4, 5, 6, 7}));
  CHECK(cb == Value::matrix(2, 4, {100, 101, 102, 103, 105, 106, 107, 108}));

  const auto same = Value::matrix(2, 2, {1, 2, 3, 4});
  CHECK(crop_to_common(same, same).first == same);

  const auto [r1, r2] =
      crop_to_common(Value::matrix(1, 3, {1, 2, 3}), Value::matrix(3, 1, {4, 5, 6}));
  CHECK(r1 == Value::matrix(1, 1, {1}));
  CHECK(r2 == Value::matrix(1, 1, {4}));

  CHECK_THROWS_AS(crop_to_common(Value::scalar(1), same), std::invalid_argument);
}

TEST_CASE("crop_to_common dims are symmetric") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_matrix(rng, 8);
    const auto b = testing::random_matrix(rng, 8);
    const auto ab = crop_to_common(a, b);
    const auto ba = crop_to_common(b, a);
    CHECK(ab.first.rows() == ba.first.rows());
    CHECK(ab.first.cols() == ba.first.cols());
  }
}

TEST_CASE("index_from_unit floors and clamps") {
  CHECK(index_from_unit(0.0, 7) == 0);
  CHECK(index_from_unit(1.0, 7) == 6);
  CHECK(index_from_unit(0.5, 5) == 2);
  CHECK(index_from_unit(0.3, 1) == 0);

  std::size_t last = 0;
  for (int i = 0; i <= 1000; ++i) {
    const auto idx = index_from_unit(i / 1000.0, 13);
    CHECK(idx < 13);
    CHECK(idx >= last);
    last = idx;
  }
}

TEST_CASE("matrices are never empty") {
  CHECK_THROWS_AS(Value::matrix(0, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(Value::matrix(2, 2, {1.0}), std::invalid_argument);
}
