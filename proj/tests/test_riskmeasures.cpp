#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>

#include "nestedrisk/riskmeasures.hpp"

using namespace nestedrisk;

namespace {

// Independent oracle: brute-force grid minimization of the AV@R objective
// over [min x, max x].
double avar_grid_oracle(const FiniteProbSpace& space, double beta,
                        const RandomVariable& x, double step = 1e-4) {
  double lo = *std::min_element(x.values.begin(), x.values.end());
  double hi = *std::max_element(x.values.begin(), x.values.end());
  double best = std::numeric_limits<double>::infinity();
  auto steps = static_cast<long>(std::ceil((hi - lo) / step)) + 1;
  for (long k = 0; k <= steps; ++k) {
    double alpha = lo + static_cast<double>(k) * step;
    double tail = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      tail += space.weights[i] * std::max(0.0, x.values[i] - alpha);
    }
    best = std::min(best, alpha + tail / (1.0 - beta));
  }
  return best;
}

RandomVariable random_rv(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-3, 3);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return RandomVariable(std::move(v));
}

}  // namespace

TEST_CASE("AV@R on the four-atom uniform space") {
  auto u4 = FiniteProbSpace::uniform(4);
  CHECK(avar(u4, 0.5, RandomVariable({3, 3, 2, 1})) == doctest::Approx(3.0));
  CHECK(avar(u4, 0.5, RandomVariable({1, 3, 2, 2})) == doctest::Approx(2.5));
}

TEST_CASE("AV@R at beta = 0 is the expectation") {
  auto u4 = FiniteProbSpace::uniform(4);
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    auto x = random_rv(rng, 4);
    CHECK(avar(u4, 0.0, x) == doctest::Approx(expectation(u4, x)).epsilon(1e-12));
    CHECK(avar_grid_oracle(u4, 0.0, x) ==
          doctest::Approx(expectation(u4, x)).epsilon(1e-3));
  }
}

TEST_CASE("AV@R at beta = 1 is the maximum") {
  auto u4 = FiniteProbSpace::uniform(4);
  CHECK(avar(u4, 1.0, RandomVariable({1, 3, 2, 2})) == doctest::Approx(3.0));
}

TEST_CASE("AV@R input validation") {
  auto u4 = FiniteProbSpace::uniform(4);
  CHECK_THROWS_AS(avar(u4, -0.1, RandomVariable({1, 2, 3, 4})), std::invalid_argument);
  CHECK_THROWS_AS(avar(u4, 1.1, RandomVariable({1, 2, 3, 4})), std::invalid_argument);
  CHECK_THROWS_AS(avar(u4, 0.5, RandomVariable({1, 2})), std::invalid_argument);
}

TEST_CASE("scan-based AV@R matches the grid oracle on random instances") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 25; ++rep) {
    std::uniform_int_distribution<std::size_t> size(2, 6);
    std::size_t n = size(rng);
    auto space = FiniteProbSpace::uniform(n);
    auto x = random_rv(rng, n);
    // Align the sample values with the oracle's grid so that its minimum
    // lands exactly on a kink of the piecewise-linear objective.
    for (double& v : x.values) v = std::round(v * 1e4) / 1e4;
    for (double beta : {0.0, 0.25, 0.5, 0.9}) {
      double exact = avar(space, beta, x);
      double grid = avar_grid_oracle(space, beta, x);
      CHECK(exact == doctest::Approx(grid).epsilon(1e-9).scale(1.0));
      CHECK(exact <= grid + 1e-12);  // the scan hits the true minimum
    }
  }
}

TEST_CASE("AV@R coherence-style properties") {
  auto u4 = FiniteProbSpace::uniform(4);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int rep = 0; rep < 40; ++rep) {
    auto x = random_rv(rng, 4);
    double beta = 0.5;
    double base = avar(u4, beta, x);

    double c = d(rng);
    RandomVariable shifted(x.values);
    for (double& v : shifted.values) v += c;
    CHECK(avar(u4, beta, shifted) == doctest::Approx(base + c).epsilon(1e-12));

    double lambda = std::abs(d(rng));
    RandomVariable scaled(x.values);
    for (double& v : scaled.values) v *= lambda;
    CHECK(avar(u4, beta, scaled) == doctest::Approx(lambda * base).epsilon(1e-10));

    RandomVariable bigger(x.values);
    for (double& v : bigger.values) v += std::abs(d(rng));
    CHECK(avar(u4, beta, bigger) >= base - 1e-12);

    CHECK(base >= expectation(u4, x) - 1e-12);
  }
}

TEST_CASE("conditional AV@R reproduces the blockwise values") {
  auto u4 = FiniteProbSpace::uniform(4);
  Partition p({{0, 1}, {2, 3}});
  auto c1 = conditional_avar(u4, 0.5, p, RandomVariable({3, 3, 2, 1}));
  REQUIRE(c1.block_values.size() == 2);
  CHECK(c1.block_values[0] == doctest::Approx(3.0));
  CHECK(c1.block_values[1] == doctest::Approx(2.0));
  CHECK(c1.pointwise.values == std::vector<double>{3, 3, 2, 2});

  auto c2 = conditional_avar(u4, 0.5, p, RandomVariable({1, 3, 2, 2}));
  CHECK(c2.block_values[0] == doctest::Approx(3.0));
  CHECK(c2.block_values[1] == doctest::Approx(2.0));
}

TEST_CASE("conditioning on the trivial sigma-field is plain AV@R") {
  auto u4 = FiniteProbSpace::uniform(4);
  RandomVariable x({1, 3, 2, 2});
  auto c = conditional_avar(u4, 0.5, Partition::trivial(4), x);
  REQUIRE(c.block_values.size() == 1);
  CHECK(c.block_values[0] == doctest::Approx(avar(u4, 0.5, x)));
  for (double v : c.pointwise.values) CHECK(v == doctest::Approx(2.5));
}

TEST_CASE("conditional AV@R is measurable for its partition") {
  auto u4 = FiniteProbSpace::uniform(4);
  Partition p({{0, 1}, {2, 3}});
  auto c = conditional_avar(u4, 0.5, p, RandomVariable({3, 1, 4, 1}));
  CHECK(is_measurable(c.pointwise, p));
}
