#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "nestedrisk/properties.hpp"
#include "nestedrisk/riskmeasures.hpp"

using namespace nestedrisk;

namespace {

CallableMapping avar_mapping(double beta, std::size_t n, double lo = -3, double hi = 3) {
  CallableMapping m;
  m.arg_dims = {n};
  m.box.assign(n, {lo, hi});
  m.eval = [beta, n](const std::vector<std::vector<double>>& args) {
    auto space = FiniteProbSpace::uniform(n);
    return std::vector<double>{avar(space, beta, RandomVariable(args[0]))};
  };
  return m;
}

}  // namespace

TEST_CASE("monotonicity: AV@R passes, negated first coordinate fails") {
  auto m = avar_mapping(0.5, 4);
  auto v = check_monotone_first_arg(m, 500, 1, 1e-9);
  CHECK(v.pass);
  CHECK(v.samples_run == 500);

  CallableMapping bad;
  bad.arg_dims = {2};
  bad.box = {{-1, 1}, {-1, 1}};
  bad.eval = [](const std::vector<std::vector<double>>& args) {
    return std::vector<double>{-args[0][0] + args[0][1]};
  };
  auto w = check_monotone_first_arg(bad, 500, 1, 1e-9);
  CHECK_FALSE(w.pass);
  REQUIRE(w.witness.has_value());
  // Replay the witness through the mapping.
  auto la = bad.eval(w.witness->args_a);
  auto lb = bad.eval(w.witness->args_b);
  CHECK(la[0] > lb[0] + 1e-9);
}

TEST_CASE("monotonicity needs a box that admits comparable pairs") {
  CallableMapping degenerate;
  degenerate.arg_dims = {1};
  degenerate.box = {{2.0, 2.0}};  // a single point: no strict increase possible
  degenerate.eval = [](const std::vector<std::vector<double>>& args) {
    return args[0];
  };
  CHECK_NOTHROW(check_monotone_first_arg(degenerate, 10, 1));
}

TEST_CASE("positive homogeneity of the AV@R aggregation chain") {
  // a(h, t) = AV@R(h + t), f(t) = AV@R(t), s(h, y) = h + y on scalars;
  // every piece is positively homogeneous, and so is the chain.
  const std::size_t n = 4;
  CallableMapping a;
  a.arg_dims = {1, n};
  a.box.assign(1 + n, {-2, 2});
  a.eval = [](const std::vector<std::vector<double>>& args) {
    auto space = FiniteProbSpace::uniform(args[1].size());
    std::vector<double> sum = args[1];
    for (double& v : sum) v += args[0][0];
    return std::vector<double>{avar(space, 0.5, RandomVariable(sum))};
  };
  CallableMapping f = avar_mapping(0.5, n, -2, 2);
  CallableMapping s;
  s.arg_dims = {1, 1};
  s.box.assign(2, {-2, 2});
  s.eval = [](const std::vector<std::vector<double>>& args) {
    return std::vector<double>{args[0][0] + args[1][0]};
  };
  auto v = check_positive_homogeneity(a, f, s, {0.5, 1.0, 2.0, 3.5}, 300, 7, 1e-9);
  CHECK(v.pass);

  // Adding a constant to s breaks homogeneity of the chain.
  s.eval = [](const std::vector<std::vector<double>>& args) {
    return std::vector<double>{args[0][0] + args[1][0] + 1.0};
  };
  auto w = check_positive_homogeneity(a, f, s, {2.0}, 300, 7, 1e-9);
  CHECK_FALSE(w.pass);
  CHECK(w.witness.has_value());
}

TEST_CASE("translation invariance: identity and AV@R pass, square fails") {
  CallableMapping ident;
  ident.arg_dims = {3};
  ident.box.assign(3, {-2, 2});
  ident.eval = [](const std::vector<std::vector<double>>& args) { return args[0]; };
  std::vector<std::vector<double>> shifts = {{1, 1, 1}, {0.5, -2, 3}};
  CHECK(check_translation_invariance(ident, shifts, 200, 3, 1e-12).pass);

  // AV@R maps R^4 to R, so only constant shift vectors are meaningful.
  auto m = avar_mapping(0.5, 4);
  std::vector<std::vector<double>> consts = {{1, 1, 1, 1}, {-0.75, -0.75, -0.75, -0.75}};
  CHECK(check_translation_invariance(m, consts, 200, 3, 1e-9).pass);
  std::vector<std::vector<double>> skew = {{1, 0, 0, 0}};
  CHECK_THROWS_AS(check_translation_invariance(m, skew, 10, 3), std::invalid_argument);

  CallableMapping square;
  square.arg_dims = {1};
  square.box = {{-2, 2}};
  square.eval = [](const std::vector<std::vector<double>>& args) {
    return std::vector<double>{args[0][0] * args[0][0]};
  };
  auto v = check_translation_invariance(square, {{1.0}}, 200, 3, 1e-9);
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->gap > 1e-9);
}

TEST_CASE("midpoint convexity: affine and AV@R pass") {
  CallableMapping affine;
  affine.arg_dims = {2};
  affine.box.assign(2, {-3, 3});
  affine.eval = [](const std::vector<std::vector<double>>& args) {
    return std::vector<double>{2 * args[0][0] - args[0][1] + 1};
  };
  CHECK(check_midpoint_convexity(affine, 400, 5, 1e-12).pass);
  CHECK(check_midpoint_convexity(avar_mapping(0.5, 4), 400, 5, 1e-9).pass);
}

TEST_CASE("h + ln f(t) aggregation of exponential factors is not convex") {
  // With F(t) = e^t and S(h, y) = h + ln y, the composed aggregation
  // A(h, t) = h + t is affine, but S itself is strictly concave in y, so
  // midpoint convexity of S fails with an explicit witness.
  CallableMapping s;
  s.arg_dims = {1, 1};
  s.box = {{-1, 1}, {0.5, 4.0}};
  s.eval = [](const std::vector<std::vector<double>>& args) {
    return std::vector<double>{args[0][0] + std::log(args[1][0])};
  };
  auto v = check_midpoint_convexity(s, 400, 9, 1e-9);
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  // Replay: midpoint value strictly above the chord.
  const auto& w = *v.witness;
  std::vector<std::vector<double>> mid = w.args_a;
  for (std::size_t i = 0; i < mid.size(); ++i) {
    for (std::size_t j = 0; j < mid[i].size(); ++j) {
      mid[i][j] = (w.args_a[i][j] + w.args_b[i][j]) / 2;
    }
  }
  double at_mid = s.eval(mid)[0];
  double chord = (s.eval(w.args_a)[0] + s.eval(w.args_b)[0]) / 2;
  CHECK(at_mid > chord + 1e-9);
}

TEST_CASE("mapping validation rejects inconsistent boxes") {
  CallableMapping m;
  m.arg_dims = {2};
  m.box = {{0, 1}};  // wrong length
  m.eval = [](const std::vector<std::vector<double>>& args) { return args[0]; };
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m.box = {{1, 0}, {0, 1}};  // inverted interval
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}

TEST_CASE("property checks are reproducible for a fixed seed") {
  auto m = avar_mapping(0.9, 5);
  auto v1 = check_monotone_first_arg(m, 200, 42, 1e-9);
  auto v2 = check_monotone_first_arg(m, 200, 42, 1e-9);
  CHECK(v1.pass == v2.pass);
  CHECK(v1.samples_run == v2.samples_run);
}
