#include "nestedrisk/riskmeasures.hpp"

#include <algorithm>
#include <stdexcept>

namespace nestedrisk {

double avar(const FiniteProbSpace& space, double beta, const RandomVariable& x) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("avar: beta must lie in [0,1]");
  }
  if (space.size() != x.size()) {
    throw std::invalid_argument("avar: dimension mismatch");
  }
  if (beta == 1.0) {
    return *std::max_element(x.values.begin(), x.values.end());
  }

  std::vector<double> candidates = x.values;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  const double scale = 1.0 / (1.0 - beta);
  double best = 0.0;
  bool first = true;
  // Ascending scan; keeping the strict '<' makes the smallest minimizing
  // alpha the winner on ties.
  for (double alpha : candidates) {
    double tail = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double excess = x.values[i] - alpha;
      if (excess > 0.0) tail += space.weights[i] * excess;
    }
    double obj = alpha + scale * tail;
    if (first || obj < best) {
      best = obj;
      first = false;
    }
  }
  return best;
}

ConditionalAvar conditional_avar(const FiniteProbSpace& space, double beta,
                                 const Partition& p, const RandomVariable& x) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("conditional_avar: beta must lie in [0,1]");
  }
  if (space.size() != x.size()) {
    throw std::invalid_argument("conditional_avar: dimension mismatch");
  }
  p.validate(space.size());

  ConditionalAvar result;
  result.pointwise.values.resize(space.size());
  result.block_values.reserve(p.blocks.size());
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    FiniteProbSpace cond = conditional_distribution(space, p, b);
    std::vector<double> restricted;
    restricted.reserve(p.blocks[b].size());
    for (std::size_t i : p.blocks[b]) restricted.push_back(x.values[i]);
    double v = avar(cond, beta, RandomVariable(std::move(restricted)));
    result.block_values.push_back(v);
    for (std::size_t i : p.blocks[b]) result.pointwise.values[i] = v;
  }
  return result;
}

}  // namespace nestedrisk
