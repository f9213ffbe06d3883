#pragma once

#include "nestedrisk/space.hpp"

namespace nestedrisk {

// Average Value-at-Risk of level beta in [0,1]:
//
//   AV@R_beta[X] = min over alpha of  alpha + (1/(1-beta)) E[(X - alpha)^+]
//
// The objective is piecewise linear and convex with kinks at the sample
// values, so the minimum is attained at one of them; the implementation scans
// the sorted unique values and returns the exact minimum. beta = 1 returns
// the essential supremum (the max on a finite space).
double avar(const FiniteProbSpace& space, double beta, const RandomVariable& x);

struct ConditionalAvar {
  RandomVariable pointwise;          // block-constant vector over atoms
  std::vector<double> block_values;  // one value per partition block
};

// Conditional AV@R with respect to the sigma-field represented by p:
// blockwise AV@R of x under the conditional distribution of each block.
// Every block must carry positive probability.
ConditionalAvar conditional_avar(const FiniteProbSpace& space, double beta,
                                 const Partition& p, const RandomVariable& x);

}  // namespace nestedrisk
