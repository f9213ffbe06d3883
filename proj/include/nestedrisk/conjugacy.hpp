#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nestedrisk/extreal.hpp"

namespace nestedrisk {

// An extended-real function on a finite set, tabulated by index.
using ExtFn = std::vector<ExtReal>;

// A coupling between two finite sets: one ExtReal per (left, right) pair.
struct Coupling {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::vector<std::vector<ExtReal>> table;  // [left][right]

  void validate() const;
};

// Fenchel-Moreau conjugate with respect to a coupling:
//   f^Phi(x#) = sup over c of  Phi(c, x#) (lower-plus) (-f(c)).
// An empty left set yields the constant -inf.
ExtFn fm_conjugate(const ExtFn& f, const Coupling& c);

// Finite system for the decomposable-coupling hypothesis: sets X, Y, Z, Y'
// are index ranges, the theta maps land in Y', and phi couples Y' with Y.
struct DecomposableSystem {
  std::size_t nx = 0, ny = 0, nz = 0, nyp = 0;
  std::vector<std::vector<std::size_t>> theta_xz;  // [x][z] -> Y'
  std::vector<std::size_t> theta_x;                // [x]    -> Y'
  std::vector<std::size_t> theta_z;                // [z]    -> Y'
  std::vector<std::vector<ExtReal>> phi;           // [y'][y]

  void validate() const;
};

struct ConjugacyVerdict {
  bool pass = true;
  // Index witness: (x, y) for decomposability, x alone for the nested check.
  std::optional<std::size_t> witness_x;
  std::optional<std::size_t> witness_y;
  ExtReal lhs, rhs;
  // Set when the two possible readings of the plus in G (lower vs upper
  // Moreau addition) lead to different verdicts on this input.
  bool reading_ambiguous = false;
  std::string detail;
};

// Exhaustive check of
//   phi(theta_X(x), y) = sup_z [ phi(theta_XZ(x,z), y) (lower-plus) (-phi(theta_Z(z), y)) ]
// over X x Y. All comparisons are exact.
ConjugacyVerdict check_decomposable(const DecomposableSystem& sys);

// Builds Phi(x,(y,z)) = phi(theta_XZ(x,z), y) and
// G(y,z) = g(y) (upper-plus) phi(theta_Z(z), y), then compares
// G^Phi with g^phi o theta_X at every x, exactly. Unless exploratory is set,
// a system failing check_decomposable is a precondition error
// (std::invalid_argument); in exploratory mode the comparison runs anyway and
// a discrepancy is an expected finding, not an error.
ConjugacyVerdict check_nested_conjugate(const DecomposableSystem& sys, const ExtFn& g,
                                        bool exploratory = false);

}  // namespace nestedrisk
