#pragma once

#include <string>
#include <vector>

namespace nestedrisk {

// Finite probability space: labelled atoms with nonnegative weights summing
// to one. Zero-weight atoms are allowed.
struct FiniteProbSpace {
  std::vector<std::string> atoms;
  std::vector<double> weights;

  FiniteProbSpace() = default;
  FiniteProbSpace(std::vector<std::string> atom_labels, std::vector<double> w);

  // Atoms labelled "w0".."w{n-1}" with equal weight.
  static FiniteProbSpace uniform(std::size_t n);

  std::size_t size() const { return atoms.size(); }
};

// A finite sigma-field, stored as the partition of the sample space into its
// atoms. Blocks hold 0-based atom indices, are disjoint and cover everything.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  Partition() = default;
  explicit Partition(std::vector<std::vector<std::size_t>> b) : blocks(std::move(b)) {}

  static Partition singletons(std::size_t n_atoms);
  static Partition trivial(std::size_t n_atoms);

  // Throws std::invalid_argument unless blocks are disjoint, nonempty and
  // cover {0..n_atoms-1}.
  void validate(std::size_t n_atoms) const;

  std::size_t block_of(std::size_t atom) const;
};

// Converts a sigma-field given as a set of subsets (each subset a sorted-or-not
// list of atom indices) into its atom partition. Rejects collections that are
// not closed under complement and union, or that miss the empty/full set.
Partition partition_from_sigma_field(
    const std::vector<std::vector<std::size_t>>& sets, std::size_t n_atoms);

// A random variable over a finite space: one real value per atom.
struct RandomVariable {
  std::vector<double> values;

  RandomVariable() = default;
  explicit RandomVariable(std::vector<double> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
};

double expectation(const FiniteProbSpace& space, const RandomVariable& x);

// True iff x is constant on every block of p up to tol.
bool is_measurable(const RandomVariable& x, const Partition& p, double tol = 1e-9);

// The conditional distribution given a block: weights restricted to the block
// and renormalized. Throws on blocks of zero probability.
FiniteProbSpace conditional_distribution(const FiniteProbSpace& space,
                                         const Partition& p,
                                         std::size_t block_index);

}  // namespace nestedrisk
