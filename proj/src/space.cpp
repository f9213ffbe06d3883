#include "nestedrisk/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nestedrisk {

FiniteProbSpace::FiniteProbSpace(std::vector<std::string> atom_labels,
                                 std::vector<double> w)
    : atoms(std::move(atom_labels)), weights(std::move(w)) {
  if (atoms.empty()) {
    throw std::invalid_argument("FiniteProbSpace: need at least one atom");
  }
  if (atoms.size() != weights.size()) {
    throw std::invalid_argument("FiniteProbSpace: atoms/weights length mismatch");
  }
  double total = 0.0;
  for (double p : weights) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("FiniteProbSpace: negative or NaN weight");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("FiniteProbSpace: weights must sum to 1");
  }
}

FiniteProbSpace FiniteProbSpace::uniform(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
  // Normalize explicitly so the sum check passes for every n.
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  double total = std::accumulate(w.begin(), w.end() - 1, 0.0);
  w.back() = 1.0 - total;
  return FiniteProbSpace(std::move(labels), std::move(w));
}

Partition Partition::singletons(std::size_t n_atoms) {
  std::vector<std::vector<std::size_t>> b(n_atoms);
  for (std::size_t i = 0; i < n_atoms; ++i) b[i] = {i};
  return Partition(std::move(b));
}

Partition Partition::trivial(std::size_t n_atoms) {
  std::vector<std::size_t> all(n_atoms);
  std::iota(all.begin(), all.end(), 0);
  return Partition({std::move(all)});
}

void Partition::validate(std::size_t n_atoms) const {
  std::vector<bool> seen(n_atoms, false);
  std::size_t covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw std::invalid_argument("Partition: empty block");
    }
    for (std::size_t i : block) {
      if (i >= n_atoms) {
        throw std::invalid_argument("Partition: atom index out of range");
      }
      if (seen[i]) {
        throw std::invalid_argument("Partition: blocks are not disjoint");
      }
      seen[i] = true;
      ++covered;
    }
  }
  if (covered != n_atoms) {
    throw std::invalid_argument("Partition: blocks do not cover all atoms");
  }
}

std::size_t Partition::block_of(std::size_t atom) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i : blocks[b]) {
      if (i == atom) return b;
    }
  }
  throw std::out_of_range("Partition: atom not in any block");
}

Partition partition_from_sigma_field(
    const std::vector<std::vector<std::size_t>>& sets, std::size_t n_atoms) {
  std::set<std::set<std::size_t>> field;
  for (const auto& s : sets) {
    std::set<std::size_t> canon(s.begin(), s.end());
    for (std::size_t i : canon) {
      if (i >= n_atoms) {
        throw std::invalid_argument("sigma-field: atom index out of range");
      }
    }
    field.insert(std::move(canon));
  }

  std::set<std::size_t> full;
  for (std::size_t i = 0; i < n_atoms; ++i) full.insert(i);
  if (!field.count(std::set<std::size_t>{}) || !field.count(full)) {
    throw std::invalid_argument("sigma-field: must contain the empty set and the full set");
  }
  for (const auto& s : field) {
    std::set<std::size_t> comp;
    std::set_difference(full.begin(), full.end(), s.begin(), s.end(),
                        std::inserter(comp, comp.begin()));
    if (!field.count(comp)) {
      throw std::invalid_argument("sigma-field: not closed under complement");
    }
    for (const auto& t : field) {
      std::set<std::size_t> uni = s;
      uni.insert(t.begin(), t.end());
      if (!field.count(uni)) {
        throw std::invalid_argument("sigma-field: not closed under union");
      }
    }
  }

  // The partition atom containing i is the intersection of all members
  // containing i; on a finite field two atoms either coincide or are disjoint.
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> assigned(n_atoms, false);
  for (std::size_t i = 0; i < n_atoms; ++i) {
    if (assigned[i]) continue;
    std::set<std::size_t> atom = full;
    for (const auto& s : field) {
      if (s.count(i)) {
        std::set<std::size_t> inter;
        std::set_intersection(atom.begin(), atom.end(), s.begin(), s.end(),
                              std::inserter(inter, inter.begin()));
        atom = std::move(inter);
      }
    }
    std::vector<std::size_t> block(atom.begin(), atom.end());
    for (std::size_t j : block) assigned[j] = true;
    blocks.push_back(std::move(block));
  }
  Partition p(std::move(blocks));
  p.validate(n_atoms);
  return p;
}

namespace {
void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}
}  // namespace

double expectation(const FiniteProbSpace& space, const RandomVariable& x) {
  require_same_size(space.size(), x.size(), "expectation");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += space.weights[i] * x.values[i];
  }
  return acc;
}

bool is_measurable(const RandomVariable& x, const Partition& p, double tol) {
  std::size_t n = 0;
  for (const auto& b : p.blocks) n += b.size();
  require_same_size(n, x.size(), "is_measurable");
  for (const auto& block : p.blocks) {
    double ref = x.values[block.front()];
    for (std::size_t i : block) {
      if (std::abs(x.values[i] - ref) > tol) return false;
    }
  }
  return true;
}

FiniteProbSpace conditional_distribution(const FiniteProbSpace& space,
                                         const Partition& p,
                                         std::size_t block_index) {
  if (block_index >= p.blocks.size()) {
    throw std::out_of_range("conditional_distribution: block index out of range");
  }
  const auto& block = p.blocks[block_index];
  double mass = 0.0;
  for (std::size_t i : block) mass += space.weights[i];
  if (mass <= 0.0) {
    throw std::invalid_argument("conditional_distribution: block has zero probability");
  }
  std::vector<std::string> labels;
  std::vector<double> w;
  labels.reserve(block.size());
  w.reserve(block.size());
  for (std::size_t i : block) {
    labels.push_back(space.atoms[i]);
    w.push_back(space.weights[i] / mass);
  }
  // Absorb renormalization round-off into the heaviest entry.
  double total = 0.0;
  for (double v : w) total += v;
  auto it = std::max_element(w.begin(), w.end());
  *it += 1.0 - total;
  return FiniteProbSpace(std::move(labels), std::move(w));
}

}  // namespace nestedrisk
