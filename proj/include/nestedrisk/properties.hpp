#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nestedrisk {

// A black-box mapping from a tuple of real vectors to a real vector, with a
// box domain to sample from. The evaluator must be deterministic.
struct CallableMapping {
  std::vector<std::size_t> arg_dims;
  std::function<std::vector<double>(const std::vector<std::vector<double>>&)> eval;
  // One (lo, hi) interval per flattened coordinate (sum of arg_dims).
  std::vector<std::pair<double, double>> box;

  std::size_t total_dim() const;
  void validate() const;
};

// Outcome of a sampled property check. A pass is a sample-bounded claim:
// re-running with the same seed reproduces it exactly.
struct PropertyVerdict {
  bool pass = true;
  std::uint64_t samples_run = 0;

  struct Witness {
    std::vector<std::vector<double>> args_a;
    std::vector<std::vector<double>> args_b;  // empty when the check needs one point
    std::vector<double> lhs, rhs;
    double gap = 0.0;
  };
  std::optional<Witness> witness;
  std::string detail;
};

// Samples pairs x <= x' (componentwise) in the first argument, holding the
// remaining arguments fixed per sample; fails on m(x,..) > m(x',..) + tol
// in any output component. Throws std::runtime_error if no comparable pair
// could be generated.
PropertyVerdict check_monotone_first_arg(const CallableMapping& m,
                                         std::uint64_t samples, std::uint64_t seed,
                                         double tol = 1e-7);

// Joint positive homogeneity along the chain s(l*h, l*f(t)) = l*s(h, f(t)),
// with the homogeneity of a and f checked independently on the same samples.
// a takes (h, t), f takes (t), s takes (h, f(t)).
PropertyVerdict check_positive_homogeneity(const CallableMapping& a,
                                           const CallableMapping& f,
                                           const CallableMapping& s,
                                           const std::vector<double>& lambdas,
                                           std::uint64_t samples, std::uint64_t seed,
                                           double tol = 1e-7);

// m(x + i) = m(x) + i for every listed invariant vector i. When m's output
// dimension differs from the input dimension, i must be a constant vector and
// the constant is added to every output component.
PropertyVerdict check_translation_invariance(const CallableMapping& m,
                                             const std::vector<std::vector<double>>& invariants,
                                             std::uint64_t samples, std::uint64_t seed,
                                             double tol = 1e-7);

// Midpoint convexity: m((p+q)/2) <= (m(p)+m(q))/2 + tol over sampled pairs
// of argument tuples. A pass is evidence, not a proof.
PropertyVerdict check_midpoint_convexity(const CallableMapping& m,
                                         std::uint64_t samples, std::uint64_t seed,
                                         double tol = 1e-7);

}  // namespace nestedrisk
