#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nestedrisk/consistency.hpp"
#include "nestedrisk/space.hpp"

namespace nestedrisk {

// Integer lattice point, one coordinate per atom.
using Point = std::vector<int>;

Point point_add(const Point& a, const Point& b);
Point point_sub(const Point& a, const Point& b);
bool point_leq(const Point& a, const Point& b);  // componentwise

// A finite rectangular window of Z^dim, the desk-scale stand-in for the
// ambient group. Enumeration is lexicographic and capped.
struct LatticeWindow {
  std::vector<int> lo, hi;

  LatticeWindow() = default;
  LatticeWindow(std::vector<int> lower, std::vector<int> upper);
  static LatticeWindow cube(std::size_t dim, int lower, int upper);

  std::size_t dim() const { return lo.size(); }
  std::size_t size() const;
  bool contains(const Point& p) const;
};

inline constexpr std::size_t kDefaultEnumCap = 1'000'000;

// Throws std::invalid_argument when the window exceeds the cap.
std::vector<Point> enumerate_window(const LatticeWindow& window,
                                    std::size_t cap = kDefaultEnumCap);

// A translation invariant mapping on Z^dim whose output lands in the subgroup
// of block-constant vectors of its partition. The identity uses the singleton
// partition; the global max/min the trivial one.
struct GroupTIMapping {
  enum class Kind { conditional_max, conditional_min, global_max, identity, table };

  Kind kind = Kind::identity;
  Partition partition;
  std::map<Point, Point> table;  // only for Kind::table

  static GroupTIMapping conditional_max_on(Partition p);
  static GroupTIMapping conditional_min_on(Partition p);
  static GroupTIMapping global_max_on(std::size_t dim);
  static GroupTIMapping identity_on(std::size_t dim);

  Point operator()(const Point& t) const;
};

bool is_block_constant(const Point& p, const Partition& partition);

struct LatticeVerdict {
  bool pass = true;
  std::optional<Point> witness;
  std::optional<Point> witness_shift;
  std::string detail;
};

// Exhaustive check of m(t + f) = m(t) + f over window x shifts. Shifts must
// be block-constant for m's partition.
LatticeVerdict check_group_translation_invariance(const GroupTIMapping& m,
                                                  const LatticeWindow& window,
                                                  const std::vector<Point>& shifts,
                                                  std::size_t cap = kDefaultEnumCap);

// All window points t with m(t) <= 0 componentwise.
std::vector<Point> acceptance_set(const GroupTIMapping& m, const LatticeWindow& window,
                                  std::size_t cap = kDefaultEnumCap);

// Intersection with the block-constant sublattice of the given partition.
std::vector<Point> restrict_to_subgroup(const std::vector<Point>& points,
                                        const Partition& partition);

struct AcceptanceVerdict {
  bool pass = true;
  // Route (a): pointwise criterion rho(F(t)) = rho(t) over the window.
  bool pointwise_pass = true;
  std::optional<Point> pointwise_witness;
  // Route (b): boundary-guarded Minkowski-sum comparison of acceptance sets.
  bool minkowski_pass = true;
  std::optional<Point> minkowski_witness;
  double guarded_fraction = 1.0;  // share of membership tests with in-window certificates
  std::string detail;
};

// Decides the acceptance-set identity  A_F (+) A_{rho|F} = A_rho  two ways
// that must agree: (a) the pointwise criteria rho(F(t)) <= rho(t) and
// rho(F(t)) >= rho(t) for every window point, and (b) a direct Minkowski-sum
// comparison restricted to sums whose decompositions stay inside the window.
// Throws when rho is not increasing on the window or when f(0) != 0.
AcceptanceVerdict check_acceptance_identity(const GroupTIMapping& rho,
                                            const GroupTIMapping& f,
                                            const LatticeWindow& window,
                                            std::size_t cap = kDefaultEnumCap);

// Tabulates the couple (A_rho, F) with A_rho(h, t) = rho(h + t): heads are
// the block-constant points of head_window for rho's partition, tails the
// whole tail_window. Feeds the consistency module.
AggregatorFactorPair aggregator_from_rho(const GroupTIMapping& rho,
                                         const GroupTIMapping& f,
                                         const LatticeWindow& head_window,
                                         const LatticeWindow& tail_window,
                                         std::size_t cap = kDefaultEnumCap);

}  // namespace nestedrisk
