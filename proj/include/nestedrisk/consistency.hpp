#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nestedrisk {

// Aggregator/factor values are real vectors; scalars are one-component
// vectors. Equality is sup-norm with a tolerance; vectors of different
// dimension are never equal and never comparable.
using Value = std::vector<double>;

bool value_equal(const Value& a, const Value& b, double tol);
double value_distance(const Value& a, const Value& b);  // sup-norm, +inf on dim mismatch

// A "less or equal" predicate. Incomparability (neither direction) is
// expressed by the predicate returning false both ways.
using OrderFn = std::function<bool(const Value&, const Value&)>;

OrderFn componentwise_order();

// A tabulated couple: aggregator A on heads x tails, factor F on tails.
struct AggregatorFactorPair {
  std::vector<std::string> heads;
  std::vector<std::string> tails;
  std::vector<std::vector<Value>> aggregator;  // [head][tail]
  std::vector<Value> factor;                   // [tail]
  // Optional numeric head values; required by check_stc, which needs an
  // order on the head set.
  std::vector<Value> head_values;

  void validate() const;  // throws std::invalid_argument on shape errors
};

// The set-valued map (h, f) -> { A(h,t) : F(t) = f }, tabulated over the
// image of F. Im(F) is computed by greedy tolerance clustering of factor
// values, centers kept in first-seen order.
struct SubaggregatorCell {
  std::size_t head = 0;
  std::size_t image_class = 0;
  std::vector<Value> values;                         // distinct under tol, first-seen order
  std::vector<std::vector<std::size_t>> provenance;  // tail indices per distinct value
};

struct Subaggregator {
  double tol = 1e-9;
  std::vector<Value> image;                             // cluster centers
  std::vector<std::vector<std::size_t>> image_members;  // tail indices per class
  std::vector<std::size_t> class_of_tail;
  std::vector<SubaggregatorCell> cells;  // row-major: head * |image| + class
  std::vector<std::string> warnings;

  const SubaggregatorCell& cell(std::size_t head, std::size_t image_class) const {
    return cells[head * image.size() + image_class];
  }
  bool is_mapping() const;  // every cell a singleton
};

// Pass/fail with a replayable witness. Witness indices refer to positions in
// the pair's head/tail enumeration; at most one witness kind is set.
struct Verdict {
  struct TripleWitness {  // (h, t, t')
    std::size_t head = 0, tail = 0, tail_prime = 0;
  };
  struct QuadWitness {  // (h, h', t, t')
    std::size_t head = 0, head_prime = 0, tail = 0, tail_prime = 0;
  };
  struct CellWitness {
    std::size_t head = 0, image_class = 0;
    std::vector<Value> values;
  };

  bool pass = true;
  std::optional<TripleWitness> triple;
  std::optional<QuadWitness> quad;
  std::optional<CellWitness> cell;
  std::optional<double> discrepancy;
  std::string detail;
  std::vector<std::string> warnings;
};

Subaggregator build_subaggregator(const AggregatorFactorPair& pair, double tol);

// Weak Time Consistency: F(t) = F(t') must force A(h,t) = A(h,t').
// Decided by direct enumeration over (h, t, t') and cross-checked against
// singleton-ness of the subaggregator cells; a disagreement between the two
// routes (possible only through tolerance clustering artifacts) is surfaced
// as a warning, with the enumeration route's verdict returned.
Verdict check_wtc(const AggregatorFactorPair& pair, double tol = 1e-9);

// Usual Time Consistency: F(t) <= F(t') must force A(h,t) <= A(h,t').
// Cross-checked against "subaggregator is a mapping increasing in its second
// argument". Comparators are probed for reflexivity on the value sets.
Verdict check_utc(const AggregatorFactorPair& pair, const OrderFn& leq_a,
                  const OrderFn& leq_f, double tol = 1e-9);

// Strong Time Consistency: h <= h' and F(t) <= F(t') must force
// A(h,t) <= A(h',t'). Requires pair.head_values.
Verdict check_stc(const AggregatorFactorPair& pair, const OrderFn& leq_h,
                  const OrderFn& leq_a, const OrderFn& leq_f, double tol = 1e-9);

// The nested factorization A(h,t) = S(h, F(t)): passes iff every cell is a
// singleton and the tabulated aggregator matches the cell values, reporting
// the maximum numeric discrepancy.
Verdict verify_nested_formula(const AggregatorFactorPair& pair, const Subaggregator& sub);

}  // namespace nestedrisk
