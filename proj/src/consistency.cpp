#include "nestedrisk/consistency.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nestedrisk {

bool value_equal(const Value& a, const Value& b, double tol) {
  return value_distance(a, b) <= tol;
}

double value_distance(const Value& a, const Value& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

OrderFn componentwise_order() {
  return [](const Value& a, const Value& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  };
}

void AggregatorFactorPair::validate() const {
  if (heads.empty() || tails.empty()) {
    throw std::invalid_argument("pair: head and tail sets must be nonempty");
  }
  if (aggregator.size() != heads.size()) {
    throw std::invalid_argument("pair: aggregator must have one row per head");
  }
  for (const auto& row : aggregator) {
    if (row.size() != tails.size()) {
      throw std::invalid_argument("pair: aggregator row length must match tails");
    }
    for (const auto& v : row) {
      if (v.empty()) throw std::invalid_argument("pair: empty aggregator value");
    }
  }
  if (factor.size() != tails.size()) {
    throw std::invalid_argument("pair: factor must have one entry per tail");
  }
  for (const auto& v : factor) {
    if (v.empty()) throw std::invalid_argument("pair: empty factor value");
  }
  if (!head_values.empty() && head_values.size() != heads.size()) {
    throw std::invalid_argument("pair: head_values length must match heads");
  }
}

bool Subaggregator::is_mapping() const {
  for (const auto& c : cells) {
    if (c.values.size() != 1) return false;
  }
  return true;
}

Subaggregator build_subaggregator(const AggregatorFactorPair& pair, double tol) {
  pair.validate();
  Subaggregator sub;
  sub.tol = tol;

  // Greedy clustering of factor values, centers in first-seen order.
  sub.class_of_tail.resize(pair.tails.size());
  for (std::size_t t = 0; t < pair.tails.size(); ++t) {
    const Value& f = pair.factor[t];
    std::size_t assigned = sub.image.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < sub.image.size(); ++c) {
      double d = value_distance(f, sub.image[c]);
      if (d <= tol && d < best) {
        assigned = c;
        best = d;
      }
    }
    if (assigned == sub.image.size()) {
      // Ambiguity diagnostic: a new center within (tol, 2*tol] of an existing
      // one means two tol-balls overlap and the greedy assignment is a choice.
      for (std::size_t c = 0; c < sub.image.size(); ++c) {
        double d = value_distance(f, sub.image[c]);
        if (d > tol && d <= 2.0 * tol) {
          sub.warnings.push_back("factor value of tail '" + pair.tails[t] +
                                 "' lies within (tol, 2*tol] of image class " +
                                 std::to_string(c) +
                                 "; greedy nearest-center assignment applied");
        }
      }
      sub.image.push_back(f);
      sub.image_members.emplace_back();
    }
    sub.image_members[assigned].push_back(t);
    sub.class_of_tail[t] = assigned;
  }

  sub.cells.resize(pair.heads.size() * sub.image.size());
  for (std::size_t h = 0; h < pair.heads.size(); ++h) {
    for (std::size_t c = 0; c < sub.image.size(); ++c) {
      SubaggregatorCell& cell = sub.cells[h * sub.image.size() + c];
      cell.head = h;
      cell.image_class = c;
      for (std::size_t t : sub.image_members[c]) {
        const Value& a = pair.aggregator[h][t];
        std::size_t slot = cell.values.size();
        for (std::size_t k = 0; k < cell.values.size(); ++k) {
          if (value_equal(a, cell.values[k], tol)) {
            slot = k;
            break;
          }
        }
        if (slot == cell.values.size()) {
          cell.values.push_back(a);
          cell.provenance.emplace_back();
        }
        cell.provenance[slot].push_back(t);
      }
    }
  }
  return sub;
}

namespace {

void probe_reflexivity(const OrderFn& leq, const std::vector<const Value*>& values,
                       const char* what) {
  for (const Value* v : values) {
    if (!leq(*v, *v)) {
      throw std::invalid_argument(std::string("comparator on ") + what +
                                  " violates reflexivity");
    }
  }
}

std::vector<const Value*> factor_values(const AggregatorFactorPair& pair) {
  std::vector<const Value*> out;
  for (const auto& v : pair.factor) out.push_back(&v);
  return out;
}

std::vector<const Value*> aggregator_values(const AggregatorFactorPair& pair) {
  std::vector<const Value*> out;
  for (const auto& row : pair.aggregator) {
    for (const auto& v : row) out.push_back(&v);
  }
  return out;
}

void note_route_disagreement(Verdict& v, bool enum_pass, bool sub_pass) {
  if (enum_pass != sub_pass) {
    v.warnings.push_back(
        "enumeration route and subaggregator route disagree (tolerance "
        "clustering artifact); the enumeration verdict is reported");
  }
}

}  // namespace

Verdict check_wtc(const AggregatorFactorPair& pair, double tol) {
  pair.validate();
  Verdict verdict;

  // Route 1: first lexicographic (h, t, t') with F(t)=F(t'), A(h,t)!=A(h,t').
  bool enum_pass = true;
  for (std::size_t h = 0; h < pair.heads.size() && enum_pass; ++h) {
    for (std::size_t t = 0; t < pair.tails.size() && enum_pass; ++t) {
      for (std::size_t tp = t + 1; tp < pair.tails.size(); ++tp) {
        if (!value_equal(pair.factor[t], pair.factor[tp], tol)) continue;
        if (value_equal(pair.aggregator[h][t], pair.aggregator[h][tp], tol)) continue;
        enum_pass = false;
        verdict.pass = false;
        verdict.triple = Verdict::TripleWitness{h, t, tp};
        verdict.discrepancy =
            value_distance(pair.aggregator[h][t], pair.aggregator[h][tp]);
        verdict.detail = "F('" + pair.tails[t] + "') = F('" + pair.tails[tp] +
                         "') but A('" + pair.heads[h] + "', .) differs";
        break;
      }
    }
  }

  // Route 2: the subaggregator must be single-valued everywhere.
  Subaggregator sub = build_subaggregator(pair, tol);
  verdict.warnings.insert(verdict.warnings.end(), sub.warnings.begin(),
                          sub.warnings.end());
  note_route_disagreement(verdict, enum_pass, sub.is_mapping());
  if (verdict.pass) verdict.detail = "weak time consistent";
  return verdict;
}

Verdict check_utc(const AggregatorFactorPair& pair, const OrderFn& leq_a,
                  const OrderFn& leq_f, double tol) {
  pair.validate();
  probe_reflexivity(leq_a, aggregator_values(pair), "aggregator values");
  probe_reflexivity(leq_f, factor_values(pair), "factor values");

  Verdict verdict;
  bool enum_pass = true;
  for (std::size_t h = 0; h < pair.heads.size() && enum_pass; ++h) {
    for (std::size_t t = 0; t < pair.tails.size() && enum_pass; ++t) {
      for (std::size_t tp = 0; tp < pair.tails.size(); ++tp) {
        if (!leq_f(pair.factor[t], pair.factor[tp])) continue;
        if (leq_a(pair.aggregator[h][t], pair.aggregator[h][tp])) continue;
        enum_pass = false;
        verdict.pass = false;
        verdict.triple = Verdict::TripleWitness{h, t, tp};
        verdict.detail = "F('" + pair.tails[t] + "') <= F('" + pair.tails[tp] +
                         "') but not A('" + pair.heads[h] + "', t) <= A(., t')";
        break;
      }
    }
  }

  // Cross-check: subaggregator is a mapping increasing in its second
  // argument over comparable pairs in Im(F).
  Subaggregator sub = build_subaggregator(pair, tol);
  bool sub_pass = sub.is_mapping();
  if (sub_pass) {
    for (std::size_t h = 0; h < pair.heads.size() && sub_pass; ++h) {
      for (std::size_t c1 = 0; c1 < sub.image.size() && sub_pass; ++c1) {
        for (std::size_t c2 = 0; c2 < sub.image.size(); ++c2) {
          if (!leq_f(sub.image[c1], sub.image[c2])) continue;
          if (!leq_a(sub.cell(h, c1).values.front(), sub.cell(h, c2).values.front())) {
            sub_pass = false;
            break;
          }
        }
      }
    }
  }
  verdict.warnings.insert(verdict.warnings.end(), sub.warnings.begin(),
                          sub.warnings.end());
  note_route_disagreement(verdict, enum_pass, sub_pass);
  if (verdict.pass) verdict.detail = "usual time consistent";
  return verdict;
}

Verdict check_stc(const AggregatorFactorPair& pair, const OrderFn& leq_h,
                  const OrderFn& leq_a, const OrderFn& leq_f, double tol) {
  pair.validate();
  if (pair.head_values.empty()) {
    throw std::invalid_argument("check_stc: pair carries no head values to order");
  }
  std::vector<const Value*> hv;
  for (const auto& v : pair.head_values) hv.push_back(&v);
  probe_reflexivity(leq_h, hv, "head values");
  probe_reflexivity(leq_a, aggregator_values(pair), "aggregator values");
  probe_reflexivity(leq_f, factor_values(pair), "factor values");

  Verdict verdict;
  bool enum_pass = true;
  for (std::size_t h = 0; h < pair.heads.size() && enum_pass; ++h) {
    for (std::size_t hp = 0; hp < pair.heads.size() && enum_pass; ++hp) {
      if (!leq_h(pair.head_values[h], pair.head_values[hp])) continue;
      for (std::size_t t = 0; t < pair.tails.size() && enum_pass; ++t) {
        for (std::size_t tp = 0; tp < pair.tails.size(); ++tp) {
          if (!leq_f(pair.factor[t], pair.factor[tp])) continue;
          if (leq_a(pair.aggregator[h][t], pair.aggregator[hp][tp])) continue;
          enum_pass = false;
          verdict.pass = false;
          verdict.quad = Verdict::QuadWitness{h, hp, t, tp};
          verdict.detail = "h = '" + pair.heads[h] + "' <= '" + pair.heads[hp] +
                           "' and F('" + pair.tails[t] + "') <= F('" +
                           pair.tails[tp] + "') but not A(h,t) <= A(h',t')";
          break;
        }
      }
    }
  }

  // Cross-check: subaggregator is a mapping increasing in both arguments.
  Subaggregator sub = build_subaggregator(pair, tol);
  bool sub_pass = sub.is_mapping();
  if (sub_pass) {
    for (std::size_t h = 0; h < pair.heads.size() && sub_pass; ++h) {
      for (std::size_t hp = 0; hp < pair.heads.size() && sub_pass; ++hp) {
        if (!leq_h(pair.head_values[h], pair.head_values[hp])) continue;
        for (std::size_t c1 = 0; c1 < sub.image.size() && sub_pass; ++c1) {
          for (std::size_t c2 = 0; c2 < sub.image.size(); ++c2) {
            if (!leq_f(sub.image[c1], sub.image[c2])) continue;
            if (!leq_a(sub.cell(h, c1).values.front(),
                       sub.cell(hp, c2).values.front())) {
              sub_pass = false;
              break;
            }
          }
        }
      }
    }
  }
  verdict.warnings.insert(verdict.warnings.end(), sub.warnings.begin(),
                          sub.warnings.end());
  note_route_disagreement(verdict, enum_pass, sub_pass);
  if (verdict.pass) verdict.detail = "strong time consistent";
  return verdict;
}

Verdict verify_nested_formula(const AggregatorFactorPair& pair, const Subaggregator& sub) {
  pair.validate();
  Verdict verdict;
  for (const auto& cell : sub.cells) {
    if (cell.values.size() != 1) {
      verdict.pass = false;
      verdict.cell =
          Verdict::CellWitness{cell.head, cell.image_class, cell.values};
      verdict.detail = "subaggregator cell (head '" + pair.heads[cell.head] +
                       "', image class " + std::to_string(cell.image_class) +
                       ") holds " + std::to_string(cell.values.size()) +
                       " distinct values";
      break;
    }
  }
  double max_gap = 0.0;
  if (verdict.pass) {
    for (std::size_t h = 0; h < pair.heads.size(); ++h) {
      for (std::size_t t = 0; t < pair.tails.size(); ++t) {
        const Value& through_cell =
            sub.cell(h, sub.class_of_tail[t]).values.front();
        max_gap = std::max(max_gap,
                           value_distance(pair.aggregator[h][t], through_cell));
      }
    }
    verdict.detail = "nested formula A(h,t) = S(h, F(t)) holds";
  }
  verdict.discrepancy = max_gap;
  verdict.warnings = sub.warnings;
  return verdict;
}

}  // namespace nestedrisk
