#include "nestedrisk/acceptance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nestedrisk {

Point point_add(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point point_sub(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool point_leq(const Point& a, const Point& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

LatticeWindow::LatticeWindow(std::vector<int> lower, std::vector<int> upper)
    : lo(std::move(lower)), hi(std::move(upper)) {
  if (lo.size() != hi.size() || lo.empty()) {
    throw std::invalid_argument("LatticeWindow: bounds must be nonempty and of equal length");
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) {
      throw std::invalid_argument("LatticeWindow: lo > hi in some coordinate");
    }
  }
}

LatticeWindow LatticeWindow::cube(std::size_t dim, int lower, int upper) {
  return LatticeWindow(std::vector<int>(dim, lower), std::vector<int>(dim, upper));
}

std::size_t LatticeWindow::size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    n *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  }
  return n;
}

bool LatticeWindow::contains(const Point& p) const {
  if (p.size() != lo.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  }
  return true;
}

std::vector<Point> enumerate_window(const LatticeWindow& window, std::size_t cap) {
  if (window.size() > cap) {
    throw std::invalid_argument("enumerate_window: window size exceeds enumeration cap");
  }
  std::vector<Point> points;
  points.reserve(window.size());
  Point p(window.lo.begin(), window.lo.end());
  for (;;) {
    points.push_back(p);
    std::size_t i = p.size();
    while (i > 0 && p[i - 1] == window.hi[i - 1]) --i;
    if (i == 0) break;
    ++p[i - 1];
    for (std::size_t j = i; j < p.size(); ++j) p[j] = window.lo[j];
  }
  return points;
}

GroupTIMapping GroupTIMapping::conditional_max_on(Partition p) {
  return GroupTIMapping{Kind::conditional_max, std::move(p), {}};
}
GroupTIMapping GroupTIMapping::conditional_min_on(Partition p) {
  return GroupTIMapping{Kind::conditional_min, std::move(p), {}};
}
GroupTIMapping GroupTIMapping::global_max_on(std::size_t dim) {
  return GroupTIMapping{Kind::global_max, Partition::trivial(dim), {}};
}
GroupTIMapping GroupTIMapping::identity_on(std::size_t dim) {
  return GroupTIMapping{Kind::identity, Partition::singletons(dim), {}};
}

Point GroupTIMapping::operator()(const Point& t) const {
  switch (kind) {
    case Kind::identity:
      return t;
    case Kind::global_max: {
      int m = *std::max_element(t.begin(), t.end());
      return Point(t.size(), m);
    }
    case Kind::conditional_max:
    case Kind::conditional_min: {
      Point out(t.size());
      for (const auto& block : partition.blocks) {
        int m = t[block.front()];
        for (std::size_t i : block) {
          m = kind == Kind::conditional_max ? std::max(m, t[i]) : std::min(m, t[i]);
        }
        for (std::size_t i : block) out[i] = m;
      }
      return out;
    }
    case Kind::table: {
      auto it = table.find(t);
      if (it == table.end()) {
        throw std::out_of_range("GroupTIMapping: point outside tabulated domain");
      }
      return it->second;
    }
  }
  throw std::logic_error("GroupTIMapping: unknown kind");
}

bool is_block_constant(const Point& p, const Partition& partition) {
  for (const auto& block : partition.blocks) {
    int ref = p[block.front()];
    for (std::size_t i : block) {
      if (p[i] != ref) return false;
    }
  }
  return true;
}

LatticeVerdict check_group_translation_invariance(const GroupTIMapping& m,
                                                  const LatticeWindow& window,
                                                  const std::vector<Point>& shifts,
                                                  std::size_t cap) {
  for (const Point& f : shifts) {
    if (f.size() != window.dim() || !is_block_constant(f, m.partition)) {
      throw std::invalid_argument(
          "check_group_translation_invariance: shift is not in the declared subgroup");
    }
  }
  LatticeVerdict verdict;
  for (const Point& t : enumerate_window(window, cap)) {
    for (const Point& f : shifts) {
      if (m(point_add(t, f)) != point_add(m(t), f)) {
        verdict.pass = false;
        verdict.witness = t;
        verdict.witness_shift = f;
        verdict.detail = "m(t + f) != m(t) + f";
        return verdict;
      }
    }
  }
  verdict.detail = "translation invariance holds on the whole window";
  return verdict;
}

std::vector<Point> acceptance_set(const GroupTIMapping& m, const LatticeWindow& window,
                                  std::size_t cap) {
  std::vector<Point> accepted;
  const Point zero(window.dim(), 0);
  for (const Point& t : enumerate_window(window, cap)) {
    if (point_leq(m(t), zero)) accepted.push_back(t);
  }
  return accepted;
}

std::vector<Point> restrict_to_subgroup(const std::vector<Point>& points,
                                        const Partition& partition) {
  std::vector<Point> out;
  for (const Point& p : points) {
    if (is_block_constant(p, partition)) out.push_back(p);
  }
  return out;
}

namespace {

void require_hypotheses(const GroupTIMapping& rho, const GroupTIMapping& f,
                        const LatticeWindow& window, std::size_t cap) {
  const Point zero(window.dim(), 0);
  if (f(zero) != zero) {
    throw std::invalid_argument("check_acceptance_identity: factor violates f(0) = 0");
  }
  // rho's codomain subgroup must sit inside the factor's image subgroup,
  // i.e. the factor's partition refines rho's: without this nesting the
  // pointwise criterion and the set comparison decide different questions.
  for (const auto& block : f.partition.blocks) {
    const std::size_t ref = rho.partition.block_of(block.front());
    for (std::size_t i : block) {
      if (rho.partition.block_of(i) != ref) {
        throw std::invalid_argument(
            "check_acceptance_identity: rho's value subgroup is not contained in "
            "the factor's image subgroup");
      }
    }
  }
  // Increasing along unit steps implies increasing for the componentwise
  // order on the whole window.
  for (const Point& t : enumerate_window(window, cap)) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == window.hi[i]) continue;
      Point up = t;
      ++up[i];
      if (!point_leq(rho(t), rho(up))) {
        throw std::invalid_argument(
            "check_acceptance_identity: rho is not increasing on the window");
      }
    }
  }
}

}  // namespace

AcceptanceVerdict check_acceptance_identity(const GroupTIMapping& rho,
                                            const GroupTIMapping& f,
                                            const LatticeWindow& window,
                                            std::size_t cap) {
  require_hypotheses(rho, f, window, cap);
  AcceptanceVerdict verdict;
  const Point zero(window.dim(), 0);
  const std::vector<Point> points = enumerate_window(window, cap);

  // Route (a): rho(F(t)) <= rho(t) and rho(F(t)) >= rho(t) at every point.
  for (const Point& t : points) {
    if (rho(f(t)) != rho(t)) {
      verdict.pointwise_pass = false;
      verdict.pointwise_witness = t;
      break;
    }
  }

  // Route (b): A_F (+) A_{rho|F} versus A_rho, boundary-guarded.
  std::vector<Point> a_f = acceptance_set(f, window, cap);
  std::vector<Point> a_rho = acceptance_set(rho, window, cap);
  std::vector<Point> a_rho_sub = restrict_to_subgroup(a_rho, f.partition);
  std::set<Point> a_rho_lookup(a_rho.begin(), a_rho.end());

  std::size_t guarded = 0, total = 0;
  // Forward inclusion: every in-window sum a + b with a in A_F and
  // b in A_{rho|F} must lie in A_rho.
  for (const Point& a : a_f) {
    if (!verdict.minkowski_pass) break;
    for (const Point& b : a_rho_sub) {
      Point s = point_add(a, b);
      ++total;
      if (!window.contains(s)) continue;  // no in-window certificate
      ++guarded;
      if (!a_rho_lookup.count(s)) {
        verdict.minkowski_pass = false;
        verdict.minkowski_witness = s;
        break;
      }
    }
  }
  // Reverse inclusion via the canonical decomposition
  // t = (t - F(t)) + F(t): membership in the Minkowski sum is equivalent to
  // F(t) being accepted, whenever both parts stay in the window.
  if (verdict.minkowski_pass) {
    for (const Point& t : a_rho) {
      Point ft = f(t);
      Point rest = point_sub(t, ft);
      ++total;
      if (!window.contains(ft) || !window.contains(rest)) continue;
      ++guarded;
      bool in_sum = point_leq(f(rest), zero) && point_leq(rho(ft), zero);
      if (!in_sum) {
        verdict.minkowski_pass = false;
        verdict.minkowski_witness = t;
        break;
      }
    }
  }
  verdict.guarded_fraction =
      total == 0 ? 1.0 : static_cast<double>(guarded) / static_cast<double>(total);

  verdict.pass = verdict.pointwise_pass && verdict.minkowski_pass;
  verdict.detail = verdict.pass
                       ? "acceptance-set identity holds (both routes agree)"
                       : "acceptance-set identity fails";
  return verdict;
}

AggregatorFactorPair aggregator_from_rho(const GroupTIMapping& rho,
                                         const GroupTIMapping& f,
                                         const LatticeWindow& head_window,
                                         const LatticeWindow& tail_window,
                                         std::size_t cap) {
  if (head_window.dim() != tail_window.dim()) {
    throw std::invalid_argument("aggregator_from_rho: window dimensions differ");
  }
  auto label = [](const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p[i]);
    }
    return s + ")";
  };
  auto as_value = [](const Point& p) {
    Value v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = static_cast<double>(p[i]);
    return v;
  };

  AggregatorFactorPair pair;
  std::vector<Point> heads;
  for (const Point& h : enumerate_window(head_window, cap)) {
    if (is_block_constant(h, rho.partition)) heads.push_back(h);
  }
  if (heads.empty()) {
    throw std::invalid_argument("aggregator_from_rho: no heads in the declared subgroup");
  }
  std::vector<Point> tails = enumerate_window(tail_window, cap);

  for (const Point& h : heads) {
    pair.heads.push_back(label(h));
    pair.head_values.push_back(as_value(h));
  }
  for (const Point& t : tails) {
    pair.tails.push_back(label(t));
    pair.factor.push_back(as_value(f(t)));
  }
  pair.aggregator.resize(heads.size());
  for (std::size_t h = 0; h < heads.size(); ++h) {
    pair.aggregator[h].reserve(tails.size());
    for (const Point& t : tails) {
      pair.aggregator[h].push_back(as_value(rho(point_add(heads[h], t))));
    }
  }
  pair.validate();
  return pair;
}

}  // namespace nestedrisk
