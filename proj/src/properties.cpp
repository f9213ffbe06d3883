#include "nestedrisk/properties.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace nestedrisk {

std::size_t CallableMapping::total_dim() const {
  return std::accumulate(arg_dims.begin(), arg_dims.end(), std::size_t{0});
}

void CallableMapping::validate() const {
  if (arg_dims.empty() || !eval) {
    throw std::invalid_argument("CallableMapping: missing arity or evaluator");
  }
  if (box.size() != total_dim()) {
    throw std::invalid_argument("CallableMapping: box must cover every coordinate");
  }
  for (const auto& [lo, hi] : box) {
    if (!(lo <= hi)) {
      throw std::invalid_argument("CallableMapping: degenerate box interval");
    }
  }
}

namespace {

using Args = std::vector<std::vector<double>>;

Args sample_args(const CallableMapping& m, std::mt19937_64& rng) {
  Args args(m.arg_dims.size());
  std::size_t k = 0;
  for (std::size_t a = 0; a < m.arg_dims.size(); ++a) {
    args[a].resize(m.arg_dims[a]);
    for (std::size_t i = 0; i < m.arg_dims[a]; ++i, ++k) {
      std::uniform_real_distribution<double> dist(m.box[k].first, m.box[k].second);
      args[a][i] = dist(rng);
    }
  }
  return args;
}

// Largest positive violation of lhs <= rhs componentwise; dimension
// mismatches count as a hard violation.
double violation(const std::vector<double>& lhs, const std::vector<double>& rhs) {
  if (lhs.size() != rhs.size()) return std::numeric_limits<double>::infinity();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    worst = std::max(worst, lhs[i] - rhs[i]);
  }
  return worst;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::vector<double> scaled(const std::vector<double>& v, double lambda) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = lambda * v[i];
  return out;
}

}  // namespace

PropertyVerdict check_monotone_first_arg(const CallableMapping& m,
                                         std::uint64_t samples, std::uint64_t seed,
                                         double tol) {
  m.validate();
  std::mt19937_64 rng(seed);
  PropertyVerdict verdict;
  std::uint64_t comparable = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    Args lo = sample_args(m, rng);
    Args hi = lo;
    for (std::size_t i = 0; i < m.arg_dims[0]; ++i) {
      std::uniform_real_distribution<double> bump(0.0, m.box[i].second - lo[0][i]);
      hi[0][i] = lo[0][i] + bump(rng);
    }
    ++comparable;
    ++verdict.samples_run;
    auto vlo = m.eval(lo);
    auto vhi = m.eval(hi);
    double gap = violation(vlo, vhi);
    if (gap > tol) {
      verdict.pass = false;
      verdict.witness = PropertyVerdict::Witness{lo, hi, vlo, vhi, gap};
      verdict.detail = "found x <= x' with m(x,..) > m(x',..) + tol";
      return verdict;
    }
  }
  if (comparable == 0) {
    throw std::runtime_error("check_monotone_first_arg: sampler produced no comparable pairs");
  }
  verdict.detail = "monotone in first argument on all samples";
  return verdict;
}

PropertyVerdict check_positive_homogeneity(const CallableMapping& a,
                                           const CallableMapping& f,
                                           const CallableMapping& s,
                                           const std::vector<double>& lambdas,
                                           std::uint64_t samples, std::uint64_t seed,
                                           double tol) {
  a.validate();
  f.validate();
  s.validate();
  for (double l : lambdas) {
    if (l < 0.0) throw std::invalid_argument("check_positive_homogeneity: lambda < 0");
  }
  std::mt19937_64 rng(seed);
  PropertyVerdict verdict;
  for (std::uint64_t n = 0; n < samples; ++n) {
    Args ht = sample_args(a, rng);
    const auto& h = ht[0];
    const auto& t = ht[1];
    auto ft = f.eval({t});
    for (double lambda : lambdas) {
      ++verdict.samples_run;
      auto lh = scaled(h, lambda);
      auto lt = scaled(t, lambda);

      struct Probe {
        const char* label;
        std::vector<double> lhs, rhs;
        Args args_a, args_b;
      };
      Probe probes[] = {
          {"s(l*h, l*f(t)) = l*s(h, f(t))", s.eval({lh, scaled(ft, lambda)}),
           scaled(s.eval({h, ft}), lambda), {lh, scaled(ft, lambda)}, {h, ft}},
          {"a(l*h, l*t) = l*a(h, t)", a.eval({lh, lt}), scaled(a.eval({h, t}), lambda),
           {lh, lt}, {h, t}},
          {"f(l*t) = l*f(t)", f.eval({lt}), scaled(ft, lambda), {lt}, {t}},
      };
      for (auto& p : probes) {
        double gap = max_abs_diff(p.lhs, p.rhs);
        if (gap > tol) {
          verdict.pass = false;
          verdict.witness = PropertyVerdict::Witness{p.args_a, p.args_b, p.lhs, p.rhs, gap};
          verdict.detail = std::string("violated: ") + p.label +
                           " at lambda = " + std::to_string(lambda);
          return verdict;
        }
      }
    }
  }
  verdict.detail = "jointly positively homogeneous on all samples";
  return verdict;
}

PropertyVerdict check_translation_invariance(const CallableMapping& m,
                                             const std::vector<std::vector<double>>& invariants,
                                             std::uint64_t samples, std::uint64_t seed,
                                             double tol) {
  m.validate();
  if (m.arg_dims.size() != 1) {
    throw std::invalid_argument("check_translation_invariance: single-argument mappings only");
  }
  std::mt19937_64 rng(seed);
  PropertyVerdict verdict;
  for (std::uint64_t n = 0; n < samples; ++n) {
    Args x = sample_args(m, rng);
    auto base = m.eval(x);
    for (const auto& shift : invariants) {
      if (shift.size() != m.arg_dims[0]) {
        throw std::invalid_argument("check_translation_invariance: invariant dimension mismatch");
      }
      ++verdict.samples_run;
      Args shifted = x;
      for (std::size_t i = 0; i < shift.size(); ++i) shifted[0][i] += shift[i];
      auto lhs = m.eval(shifted);

      std::vector<double> rhs = base;
      if (base.size() == shift.size()) {
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += shift[i];
      } else {
        // Codomain of a different dimension: the invariant must embed as a
        // constant, which is then added to every output component.
        double c = shift.front();
        for (double v : shift) {
          if (v != c) {
            throw std::invalid_argument(
                "check_translation_invariance: non-constant invariant does not "
                "embed in the codomain");
          }
        }
        for (double& v : rhs) v += c;
      }
      double gap = max_abs_diff(lhs, rhs);
      if (gap > tol) {
        verdict.pass = false;
        verdict.witness = PropertyVerdict::Witness{x, {shift}, lhs, rhs, gap};
        verdict.detail = "found x, i with m(x+i) != m(x)+i";
        return verdict;
      }
    }
  }
  verdict.detail = "translation invariant on all samples";
  return verdict;
}

PropertyVerdict check_midpoint_convexity(const CallableMapping& m,
                                         std::uint64_t samples, std::uint64_t seed,
                                         double tol) {
  m.validate();
  std::mt19937_64 rng(seed);
  PropertyVerdict verdict;
  for (std::uint64_t n = 0; n < samples; ++n) {
    ++verdict.samples_run;
    Args p = sample_args(m, rng);
    Args q = sample_args(m, rng);
    Args mid(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
      mid[a].resize(p[a].size());
      for (std::size_t i = 0; i < p[a].size(); ++i) {
        mid[a][i] = 0.5 * (p[a][i] + q[a][i]);
      }
    }
    auto vm = m.eval(mid);
    auto vp = m.eval(p);
    auto vq = m.eval(q);
    std::vector<double> avg(vp.size());
    for (std::size_t i = 0; i < vp.size(); ++i) avg[i] = 0.5 * (vp[i] + vq[i]);
    double gap = violation(vm, avg);
    if (gap > tol) {
      verdict.pass = false;
      verdict.witness = PropertyVerdict::Witness{p, q, vm, avg, gap};
      verdict.detail = "midpoint convexity violated: m((p+q)/2) > (m(p)+m(q))/2 + tol";
      return verdict;
    }
  }
  verdict.detail = "midpoint convex on all samples (evidence, not proof)";
  return verdict;
}

}  // namespace nestedrisk
