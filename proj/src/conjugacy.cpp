#include "nestedrisk/conjugacy.hpp"

#include <stdexcept>

namespace nestedrisk {

void Coupling::validate() const {
  if (table.size() != left_size) {
    throw std::invalid_argument("Coupling: table must have one row per left element");
  }
  for (const auto& row : table) {
    if (row.size() != right_size) {
      throw std::invalid_argument("Coupling: row length must equal the right set size");
    }
  }
}

ExtFn fm_conjugate(const ExtFn& f, const Coupling& c) {
  c.validate();
  if (f.size() != c.left_size) {
    throw std::invalid_argument("fm_conjugate: f must be total over the left set");
  }
  ExtFn out(c.right_size, ExtReal::neg_infinity());
  for (std::size_t r = 0; r < c.right_size; ++r) {
    ExtReal best = ExtReal::neg_infinity();
    for (std::size_t l = 0; l < c.left_size; ++l) {
      ExtReal cand = lower_add(c.table[l][r], neg(f[l]));
      if (best < cand) best = cand;
    }
    out[r] = best;
  }
  return out;
}

void DecomposableSystem::validate() const {
  if (nx == 0 || ny == 0 || nz == 0 || nyp == 0) {
    throw std::invalid_argument("DecomposableSystem: all sets must be nonempty");
  }
  auto in_yp = [this](std::size_t i) { return i < nyp; };
  if (theta_xz.size() != nx || theta_x.size() != nx || theta_z.size() != nz) {
    throw std::invalid_argument("DecomposableSystem: theta map sizes do not match the sets");
  }
  for (const auto& row : theta_xz) {
    if (row.size() != nz) {
      throw std::invalid_argument("DecomposableSystem: theta_xz row length must equal |Z|");
    }
    for (std::size_t v : row) {
      if (!in_yp(v)) throw std::invalid_argument("DecomposableSystem: theta_xz value outside Y'");
    }
  }
  for (std::size_t v : theta_x) {
    if (!in_yp(v)) throw std::invalid_argument("DecomposableSystem: theta_x value outside Y'");
  }
  for (std::size_t v : theta_z) {
    if (!in_yp(v)) throw std::invalid_argument("DecomposableSystem: theta_z value outside Y'");
  }
  if (phi.size() != nyp) {
    throw std::invalid_argument("DecomposableSystem: phi must have one row per Y' element");
  }
  for (const auto& row : phi) {
    if (row.size() != ny) {
      throw std::invalid_argument("DecomposableSystem: phi row length must equal |Y|");
    }
  }
}

ConjugacyVerdict check_decomposable(const DecomposableSystem& sys) {
  sys.validate();
  ConjugacyVerdict verdict;
  for (std::size_t x = 0; x < sys.nx; ++x) {
    for (std::size_t y = 0; y < sys.ny; ++y) {
      ExtReal rhs = ExtReal::neg_infinity();
      for (std::size_t z = 0; z < sys.nz; ++z) {
        ExtReal cand =
            lower_add(sys.phi[sys.theta_xz[x][z]][y], neg(sys.phi[sys.theta_z[z]][y]));
        if (rhs < cand) rhs = cand;
      }
      ExtReal lhs = sys.phi[sys.theta_x[x]][y];
      if (lhs != rhs) {
        verdict.pass = false;
        verdict.witness_x = x;
        verdict.witness_y = y;
        verdict.lhs = lhs;
        verdict.rhs = rhs;
        verdict.detail = "decomposability identity fails at (x=" + std::to_string(x) +
                         ", y=" + std::to_string(y) + "): " + to_string(lhs) +
                         " != " + to_string(rhs);
        return verdict;
      }
    }
  }
  verdict.detail = "coupling is decomposable";
  return verdict;
}

namespace {

// G^Phi(x) with G(y,z) = g(y) (+) phi(theta_Z(z), y), the addition chosen by
// the caller through `use_upper`.
ExtReal nested_lhs(const DecomposableSystem& sys, const ExtFn& g, std::size_t x,
                   bool use_upper) {
  ExtReal best = ExtReal::neg_infinity();
  for (std::size_t y = 0; y < sys.ny; ++y) {
    for (std::size_t z = 0; z < sys.nz; ++z) {
      ExtReal big_phi = sys.phi[sys.theta_xz[x][z]][y];
      ExtReal tail = sys.phi[sys.theta_z[z]][y];
      ExtReal big_g = use_upper ? upper_add(g[y], tail) : lower_add(g[y], tail);
      ExtReal cand = lower_add(big_phi, neg(big_g));
      if (best < cand) best = cand;
    }
  }
  return best;
}

ExtReal nested_rhs(const DecomposableSystem& sys, const ExtFn& g, std::size_t x) {
  // g^phi(theta_X(x)) = sup_y [ phi(theta_X(x), y) (lower-plus) (-g(y)) ].
  ExtReal best = ExtReal::neg_infinity();
  for (std::size_t y = 0; y < sys.ny; ++y) {
    ExtReal cand = lower_add(sys.phi[sys.theta_x[x]][y], neg(g[y]));
    if (best < cand) best = cand;
  }
  return best;
}

}  // namespace

ConjugacyVerdict check_nested_conjugate(const DecomposableSystem& sys, const ExtFn& g,
                                        bool exploratory) {
  sys.validate();
  if (g.size() != sys.ny) {
    throw std::invalid_argument("check_nested_conjugate: g must be total over Y");
  }
  if (!exploratory && !check_decomposable(sys).pass) {
    throw std::invalid_argument(
        "check_nested_conjugate: coupling is not decomposable (use exploratory mode "
        "to run the comparison anyway)");
  }

  ConjugacyVerdict verdict;
  bool pass_upper = true, pass_lower = true;
  for (std::size_t x = 0; x < sys.nx; ++x) {
    ExtReal rhs = nested_rhs(sys, g, x);
    ExtReal lhs = nested_lhs(sys, g, x, /*use_upper=*/true);
    if (lhs != rhs) {
      pass_upper = false;
      if (verdict.pass) {
        verdict.pass = false;
        verdict.witness_x = x;
        verdict.lhs = lhs;
        verdict.rhs = rhs;
        verdict.detail = "nested formula fails at x=" + std::to_string(x) + ": G^Phi = " +
                         to_string(lhs) + " but g^phi(theta_X(x)) = " + to_string(rhs);
      }
    }
    if (nested_lhs(sys, g, x, /*use_upper=*/false) != rhs) pass_lower = false;
  }
  verdict.reading_ambiguous = pass_upper != pass_lower;
  if (verdict.pass) verdict.detail = "nested formula G^Phi = g^phi o theta_X holds";
  return verdict;
}

}  // namespace nestedrisk
