#include <doctest.h>

#include <vector>

#include "generators.hpp"
#include "nestedrisk/extreal.hpp"

using namespace nestedrisk;

namespace {
const ExtReal kNeg = ExtReal::neg_infinity();
const ExtReal kPos = ExtReal::pos_infinity();
}  // namespace

TEST_CASE("lower addition resolves opposite infinities to -inf") {
  CHECK(lower_add(kPos, kNeg) == kNeg);
  CHECK(lower_add(kNeg, kPos) == kNeg);
  CHECK(lower_add(ExtReal(2.0), ExtReal(3.0)) == ExtReal(5.0));
  CHECK(lower_add(kPos, kPos) == kPos);
}

TEST_CASE("upper addition resolves opposite infinities to +inf") {
  CHECK(upper_add(kPos, kNeg) == kPos);
  CHECK(upper_add(kNeg, kPos) == kPos);
  CHECK(upper_add(ExtReal(0.0), ExtReal(-7.25)) == ExtReal(-7.25));
  CHECK(upper_add(kNeg, kNeg) == kNeg);
}

TEST_CASE("negation flips infinities and is an involution") {
  CHECK(neg(kPos) == kNeg);
  CHECK(neg(ExtReal(0.0)) == ExtReal(0.0));
  CHECK(neg(ExtReal(1.5)) == ExtReal(-1.5));
  for (const ExtReal& u : testing::moreau_probe_set()) {
    CHECK(neg(neg(u)) == u);
  }
}

TEST_CASE("NaN is rejected") {
  CHECK_THROWS_AS(ExtReal(std::nan("")), std::invalid_argument);
}

TEST_CASE("sup of a finite sequence, empty sup is -inf") {
  CHECK(sup(std::span<const ExtReal>{}) == kNeg);
  std::vector<ExtReal> v = {ExtReal(1.0), kPos, ExtReal(0.0)};
  CHECK(sup(v) == kPos);
  std::vector<ExtReal> w = {kNeg, kNeg};
  CHECK(sup(w) == kNeg);
}

TEST_CASE("duality between the two additions, exhaustive on the probe set") {
  for (const ExtReal& u : testing::moreau_probe_set()) {
    for (const ExtReal& v : testing::moreau_probe_set()) {
      CHECK(neg(upper_add(u, v)) == lower_add(neg(u), neg(v)));
      CHECK(neg(lower_add(u, v)) == upper_add(neg(u), neg(v)));
    }
  }
}

TEST_CASE("both additions are commutative and associative on the probe set") {
  const auto& probe = testing::moreau_probe_set();
  for (const ExtReal& u : probe) {
    for (const ExtReal& v : probe) {
      CHECK(lower_add(u, v) == lower_add(v, u));
      CHECK(upper_add(u, v) == upper_add(v, u));
      for (const ExtReal& w : probe) {
        CHECK(lower_add(lower_add(u, v), w) == lower_add(u, lower_add(v, w)));
        CHECK(upper_add(upper_add(u, v), w) == upper_add(u, upper_add(v, w)));
      }
    }
  }
}

TEST_CASE("lower addition distributes over suprema, enumerated up to size 4") {
  const auto& probe = testing::moreau_probe_set();
  const std::size_t p = probe.size();

  // All functions from an index set of size n into the probe set, n <= 4,
  // encoded as base-p integers.
  auto nth_tuple = [&](std::size_t n, std::size_t code) {
    std::vector<ExtReal> f;
    for (std::size_t i = 0; i < n; ++i) {
      f.push_back(probe[code % p]);
      code /= p;
    }
    return f;
  };
  std::size_t checked = 0;
  for (std::size_t na = 1; na <= 4; ++na) {
    std::size_t ca_max = 1;
    for (std::size_t i = 0; i < na; ++i) ca_max *= p;
    for (std::size_t nb = 1; nb <= 4; ++nb) {
      std::size_t cb_max = 1;
      for (std::size_t i = 0; i < nb; ++i) cb_max *= p;
      // Skip nothing: the full cross product at these sizes is cheap.
      for (std::size_t ca = 0; ca < ca_max; ++ca) {
        auto f = nth_tuple(na, ca);
        ExtReal sf = sup(f);
        for (std::size_t cb = 0; cb < cb_max; ++cb) {
          auto g = nth_tuple(nb, cb);
          ExtReal lhs = lower_add(sf, sup(g));
          ExtReal rhs = ExtReal::neg_infinity();
          for (const ExtReal& a : f) {
            for (const ExtReal& b : g) {
              ExtReal cand = lower_add(a, b);
              if (rhs < cand) rhs = cand;
            }
          }
          if (lhs != rhs) {
            // Fail loudly with context; counting keeps the hot loop cheap.
            REQUIRE_MESSAGE(lhs == rhs, "sizes " << na << "x" << nb);
          }
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("total order places -inf below finite below +inf") {
  CHECK(kNeg < ExtReal(-1e300));
  CHECK(ExtReal(1e300) < kPos);
  CHECK(ExtReal(-1.0) < ExtReal(1.0));
  CHECK(kNeg < kPos);
  CHECK_FALSE(kPos < kPos);
}
