// Runs each acceptance criterion once and prints one PASS/FAIL line per
// criterion. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ultrametric/certificates.hpp"
#include "ultrametric/fixtures.hpp"
#include "ultrametric/polynomials.hpp"
#include "ultrametric/regions.hpp"
#include "ultrametric/sampling.hpp"

using namespace ultrametric;

namespace {

constexpr std::array<std::uint64_t, 3> kPrimes{2, 3, 5};

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  void check(bool ok) {
    ++cases;
    failures += ok ? 0 : 1;
  }
};

Valuation pick_prime(Rng& rng) {
  return Valuation::p_adic(kPrimes[std::uniform_int_distribution<std::size_t>(0, kPrimes.size() - 1)(rng)]);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Outcome counterexample() {
  Outcome o;
  for (const std::uint64_t p : kPrimes) {
    const Matrix a = fixtures::counterexample(Valuation::p_adic(p));
    const RegionUnion b = brauer(a, Axis::kRows);
    const RegionUnion g = gershgorin(a, Axis::kRows);
    const RegionUnion t = tri_oval(a, Axis::kRows);
    for (const long z : {0L, 1L, 2L}) {
      o.check(b.contains(z).member);
      o.check(g.contains(z).member);
    }
    o.check(!t.contains(0).member);
    o.check(!t.contains(2).member);
  }
  return o;
}

Outcome brauer_inclusion() {
  Rng rng(1001);
  Outcome o;
  for (int i = 0; i < 1000; ++i) {
    const Valuation val = pick_prime(rng);
    const PlantedMatrix pm = planted_spectrum(rng, pick(rng, 2, 6), val, {-3, 3});
    const RegionUnion rows = brauer(pm.a, Axis::kRows);
    const RegionUnion cols = brauer(pm.a, Axis::kColumns);
    for (const Rational& e : pm.eigenvalues) {
      o.check(rows.contains(e).member && cols.contains(e).member);
    }
  }
  return o;
}

Outcome brauer_in_gershgorin() {
  Rng rng(1002);
  Outcome o;
  for (int i = 0; i < 10000; ++i) {
    const Valuation val = pick_prime(rng);
    const Matrix a = random_matrix(rng, pick(rng, 2, 6), val, {-3, 3});
    // Half the probes sit near a diagonal entry so that membership is not
    // decided by |z| alone.
    const Rational z = (i % 2 == 0) ? random_entry(rng, val, {-3, 3}, 0.1)
                                    : a(pick(rng, 0, a.size() - 1), pick(rng, 0, a.size() - 1)) +
                                          random_entry(rng, val, {-3, 3}, 0.2);
    for (const Axis axis : {Axis::kRows, Axis::kColumns}) {
      o.check(!brauer(a, axis).contains(z).member || gershgorin(a, axis).contains(z).member);
    }
  }
  return o;
}

Outcome certificate_soundness() {
  Rng rng(1003);
  Outcome o;
  for (int i = 0; i < 1000; ++i) {
    const Valuation val = pick_prime(rng);
    const Matrix a = random_matrix(rng, pick(rng, 1, 6), val, {-3, 3});
    o.check(certify(a).verdict == Verdict::kInconclusive || !det(a).is_zero());
  }
  for (int i = 0; i < 200; ++i) {
    const Valuation val = pick_prime(rng);
    o.check(certify(singular_matrix(rng, pick(rng, 1, 6), val, {-3, 3})).verdict == Verdict::kInconclusive);
  }
  return o;
}

Outcome equivalence() {
  Rng rng(1004);
  Outcome o;
  for (int i = 0; i < 1000; ++i) {
    const Valuation val = pick_prime(rng);
    const Matrix a = random_matrix(rng, pick(rng, 2, 6), val, {-3, 3});
    for (const Axis axis : {Axis::kRows, Axis::kColumns}) {
      o.check(all_hold(check_ostrowski(a, axis)) == !brauer(a, axis).contains(0).member);
      o.check(all_hold(check_dominance(a, axis)) == !gershgorin(a, axis).contains(0).member);
    }
  }
  return o;
}

Outcome polynomial_bounds() {
  Rng rng(1005);
  Outcome o;
  for (int i = 0; i < 1000; ++i) {
    const Valuation val = pick_prime(rng);
    const PolygonBoundReport r = verify_bounds_via_polygon(random_poly(rng, pick(rng, 1, 8), val, {-4, 4}));
    o.check(r.upper_ok && r.lower_ok.value_or(true));
  }
  for (const std::uint64_t p : kPrimes) {
    const Valuation val = Valuation::p_adic(p);
    const Rational pp(static_cast<long>(p));
    const PolygonBoundReport up = verify_bounds_via_polygon(MonicPoly({1, -pp.inverse()}, val));
    o.check(up.upper_ok && up.min_root_val && *up.min_root_val == Rational(up.upper.exponent()));
    const PolygonBoundReport low = verify_bounds_via_polygon(MonicPoly({-pp}, val));
    o.check(low.lower_ok.value_or(false) && low.max_root_val && *low.max_root_val == Rational(low.lower->exponent()));
  }
  return o;
}

Outcome disjunctions() {
  Rng rng(1006);
  Outcome o;
  for (int i = 0; i < 500; ++i) {
    const Valuation val = pick_prime(rng);
    const PlantedPoly pp = random_factorable(rng, pick(rng, 1, 8), val, {-3, 3});
    for (const Rational& root : pp.roots) {
      o.check(!gershgorin_root_cases(pp.poly, root).empty());
      if (pp.poly.degree() >= 2) {
        o.check(!brauer_root_cases(pp.poly, root).empty());
      }
      if (!root.is_zero() && !pp.poly.coeffs()[0].is_zero()) {
        o.check(!reciprocal_root_cases(pp.poly, root).empty());
      }
    }
  }
  return o;
}

Outcome frobenius_bounds() {
  Rng rng(1007);
  Outcome o;
  for (int i = 0; i < 1000; ++i) {
    const Valuation val = pick_prime(rng);
    const PlantedMatrix pm = planted_spectrum(rng, pick(rng, 1, 6), val, {-3, 3});
    o.check(det_abs_bound(pm.a).holds);
    const AbsExp bound = spectral_abs_bound(pm.a);
    for (const Rational& e : pm.eigenvalues) {
      o.check(val.abs(e) <= bound);
    }
  }
  return o;
}

Outcome oracle_cross_checks() {
  Rng rng(1008);
  Outcome o;
  for (int i = 0; i < 500; ++i) {
    const Valuation val = pick_prime(rng);
    const MonicPoly p = random_poly(rng, pick(rng, 1, 8), val, {-4, 4});
    o.check(char_poly(companion(p)) == p);
  }
  for (int i = 0; i < 500; ++i) {
    const Valuation val = pick_prime(rng);
    const PlantedPoly pp = random_factorable(rng, pick(rng, 1, 8), val, {-3, 3});
    std::vector<Rational> expected;
    std::size_t zeros = 0;
    for (const Rational& root : pp.roots) {
      if (root.is_zero()) {
        ++zeros;
      } else {
        expected.push_back(Rational(val.abs(root).exponent()));
      }
    }
    std::sort(expected.begin(), expected.end());
    const NewtonPolygon np = newton_polygon(pp.poly);
    o.check(np.zero_roots == zeros && np.root_valuations() == expected);

    if (!pp.poly.coeffs()[0].is_zero()) {
      std::vector<Rational> reflected = np.root_valuations();
      for (Rational& v : reflected) {
        v = -v;
      }
      std::sort(reflected.begin(), reflected.end());
      o.check(newton_polygon(reciprocal(pp.poly)).root_valuations() == reflected);
    }
  }
  return o;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"counterexample fixture", 1.0, counterexample},
      {"Brauer inclusion of planted spectra", 30.0, brauer_inclusion},
      {"Brauer union inside Gershgorin union", 30.0, brauer_in_gershgorin},
      {"certificate soundness", 30.0, certificate_soundness},
      {"Ostrowski/dominance equivalence", 30.0, equivalence},
      {"polynomial bounds vs Newton polygon", 30.0, polynomial_bounds},
      {"root disjunctions", 30.0, disjunctions},
      {"Frobenius-type bounds", 10.0, frobenius_bounds},
      {"oracle cross-checks", 20.0, oracle_cross_checks},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[i].run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failures == 0 && o.cases > 0 && secs < criteria[i].limit_seconds;
    failed += pass ? 0 : 1;
    std::printf("%s [%zu] %s: %zu cases, %zu failures, %.3f s (limit %.0f s)\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, o.cases, o.failures, secs, criteria[i].limit_seconds);
  }
  return failed == 0 ? 0 : 1;
}
