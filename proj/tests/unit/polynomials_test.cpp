#include "ultrametric/polynomials.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ultrametric/errors.hpp"
#include "ultrametric/regions.hpp"

namespace ultrametric {
namespace {

using testing::padic;
using testing::ppow;
using testing::q;

const Branch* find_branch(const CaseReport& r, const std::string& id) {
  for (const auto& t : r.theorems) {
    for (const auto& b : t.branches) {
      if (b.id == id) {
        return &b;
      }
    }
  }
  return nullptr;
}

bool holds(const CaseReport& r, const std::string& id) {
  const Branch* b = find_branch(r, id);
  return b != nullptr && b->holds;
}

// (z - 1)(z - p) = z^2 - (1 + p) z + p.
MonicPoly one_and_p(std::uint64_t p) {
  const Rational pp(static_cast<long>(p));
  return MonicPoly({pp, -(1 + pp)}, padic(p));
}

// z^2 - (1/p) z + 1, root valuations {-1, 1}.
MonicPoly upper_witness(std::uint64_t p) { return MonicPoly({1, -ppow(p, -1)}, padic(p)); }

TEST(Companion, Examples) {
  const Matrix c1 = companion(MonicPoly({q("3/5")}, padic(5)));
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1(0, 0), q("-3/5"));
  const Matrix c2 = companion(MonicPoly({q("7"), q("-1/2")}, padic(2)));
  EXPECT_EQ(c2, Matrix({{0, 1}, {q("-7"), q("1/2")}}, padic(2)));
  const MonicPoly cubic({5, -2, 0}, padic(3));
  EXPECT_EQ(char_poly(companion(cubic)), cubic);
}

TEST(CompanionProperty, CharPolyRoundTrip) {
  Rng rng(51);
  for (int i = 0; i < 500; ++i) {
    const Valuation val = testing::random_prime(rng);
    const MonicPoly p = random_poly(rng, testing::random_size(rng, 1, 8), val, {-4, 4});
    ASSERT_EQ(char_poly(companion(p)), p);
  }
}

TEST(Reciprocal, Examples) {
  const MonicPoly p({2, -3}, padic(2));
  const MonicPoly r = reciprocal(p);
  EXPECT_EQ(r, MonicPoly({q("1/2"), q("-3/2")}, padic(2)));
  EXPECT_TRUE(r.evaluate(1).is_zero());
  EXPECT_TRUE(r.evaluate(q("1/2")).is_zero());
  EXPECT_EQ(reciprocal(MonicPoly({q("-4/9")}, padic(3))), MonicPoly({q("-9/4")}, padic(3)));
  EXPECT_THROW(reciprocal(MonicPoly({0, 1}, padic(3))), PreconditionError);
}

TEST(ReciprocalProperty, InvolutionAndInverseRoots) {
  Rng rng(52);
  for (int i = 0; i < 300; ++i) {
    const Valuation val = testing::random_prime(rng);
    const PlantedPoly pp = random_factorable(rng, testing::random_size(rng, 1, 6), val, {-3, 3}, 0.0);
    const MonicPoly r = reciprocal(pp.poly);
    ASSERT_EQ(reciprocal(r), pp.poly);
    for (const Rational& root : pp.roots) {
      ASSERT_TRUE(r.evaluate(root.inverse()).is_zero());
    }
  }
}

TEST(RootBounds, Upper) {
  EXPECT_EQ(root_upper_bound(MonicPoly({0, 0, 0}, padic(3))), AbsExp(0));
  for (std::uint64_t p : testing::kPrimes) {
    EXPECT_EQ(root_upper_bound(upper_witness(p)), AbsExp(-1));
    EXPECT_EQ(root_upper_bound(one_and_p(p)), AbsExp(0));
  }
}

TEST(RootBounds, Lower) {
  for (std::uint64_t p : testing::kPrimes) {
    const Rational pp(static_cast<long>(p));
    EXPECT_EQ(root_lower_bound(MonicPoly({-pp}, padic(p))), AbsExp(1));
    EXPECT_EQ(root_lower_bound(one_and_p(p)), AbsExp(1));
    EXPECT_EQ(root_lower_bound(upper_witness(p)), AbsExp(1));
  }
  EXPECT_THROW(root_lower_bound(MonicPoly({0, 1}, padic(2))), PreconditionError);
}

TEST(GershgorinCases, Examples) {
  for (std::uint64_t p : testing::kPrimes) {
    const Rational pp(static_cast<long>(p));
    const CaseReport r1 = gershgorin_root_cases(one_and_p(p), 1);
    EXPECT_TRUE(holds(r1, "row.b1"));
    EXPECT_TRUE(r1.all_theorems_satisfied());

    // (z - 1/p)(z - p): |1/p| = p > 1, so the shifted branch carries it:
    // |1/p - (1/p + p)| = |p| <= max{|c0|} = 1.
    const Rational inv = pp.inverse();
    const MonicPoly big({1, -(inv + pp)}, padic(p));
    const CaseReport r2 = gershgorin_root_cases(big, inv);
    EXPECT_FALSE(holds(r2, "row.b1"));
    const Branch* b2 = find_branch(r2, "row.b2");
    ASSERT_NE(b2, nullptr);
    EXPECT_TRUE(b2->holds);
    EXPECT_EQ(b2->lhs, AbsExp(1));
    EXPECT_EQ(b2->rhs, AbsExp(0));
  }
  const CaseReport lin = gershgorin_root_cases(MonicPoly({q("-3/2")}, padic(3)), q("3/2"));
  EXPECT_TRUE(holds(lin, "row.b1"));
  EXPECT_THROW(gershgorin_root_cases(one_and_p(3), 2), PreconditionError);
}

TEST(GershgorinCases, ColumnBranchIds) {
  const PlantedPoly pp{MonicPoly::from_roots(std::vector<Rational>{1, 2, 3, 4}, padic(5)), {}};
  const CaseReport r = gershgorin_root_cases(pp.poly, 3);
  EXPECT_NE(find_branch(r, "col.b2[j=1]"), nullptr);
  EXPECT_NE(find_branch(r, "col.b2[j=2]"), nullptr);
  EXPECT_EQ(find_branch(r, "col.b2[j=3]"), nullptr);
  const CaseReport small = gershgorin_root_cases(one_and_p(5), 1);
  EXPECT_EQ(small.theorems[1].not_applicable, std::vector<std::string>{"col.b2"});
}

TEST(BrauerCases, Examples) {
  for (std::uint64_t p : testing::kPrimes) {
    const Rational pp(static_cast<long>(p));
    const CaseReport r = brauer_root_cases(one_and_p(p), pp);
    const Branch* b2 = find_branch(r, "row.b2");
    ASSERT_NE(b2, nullptr);
    EXPECT_TRUE(b2->holds);
    EXPECT_EQ(b2->lhs, AbsExp(1));
    EXPECT_EQ(b2->rhs, AbsExp(1));
    EXPECT_TRUE(holds(brauer_root_cases(one_and_p(p), 1), "row.b1"));
    EXPECT_EQ(r.theorems[1].not_applicable, (std::vector<std::string>{"col.b1", "col.b3", "col.b4"}));
  }
  EXPECT_TRUE(holds(brauer_root_cases(MonicPoly({1, -2}, padic(3)), 1), "row.b1"));
  EXPECT_THROW(brauer_root_cases(MonicPoly({-1}, padic(3)), 1), PreconditionError);
  EXPECT_THROW(brauer_root_cases(one_and_p(3), 5), PreconditionError);
}

TEST(BrauerCases, QuarticHasAllFamilies) {
  const MonicPoly p = MonicPoly::from_roots(std::vector<Rational>{q("1/3"), 9, 2, q("-1/9")}, padic(3));
  const CaseReport r = brauer_root_cases(p, 9);
  EXPECT_NE(find_branch(r, "col.b1[j=2]"), nullptr);
  EXPECT_NE(find_branch(r, "col.b3[j=1,k=2]"), nullptr);
  EXPECT_NE(find_branch(r, "col.b4[j=1]"), nullptr);
  EXPECT_TRUE(r.theorems[1].not_applicable.empty());
  EXPECT_TRUE(r.all_theorems_satisfied());
}

TEST(ReciprocalCases, Examples) {
  for (std::uint64_t p : testing::kPrimes) {
    const Rational pp(static_cast<long>(p));
    // q = z - 1/p at 1/lambda = 1/p: |1/p| <= |1/p|.
    const CaseReport lin = reciprocal_root_cases(MonicPoly({-pp}, padic(p)), pp);
    const Branch* b = find_branch(lin, "recip.col.b1");
    ASSERT_NE(b, nullptr);
    EXPECT_TRUE(b->holds);
    EXPECT_EQ(b->lhs, b->rhs);
    EXPECT_EQ(lin.theorems.size(), 2u);

    // q = z^2 - ((1 + p)/p) z + 1/p at 1/p: |1/p - (1 + p)/p| = 1 <= |1/p| = p.
    const CaseReport quad = reciprocal_root_cases(one_and_p(p), pp);
    EXPECT_FALSE(holds(quad, "recip.row.b1"));
    const Branch* b2 = find_branch(quad, "recip.row.b2");
    ASSERT_NE(b2, nullptr);
    EXPECT_TRUE(b2->holds);
    EXPECT_EQ(b2->lhs, AbsExp(0));
    EXPECT_EQ(b2->rhs, AbsExp(-1));
    EXPECT_TRUE(quad.all_theorems_satisfied());
  }
  const CaseReport r = reciprocal_root_cases(MonicPoly({2, -3}, padic(2)), 2);
  EXPECT_TRUE(r.all_theorems_satisfied());
  EXPECT_TRUE(holds(r, "recip.row.b2"));
  EXPECT_THROW(reciprocal_root_cases(MonicPoly({0, 1}, padic(2)), -1), PreconditionError);
  EXPECT_THROW(reciprocal_root_cases(MonicPoly({0, 1}, padic(2)), 0), PreconditionError);
}

TEST(ReciprocalCases, IndicesFollowOriginalCoefficients) {
  // Degree 4: the column families range over c2, c3 of the original.
  const MonicPoly p = MonicPoly::from_roots(std::vector<Rational>{1, 2, 3, 4}, padic(7));
  const CaseReport r = reciprocal_root_cases(p, 2);
  EXPECT_NE(find_branch(r, "recip.col.b2[j=3]"), nullptr);
  EXPECT_NE(find_branch(r, "recip.col.b2[j=2]"), nullptr);
  EXPECT_EQ(find_branch(r, "recip.col.b2[j=1]"), nullptr);
  EXPECT_NE(find_branch(r, "recip.col.b3[j=2,k=3]"), nullptr);
}

TEST(NewtonPolygon, Examples) {
  for (std::uint64_t p : testing::kPrimes) {
    const Rational pp(static_cast<long>(p));
    const NewtonPolygon lin = newton_polygon(MonicPoly({-pp}, padic(p)));
    ASSERT_EQ(lin.segments.size(), 1u);
    EXPECT_EQ(lin.segments[0].slope, Rational(-1));
    EXPECT_EQ(lin.root_valuations(), std::vector<Rational>{1});

    const NewtonPolygon two = newton_polygon(MonicPoly({pp * pp * pp, -pp}, padic(p)));
    EXPECT_EQ(two.vertices, (std::vector<PolygonVertex>{{0, 3}, {1, 1}, {2, 0}}));
    EXPECT_EQ(two.root_valuations(), (std::vector<Rational>{1, 2}));
    const NewtonPolygon factored = newton_polygon(MonicPoly({pp * pp * pp, -(pp + pp * pp)}, padic(p)));
    EXPECT_EQ(factored.vertices, two.vertices);
  }
  const NewtonPolygon z3 = newton_polygon(MonicPoly({0, 0, 0}, padic(5)));
  EXPECT_EQ(z3.zero_roots, 3u);
  EXPECT_TRUE(z3.segments.empty());
  EXPECT_TRUE(z3.root_valuations().empty());

  const NewtonPolygon cli = newton_polygon(MonicPoly({8, 2}, padic(2)));
  EXPECT_EQ(cli.vertices, (std::vector<PolygonVertex>{{0, 3}, {1, 1}, {2, 0}}));
  EXPECT_EQ(cli.segments[0].slope, Rational(-2));
  EXPECT_EQ(cli.segments[1].slope, Rational(-1));
}

TEST(NewtonPolygon, CollinearFractionalAndZeroRoots) {
  // z^2 + 3z + 9 over Q_3: (0,2),(1,1),(2,0) collinear.
  const NewtonPolygon col = newton_polygon(MonicPoly({9, 3}, padic(3)));
  EXPECT_EQ(col.vertices, (std::vector<PolygonVertex>{{0, 2}, {2, 0}}));
  ASSERT_EQ(col.segments.size(), 1u);
  EXPECT_EQ(col.segments[0].length, 2);
  // z^2 - 2 over Q_2: two roots of valuation 1/2.
  EXPECT_EQ(newton_polygon(MonicPoly({-2, 0}, padic(2))).root_valuations(),
            (std::vector<Rational>{q("1/2"), q("1/2")}));
  // z^3 + 5 z^2 = z^2 (z + 5).
  const NewtonPolygon zr = newton_polygon(MonicPoly({0, 0, 5}, padic(5)));
  EXPECT_EQ(zr.zero_roots, 2u);
  EXPECT_EQ(zr.vertices, (std::vector<PolygonVertex>{{2, 1}, {3, 0}}));
  EXPECT_EQ(zr.root_valuations(), std::vector<Rational>{1});
}

TEST(NewtonPolygonProperty, RecoversPlantedValuations) {
  Rng rng(53);
  for (int i = 0; i < 500; ++i) {
    const Valuation val = testing::random_prime(rng);
    const PlantedPoly pp = random_factorable(rng, testing::random_size(rng, 1, 8), val, {-3, 3});
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
    ASSERT_EQ(np.zero_roots, zeros);
    ASSERT_EQ(np.root_valuations(), expected);
    for (std::size_t s = 1; s < np.segments.size(); ++s) {
      ASSERT_LT(np.segments[s - 1].slope, np.segments[s].slope);
    }
  }
}

TEST(NewtonPolygonProperty, ReciprocalReflects) {
  Rng rng(54);
  for (int i = 0; i < 500; ++i) {
    const Valuation val = testing::random_prime(rng);
    MonicPoly p = random_poly(rng, testing::random_size(rng, 1, 8), val, {-4, 4});
    if (p.coeffs()[0].is_zero()) {
      continue;
    }
    auto reflected = newton_polygon(p).root_valuations();
    for (auto& v : reflected) {
      v = -v;
    }
    std::sort(reflected.begin(), reflected.end());
    ASSERT_EQ(newton_polygon(reciprocal(p)).root_valuations(), reflected);
  }
}

TEST(VerifyBounds, TightnessWitnesses) {
  for (std::uint64_t p : testing::kPrimes) {
    const PolygonBoundReport up = verify_bounds_via_polygon(upper_witness(p));
    EXPECT_TRUE(up.upper_ok);
    EXPECT_EQ(*up.min_root_val, Rational(up.upper.exponent()));
    EXPECT_EQ(*up.max_root_val, Rational(up.lower->exponent()));

    const Rational pp(static_cast<long>(p));
    const PolygonBoundReport low = verify_bounds_via_polygon(MonicPoly({-pp}, padic(p)));
    EXPECT_EQ(low.lower_ok, true);
    EXPECT_EQ(*low.max_root_val, Rational(low.lower->exponent()));
  }
  const PolygonBoundReport zn = verify_bounds_via_polygon(MonicPoly({0, 0, 0, 0}, padic(3)));
  EXPECT_TRUE(zn.upper_ok);
  EXPECT_FALSE(zn.lower_ok.has_value());
  EXPECT_FALSE(zn.min_root_val.has_value());
}

TEST(VerifyBoundsProperty, RandomPolynomials) {
  Rng rng(55);
  for (int i = 0; i < 1000; ++i) {
    const Valuation val = testing::random_prime(rng);
    const PolygonBoundReport r = verify_bounds_via_polygon(random_poly(rng, testing::random_size(rng, 1, 8), val, {-4, 4}));
    ASSERT_TRUE(r.upper_ok);
    ASSERT_TRUE(r.lower_ok.value_or(true));
  }
}

TEST(VerifyBounds, TrivialValuation) {
  const PolygonBoundReport r = verify_bounds_via_polygon(MonicPoly({q("7/3"), 5, q("-1/2")}, Valuation::trivial()));
  EXPECT_TRUE(r.upper_ok);
  EXPECT_EQ(r.lower_ok, true);
  EXPECT_EQ(r.upper, AbsExp(0));
}

TEST(DisjunctionProperty, EveryPlantedRootSatisfiesEachTheorem) {
  Rng rng(56);
  for (int i = 0; i < 500; ++i) {
    const Valuation val = testing::random_prime(rng);
    const PlantedPoly pp = random_factorable(rng, testing::random_size(rng, 1, 8), val, {-3, 3});
    for (const Rational& root : pp.roots) {
      ASSERT_TRUE(gershgorin_root_cases(pp.poly, root).all_theorems_satisfied());
      if (pp.poly.degree() >= 2) {
        ASSERT_TRUE(brauer_root_cases(pp.poly, root).all_theorems_satisfied());
      }
      if (!root.is_zero() && !pp.poly.coeffs()[0].is_zero()) {
        ASSERT_TRUE(reciprocal_root_cases(pp.poly, root).all_theorems_satisfied());
      }
    }
  }
}

// A witness oval (j, k) of the companion matrix's row union corresponds to a
// row branch: both indices below n-1 give |lambda|^2 <= 1, a pair ending at the
// last row gives the shifted-product branch.
TEST(RegionConsistency, BrauerWitnessMatchesRowBranch) {
  Rng rng(57);
  for (int i = 0; i < 300; ++i) {
    const Valuation val = testing::random_prime(rng);
    const PlantedPoly pp = random_factorable(rng, testing::random_size(rng, 2, 7), val, {-3, 3});
    const std::size_t n = pp.poly.degree();
    const RegionUnion b = brauer(companion(pp.poly), Axis::kRows);
    const auto& ovals = std::get<std::vector<CassiniOval>>(b.constraints());
    for (const Rational& root : pp.roots) {
      const Membership m = b.contains(root);
      ASSERT_TRUE(m.member);
      const CaseReport r = brauer_root_cases(pp.poly, root);
      for (const std::size_t w : m.witnesses) {
        const bool last = ovals[w].indices[1] == n - 1;
        ASSERT_TRUE(holds(r, last ? "row.b2" : "row.b1"));
      }
    }
  }
}

}  // namespace
}  // namespace ultrametric
