#pragma once

// Root bounds for monic polynomials over a valued field, derived from
// eigenvalue regions of the companion matrix, together with a Newton
// polygon that gives the exact valuations of all roots (in the algebraic
// closure) as an independent check on those bounds.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ultrametric/matrix.hpp"
#include "ultrametric/monic_poly.hpp"

namespace ultrametric {

/// Frobenius companion matrix: superdiagonal ones, last row -c0 .. -c_{n-1}.
Matrix companion(const MonicPoly& p);

/// q(z) = z^n p(1/z) / c0, with coefficients 1/c0, c_{n-1}/c0, ..., c1/c0.
/// Throws PreconditionError when c0 = 0.
MonicPoly reciprocal(const MonicPoly& p);

/// max{1, |c0|, ..., |c_{n-1}|}: every root has at most this absolute value.
AbsExp root_upper_bound(const MonicPoly& p);

/// |c0| / max{1, |c0|, ..., |c_{n-1}|}: every root has at least this
/// absolute value. Throws PreconditionError when c0 = 0.
AbsExp root_lower_bound(const MonicPoly& p);

// ----------------------------------------------------------- case reports

/// One disjunct of a root-location theorem, with both sides as exponents.
struct Branch {
  std::string id;
  AbsExp lhs;
  AbsExp rhs;
  bool holds = false;  // lhs <= rhs
};

/// All disjuncts of one theorem. The theorem guarantees at least one holds.
struct TheoremCases {
  std::string theorem;
  std::vector<Branch> branches;
  /// Branch families whose index range is empty for this degree.
  std::vector<std::string> not_applicable;

  bool satisfied() const;
};

struct CaseReport {
  std::vector<TheoremCases> theorems;

  std::vector<Branch> satisfied_branches() const;
  bool empty() const { return satisfied_branches().empty(); }
  /// Every theorem in the report has a satisfied branch.
  bool all_theorems_satisfied() const;
};

/// Disjunctions obtained from the row and column Gershgorin disks of the
/// companion matrix. Throws PreconditionError unless p(lambda) = 0.
CaseReport gershgorin_root_cases(const MonicPoly& p, const Rational& lambda);

/// Disjunctions obtained from the row and column Cassini ovals of the
/// companion matrix. Throws PreconditionError unless p(lambda) = 0 and n >= 2.
CaseReport brauer_root_cases(const MonicPoly& p, const Rational& lambda);

/// The Gershgorin- and (for n >= 2) Brauer-derived disjunctions applied to
/// reciprocal(p) at 1/lambda; branch ids use the 1/lambda phrasing and the
/// original coefficient indices. Requires c0 != 0, lambda != 0, p(lambda) = 0.
CaseReport reciprocal_root_cases(const MonicPoly& p, const Rational& lambda);

// ---------------------------------------------------------- Newton polygon

struct PolygonVertex {
  std::int64_t index;
  std::int64_t valuation;
  friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

struct PolygonSegment {
  Rational slope;
  std::int64_t length;
};

struct NewtonPolygon {
  /// Lower hull vertices, left to right; starts at the first nonzero
  /// coefficient and ends at (n, 0).
  std::vector<PolygonVertex> vertices;
  /// Strictly increasing slopes. A segment of slope -m and length l
  /// accounts for l roots of valuation m.
  std::vector<PolygonSegment> segments;
  /// Multiplicity of the root 0 (number of leading zero coefficients).
  std::size_t zero_roots = 0;

  /// Valuations of the nonzero roots with multiplicity, ascending.
  std::vector<Rational> root_valuations() const;
};

NewtonPolygon newton_polygon(const MonicPoly& p);

struct PolygonBoundReport {
  AbsExp upper;
  std::optional<AbsExp> lower;              // only when c0 != 0
  std::optional<Rational> min_root_val;     // absent when every root is 0
  std::optional<Rational> max_root_val;
  bool upper_ok = false;
  std::optional<bool> lower_ok;
};

/// Checks root_upper_bound / root_lower_bound against the root valuations
/// read off the Newton polygon.
PolygonBoundReport verify_bounds_via_polygon(const MonicPoly& p);

}  // namespace ultrametric
