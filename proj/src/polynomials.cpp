#include "ultrametric/polynomials.hpp"

#include <algorithm>
#include <functional>

#include "ultrametric/errors.hpp"

namespace ultrametric {

// ---------------------------------------------------------------- basics

Matrix companion(const MonicPoly& p) {
  const std::size_t n = p.degree();
  Matrix c(n, p.valuation());
  for (std::size_t j = 0; j + 1 < n; ++j) {
    c(j, j + 1) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    c(n - 1, k) = -p.coeffs()[k];
  }
  return c;
}

MonicPoly reciprocal(const MonicPoly& p) {
  const auto c = p.coeffs();
  if (c[0].is_zero()) {
    throw PreconditionError("reciprocal requires c0 != 0");
  }
  const std::size_t n = p.degree();
  std::vector<Rational> q(n);
  q[0] = c[0].inverse();
  for (std::size_t j = 1; j < n; ++j) {
    q[j] = c[n - j] / c[0];
  }
  return MonicPoly(std::move(q), p.valuation());
}

AbsExp root_upper_bound(const MonicPoly& p) {
  AbsExp m = AbsExp::one();
  for (const Rational& c : p.coeffs()) {
    m = std::max(m, p.valuation().abs(c));
  }
  return m;
}

AbsExp root_lower_bound(const MonicPoly& p) {
  if (p.coeffs()[0].is_zero()) {
    throw PreconditionError("lower root bound requires c0 != 0");
  }
  return p.valuation().abs(p.coeffs()[0]) / root_upper_bound(p);
}

// ---------------------------------------------------------- case reports

bool TheoremCases::satisfied() const {
  return std::any_of(branches.begin(), branches.end(), [](const Branch& b) { return b.holds; });
}

std::vector<Branch> CaseReport::satisfied_branches() const {
  std::vector<Branch> out;
  for (const auto& t : theorems) {
    for (const auto& b : t.branches) {
      if (b.holds) {
        out.push_back(b);
      }
    }
  }
  return out;
}

bool CaseReport::all_theorems_satisfied() const {
  return std::all_of(theorems.begin(), theorems.end(), [](const TheoremCases& t) { return t.satisfied(); });
}

namespace {

// The disjunctions are evaluated on a coefficient list d_0..d_{n-1} and a
// root mu. For the reciprocal forms d is the reciprocal polynomial and mu is
// 1/lambda; `label` maps an index of d back to the index of the original
// coefficient it came from, and `prefix` tags the branch ids.
struct CaseInput {
  std::vector<AbsExp> coeff_abs;  // |d_0| .. |d_{n-1}|
  AbsExp mu;                      // |mu|
  AbsExp shifted;                 // |mu + d_{n-1}|
  std::function<std::size_t(std::size_t)> label;
  std::string prefix;

  std::size_t degree() const { return coeff_abs.size(); }
  AbsExp max_one(std::size_t j) const { return std::max(AbsExp::one(), coeff_abs[j]); }
  std::string id(const std::string& stem) const { return prefix + stem; }
  std::string idx(std::size_t j) const { return std::to_string(label(j)); }
};

CaseInput make_input(const MonicPoly& p, const Rational& mu,
                     std::function<std::size_t(std::size_t)> label, std::string prefix) {
  const Valuation& val = p.valuation();
  CaseInput in;
  for (const Rational& c : p.coeffs()) {
    in.coeff_abs.push_back(val.abs(c));
  }
  in.mu = val.abs(mu);
  in.shifted = val.abs(mu + p.coeffs().back());
  in.label = std::move(label);
  in.prefix = std::move(prefix);
  return in;
}

void add(TheoremCases& t, std::string id, AbsExp lhs, AbsExp rhs) {
  t.branches.push_back({std::move(id), lhs, rhs, lhs <= rhs});
}

TheoremCases gershgorin_rows(const CaseInput& in, const std::string& theorem) {
  const std::size_t n = in.degree();
  TheoremCases t{theorem, {}, {}};
  add(t, in.id("row.b1"), in.mu, AbsExp::one());
  const AbsExp tail = abs_max(std::span<const AbsExp>(in.coeff_abs.data(), n - 1));
  add(t, in.id("row.b2"), in.shifted, tail);
  return t;
}

TheoremCases gershgorin_cols(const CaseInput& in, const std::string& theorem) {
  const std::size_t n = in.degree();
  TheoremCases t{theorem, {}, {}};
  add(t, in.id("col.b1"), in.mu, in.coeff_abs[0]);
  if (n < 3) {
    t.not_applicable.push_back(in.id("col.b2"));
  }
  for (std::size_t j = 1; j + 2 <= n; ++j) {
    add(t, in.id("col.b2[j=" + in.idx(j) + "]"), in.mu, in.max_one(j));
  }
  add(t, in.id("col.b3"), in.shifted, AbsExp::one());
  return t;
}

TheoremCases brauer_rows(const CaseInput& in, const std::string& theorem) {
  const std::size_t n = in.degree();
  TheoremCases t{theorem, {}, {}};
  add(t, in.id("row.b1"), in.mu, AbsExp::one());
  const AbsExp tail = abs_max(std::span<const AbsExp>(in.coeff_abs.data(), n - 1));
  add(t, in.id("row.b2"), in.mu * in.shifted, tail);
  return t;
}

TheoremCases brauer_cols(const CaseInput& in, const std::string& theorem) {
  const std::size_t n = in.degree();
  const AbsExp mu_sq = in.mu.pow(2);
  const AbsExp mu_shift = in.mu * in.shifted;
  TheoremCases t{theorem, {}, {}};
  if (n < 3) {
    t.not_applicable.push_back(in.id("col.b1"));
  }
  for (std::size_t j = 1; j + 2 <= n; ++j) {
    add(t, in.id("col.b1[j=" + in.idx(j) + "]"), mu_sq, in.coeff_abs[0] * in.max_one(j));
  }
  add(t, in.id("col.b2"), mu_shift, in.coeff_abs[0]);
  if (n < 4) {
    t.not_applicable.push_back(in.id("col.b3"));
  }
  for (std::size_t j = 1; j + 2 <= n; ++j) {
    for (std::size_t k = j + 1; k + 2 <= n; ++k) {
      const std::size_t a = in.label(j);
      const std::size_t b = in.label(k);
      const std::size_t lo = std::min(a, b);
      const std::size_t hi = std::max(a, b);
      add(t, in.id("col.b3[j=" + std::to_string(lo) + ",k=" + std::to_string(hi) + "]"), mu_sq,
          in.max_one(j) * in.max_one(k));
    }
  }
  if (n < 3) {
    t.not_applicable.push_back(in.id("col.b4"));
  }
  for (std::size_t j = 1; j + 2 <= n; ++j) {
    add(t, in.id("col.b4[j=" + in.idx(j) + "]"), mu_shift, in.max_one(j));
  }
  return t;
}

void require_root(const MonicPoly& p, const Rational& lambda) {
  if (!p.evaluate(lambda).is_zero()) {
    throw PreconditionError("lambda = " + lambda.to_string() + " is not a root of p");
  }
}

std::size_t identity_label(std::size_t j) { return j; }

}  // namespace

CaseReport gershgorin_root_cases(const MonicPoly& p, const Rational& lambda) {
  require_root(p, lambda);
  const CaseInput in = make_input(p, lambda, identity_label, "");
  return {{gershgorin_rows(in, "gershgorin.row"), gershgorin_cols(in, "gershgorin.col")}};
}

CaseReport brauer_root_cases(const MonicPoly& p, const Rational& lambda) {
  if (p.degree() < 2) {
    throw PreconditionError("brauer root cases require degree >= 2");
  }
  require_root(p, lambda);
  const CaseInput in = make_input(p, lambda, identity_label, "");
  return {{brauer_rows(in, "brauer.row"), brauer_cols(in, "brauer.col")}};
}

CaseReport reciprocal_root_cases(const MonicPoly& p, const Rational& lambda) {
  if (p.coeffs()[0].is_zero()) {
    throw PreconditionError("reciprocal root cases require c0 != 0");
  }
  if (lambda.is_zero()) {
    throw PreconditionError("reciprocal root cases require lambda != 0");
  }
  require_root(p, lambda);
  const std::size_t n = p.degree();
  const MonicPoly q = reciprocal(p);
  // q's coefficient j >= 1 is c_{n-j} / c0.
  const CaseInput in = make_input(q, lambda.inverse(), [n](std::size_t j) { return n - j; }, "recip.");
  CaseReport r{{gershgorin_rows(in, "reciprocal.gershgorin.row"),
                gershgorin_cols(in, "reciprocal.gershgorin.col")}};
  if (n >= 2) {
    r.theorems.push_back(brauer_rows(in, "reciprocal.brauer.row"));
    r.theorems.push_back(brauer_cols(in, "reciprocal.brauer.col"));
  }
  return r;
}

// --------------------------------------------------------- Newton polygon

std::vector<Rational> NewtonPolygon::root_valuations() const {
  std::vector<Rational> out;
  for (const auto& s : segments) {
    for (std::int64_t i = 0; i < s.length; ++i) {
      out.push_back(-s.slope);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NewtonPolygon newton_polygon(const MonicPoly& p) {
  const Valuation& val = p.valuation();
  const auto c = p.coeffs();
  const std::size_t n = p.degree();

  NewtonPolygon poly;
  while (poly.zero_roots < n && c[poly.zero_roots].is_zero()) {
    ++poly.zero_roots;
  }

  std::vector<PolygonVertex> points;
  for (std::size_t i = poly.zero_roots; i < n; ++i) {
    if (!c[i].is_zero()) {
      points.push_back({static_cast<std::int64_t>(i), val.abs(c[i]).exponent()});
    }
  }
  points.push_back({static_cast<std::int64_t>(n), 0});

  // Monotone chain, lower hull; collinear middle points are dropped.
  auto cross = [](const PolygonVertex& o, const PolygonVertex& a, const PolygonVertex& b) {
    return static_cast<__int128>(a.index - o.index) * (b.valuation - o.valuation) -
           static_cast<__int128>(a.valuation - o.valuation) * (b.index - o.index);
  };
  for (const auto& pt : points) {
    while (poly.vertices.size() >= 2 &&
           cross(poly.vertices[poly.vertices.size() - 2], poly.vertices.back(), pt) <= 0) {
      poly.vertices.pop_back();
    }
    poly.vertices.push_back(pt);
  }

  for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
    const auto& a = poly.vertices[i];
    const auto& b = poly.vertices[i + 1];
    poly.segments.push_back({Rational(mpz_class(static_cast<long>(b.valuation - a.valuation)),
                                      mpz_class(static_cast<long>(b.index - a.index))),
                             b.index - a.index});
  }
  return poly;
}

PolygonBoundReport verify_bounds_via_polygon(const MonicPoly& p) {
  PolygonBoundReport r;
  r.upper = root_upper_bound(p);
  const auto vals = newton_polygon(p).root_valuations();
  if (!vals.empty()) {
    r.min_root_val = vals.front();
    r.max_root_val = vals.back();
  }
  // |root| <= p^(-e)  <=>  v(root) >= e.
  r.upper_ok = !r.min_root_val || *r.min_root_val >= Rational(static_cast<long>(r.upper.exponent()));
  if (!p.coeffs()[0].is_zero()) {
    r.lower = root_lower_bound(p);
    // |root| >= p^(-e)  <=>  v(root) <= e.
    r.lower_ok = *r.max_root_val <= Rational(static_cast<long>(r.lower->exponent()));
  }
  return r;
}

}  // namespace ultrametric
