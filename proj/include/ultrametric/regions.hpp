#pragma once

// Eigenvalue inclusion regions over a valued field, stored as constraints.
//
// A region over Q_p is an infinite union of balls, so it is never
// enumerated; membership is the only query. Radii and radius products are
// computed from the matrix once, after which a RegionUnion is a
// self-contained value.

#include <array>
#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "ultrametric/matrix.hpp"

namespace ultrametric {

enum class Axis { kRows, kColumns };

std::string_view to_string(Axis axis);
/// "rows" or "columns"; throws InputError otherwise.
Axis parse_axis(std::string_view text);

/// {z : |z - center| <= radius}.
struct Disk {
  Rational center;
  AbsExp radius;
  std::size_t index;

  bool contains(const Rational& z, const Valuation& val) const;
};

/// {z : |z - c1| |z - c2| <= radius_product}.
struct CassiniOval {
  std::array<Rational, 2> centers;
  AbsExp radius_product;
  std::array<std::size_t, 2> indices;

  bool contains(const Rational& z, const Valuation& val) const;
};

/// Three-factor analogue of the Cassini oval. Unions of these are not
/// eigenvalue inclusion sets.
struct TriOval {
  std::array<Rational, 3> centers;
  AbsExp radius_product;
  std::array<std::size_t, 3> indices;

  bool contains(const Rational& z, const Valuation& val) const;
};

enum class RegionKind { kGershgorin, kBrauer, kTriOval };

std::string_view to_string(RegionKind kind);
RegionKind parse_region_kind(std::string_view text);

struct Membership {
  bool member = false;
  /// Positions (in constraint order) of every constraint containing z.
  std::vector<std::size_t> witnesses;
};

class RegionUnion {
 public:
  using Constraints = std::variant<std::vector<Disk>, std::vector<CassiniOval>, std::vector<TriOval>>;

  RegionUnion(Constraints constraints, Axis axis, Valuation valuation)
      : constraints_(std::move(constraints)), axis_(axis), valuation_(valuation) {}

  RegionKind kind() const { return static_cast<RegionKind>(constraints_.index()); }
  Axis axis() const { return axis_; }
  const Valuation& valuation() const { return valuation_; }
  const Constraints& constraints() const { return constraints_; }
  std::size_t size() const;

  Membership contains(const Rational& z) const;

 private:
  Constraints constraints_;
  Axis axis_;
  Valuation valuation_;
};

/// One disk per index, centred at a_jj with radius h_j (rows) or v_j (columns).
RegionUnion gershgorin(const Matrix& a, Axis axis);
/// One oval per unordered pair j < k with radius product h_j h_k (or v_j v_k).
/// Throws PreconditionError for n = 1, where the pair union is empty.
RegionUnion brauer(const Matrix& a, Axis axis);
/// One tri-oval per unordered triple. Throws PreconditionError for n < 3.
RegionUnion tri_oval(const Matrix& a, Axis axis);

/// Per-index radii along an axis: h_j for rows, v_j for columns.
std::vector<AbsExp> radii(const Matrix& a, Axis axis);

}  // namespace ultrametric
