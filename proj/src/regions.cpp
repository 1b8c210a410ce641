#include "ultrametric/regions.hpp"

#include <string>

#include "ultrametric/errors.hpp"

namespace ultrametric {

namespace {

template <std::size_t N>
AbsExp distance_product(const std::array<Rational, N>& centers, const Rational& z, const Valuation& val) {
  AbsExp product = AbsExp::one();
  for (const Rational& c : centers) {
    product = product * val.abs(z - c);
  }
  return product;
}

}  // namespace

std::string_view to_string(Axis axis) { return axis == Axis::kRows ? "rows" : "columns"; }

Axis parse_axis(std::string_view text) {
  if (text == "rows") {
    return Axis::kRows;
  }
  if (text == "columns") {
    return Axis::kColumns;
  }
  throw InputError("invalid axis \"" + std::string(text) + "\" (expected rows or columns)");
}

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::kGershgorin:
      return "gershgorin";
    case RegionKind::kBrauer:
      return "brauer";
    case RegionKind::kTriOval:
      return "tri-oval";
  }
  return "unknown";
}

RegionKind parse_region_kind(std::string_view text) {
  if (text == "gershgorin") {
    return RegionKind::kGershgorin;
  }
  if (text == "brauer") {
    return RegionKind::kBrauer;
  }
  if (text == "tri-oval") {
    return RegionKind::kTriOval;
  }
  throw InputError("invalid region kind \"" + std::string(text) + "\"");
}

bool Disk::contains(const Rational& z, const Valuation& val) const {
  return val.abs(z - center) <= radius;
}

bool CassiniOval::contains(const Rational& z, const Valuation& val) const {
  return distance_product(centers, z, val) <= radius_product;
}

bool TriOval::contains(const Rational& z, const Valuation& val) const {
  return distance_product(centers, z, val) <= radius_product;
}

std::size_t RegionUnion::size() const {
  return std::visit([](const auto& list) { return list.size(); }, constraints_);
}

Membership RegionUnion::contains(const Rational& z) const {
  Membership m;
  std::visit(
      [&](const auto& list) {
        for (std::size_t i = 0; i < list.size(); ++i) {
          if (list[i].contains(z, valuation_)) {
            m.witnesses.push_back(i);
          }
        }
      },
      constraints_);
  m.member = !m.witnesses.empty();
  return m;
}

std::vector<AbsExp> radii(const Matrix& a, Axis axis) {
  std::vector<AbsExp> r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    r[j] = axis == Axis::kRows ? row_radius(a, j) : col_radius(a, j);
  }
  return r;
}

RegionUnion gershgorin(const Matrix& a, Axis axis) {
  const auto r = radii(a, axis);
  std::vector<Disk> disks;
  disks.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    disks.push_back({a(j, j), r[j], j});
  }
  return {std::move(disks), axis, a.valuation()};
}

RegionUnion brauer(const Matrix& a, Axis axis) {
  const std::size_t n = a.size();
  if (n < 2) {
    throw PreconditionError("brauer requires n >= 2 (no index pairs for n = 1)");
  }
  const auto r = radii(a, axis);
  std::vector<CassiniOval> ovals;
  ovals.reserve(n * (n - 1) / 2);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      ovals.push_back({{a(j, j), a(k, k)}, r[j] * r[k], {j, k}});
    }
  }
  return {std::move(ovals), axis, a.valuation()};
}

RegionUnion tri_oval(const Matrix& a, Axis axis) {
  const std::size_t n = a.size();
  if (n < 3) {
    throw PreconditionError("tri-oval requires n >= 3");
  }
  const auto r = radii(a, axis);
  std::vector<TriOval> ovals;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      for (std::size_t l = k + 1; l < n; ++l) {
        ovals.push_back({{a(j, j), a(k, k), a(l, l)}, r[j] * r[k] * r[l], {j, k, l}});
      }
    }
  }
  return {std::move(ovals), axis, a.valuation()};
}

}  // namespace ultrametric
