#include "ultrametric/json_io.hpp"

#include <string>

#include "ultrametric/errors.hpp"

namespace ultrametric::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) {
    throw InputError("expected a JSON object");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

Valuation resolve_valuation(const json& j, std::optional<Valuation> p_override) {
  if (p_override) {
    return *p_override;
  }
  if (!j.is_object() || !j.contains("p")) {
    throw InputError("missing field \"p\" (or pass --p)");
  }
  return valuation_from_json(j.at("p"));
}

std::size_t index_from_json(const json& j, std::size_t n) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || static_cast<std::size_t>(j.get<long long>()) > n) {
    throw InputError("region index out of range: " + j.dump());
  }
  return static_cast<std::size_t>(j.get<long long>()) - 1;
}

json pair_checks(const std::vector<PairCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    out.push_back({{"j", c.j + 1}, {"k", c.k + 1}, {"holds", c.holds}});
  }
  return out;
}

json optional_rational(const std::optional<Rational>& x) { return x ? to_json(*x) : json(nullptr); }

}  // namespace

json to_json(const Rational& x) { return x.to_string(); }

json to_json(AbsExp a) {
  if (a.is_zero()) {
    return "inf";
  }
  return a.exponent();
}

json to_json(const Valuation& v) {
  if (v.is_trivial()) {
    return "trivial";
  }
  return v.prime();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    return Rational::parse(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(j.get<long>());
  }
  throw InputError("expected a rational string, got " + j.dump());
}

AbsExp abs_from_json(const json& j) {
  if (j.is_string()) {
    return AbsExp::parse(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return AbsExp(j.get<std::int64_t>());
  }
  throw InputError("expected an exponent or \"inf\", got " + j.dump());
}

Valuation valuation_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "trivial") {
    return Valuation::trivial();
  }
  if (j.is_number_integer() && j.get<long long>() >= 0) {
    return Valuation::p_adic(j.get<std::uint64_t>());
  }
  throw InputError("invalid p " + j.dump() + " (expected a prime or \"trivial\")");
}

Matrix matrix_from_json(const json& j, std::optional<Valuation> p_override) {
  const Valuation val = resolve_valuation(j, p_override);
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.empty()) {
    throw InputError("\"entries\" must be a non-empty array of rows");
  }
  std::vector<std::vector<Rational>> rows;
  for (const json& row : entries) {
    if (!row.is_array()) {
      throw InputError("matrix row must be an array");
    }
    std::vector<Rational> r;
    for (const json& x : row) {
      r.push_back(rational_from_json(x));
    }
    rows.push_back(std::move(r));
  }
  return Matrix(rows, val);
}

json to_json(const Matrix& a) {
  json rows = json::array();
  for (std::size_t j = 0; j < a.size(); ++j) {
    json row = json::array();
    for (std::size_t k = 0; k < a.size(); ++k) {
      row.push_back(to_json(a(j, k)));
    }
    rows.push_back(std::move(row));
  }
  return {{"p", to_json(a.valuation())}, {"entries", std::move(rows)}};
}

MonicPoly poly_from_json(const json& j, std::optional<Valuation> p_override) {
  const Valuation val = resolve_valuation(j, p_override);
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) {
    throw InputError("\"coeffs\" must be a non-empty array c0..c_{n-1}");
  }
  std::vector<Rational> c;
  for (const json& x : coeffs) {
    c.push_back(rational_from_json(x));
  }
  return MonicPoly(std::move(c), val);
}

json to_json(const MonicPoly& p) {
  json coeffs = json::array();
  for (const Rational& c : p.coeffs()) {
    coeffs.push_back(to_json(c));
  }
  return {{"p", to_json(p.valuation())}, {"coeffs", std::move(coeffs)}};
}

json to_json(const RegionUnion& r) {
  json out = {{"axis", to_string(r.axis())}, {"kind", to_string(r.kind())}, {"p", to_json(r.valuation())}};
  switch (r.kind()) {
    case RegionKind::kGershgorin: {
      json disks = json::array();
      for (const Disk& d : std::get<std::vector<Disk>>(r.constraints())) {
        disks.push_back({{"j", d.index + 1}, {"c", to_json(d.center)}, {"r", to_json(d.radius)}});
      }
      out["disks"] = std::move(disks);
      break;
    }
    case RegionKind::kBrauer: {
      json ovals = json::array();
      for (const CassiniOval& o : std::get<std::vector<CassiniOval>>(r.constraints())) {
        ovals.push_back({{"j", o.indices[0] + 1},
                         {"k", o.indices[1] + 1},
                         {"c1", to_json(o.centers[0])},
                         {"c2", to_json(o.centers[1])},
                         {"rp", to_json(o.radius_product)}});
      }
      out["ovals"] = std::move(ovals);
      break;
    }
    case RegionKind::kTriOval: {
      json ovals = json::array();
      for (const TriOval& o : std::get<std::vector<TriOval>>(r.constraints())) {
        ovals.push_back({{"j", o.indices[0] + 1},
                         {"k", o.indices[1] + 1},
                         {"l", o.indices[2] + 1},
                         {"c1", to_json(o.centers[0])},
                         {"c2", to_json(o.centers[1])},
                         {"c3", to_json(o.centers[2])},
                         {"rp", to_json(o.radius_product)}});
      }
      out["triovals"] = std::move(ovals);
      break;
    }
  }
  return out;
}

RegionUnion region_from_json(const json& j, std::optional<Valuation> p_override) {
  const Valuation val = resolve_valuation(j, p_override);
  const json& axis_field = field(j, "axis");
  const json& kind_field = field(j, "kind");
  if (!axis_field.is_string() || !kind_field.is_string()) {
    throw InputError("\"axis\" and \"kind\" must be strings");
  }
  const Axis axis = parse_axis(axis_field.get<std::string>());
  // Indices are bounded only by the largest size_t; they are labels here.
  constexpr std::size_t kAnyIndex = static_cast<std::size_t>(-1) / 2;
  switch (parse_region_kind(kind_field.get<std::string>())) {
    case RegionKind::kGershgorin: {
      std::vector<Disk> disks;
      for (const json& d : field(j, "disks")) {
        disks.push_back({rational_from_json(field(d, "c")), abs_from_json(field(d, "r")),
                         index_from_json(field(d, "j"), kAnyIndex)});
      }
      return {std::move(disks), axis, val};
    }
    case RegionKind::kBrauer: {
      std::vector<CassiniOval> ovals;
      for (const json& o : field(j, "ovals")) {
        ovals.push_back({{rational_from_json(field(o, "c1")), rational_from_json(field(o, "c2"))},
                         abs_from_json(field(o, "rp")),
                         {index_from_json(field(o, "j"), kAnyIndex), index_from_json(field(o, "k"), kAnyIndex)}});
      }
      return {std::move(ovals), axis, val};
    }
    case RegionKind::kTriOval: {
      std::vector<TriOval> ovals;
      for (const json& o : field(j, "triovals")) {
        ovals.push_back({{rational_from_json(field(o, "c1")), rational_from_json(field(o, "c2")),
                          rational_from_json(field(o, "c3"))},
                         abs_from_json(field(o, "rp")),
                         {index_from_json(field(o, "j"), kAnyIndex), index_from_json(field(o, "k"), kAnyIndex),
                          index_from_json(field(o, "l"), kAnyIndex)}});
      }
      return {std::move(ovals), axis, val};
    }
  }
  throw InputError("unknown region kind");
}

json to_json(const RegionUnion& r, const Membership& m) {
  json witnesses = json::array();
  std::visit(
      [&](const auto& list) {
        for (const std::size_t pos : m.witnesses) {
          json idx = json::array();
          if constexpr (requires { list[pos].indices; }) {
            for (const std::size_t i : list[pos].indices) {
              idx.push_back(i + 1);
            }
          } else {
            idx.push_back(list[pos].index + 1);
          }
          witnesses.push_back(std::move(idx));
        }
      },
      r.constraints());
  return {{"member", m.member}, {"positions", m.witnesses}, {"witnesses", std::move(witnesses)}};
}

json to_json(const Certificate& c) {
  return {{"verdict", to_string(c.verdict)},
          {"detail",
           {{"row_dominance", c.row_dominance},
            {"column_dominance", c.column_dominance},
            {"row_ostrowski", pair_checks(c.row_ostrowski)},
            {"column_ostrowski", pair_checks(c.column_ostrowski)}}}};
}

json to_json(const DetBoundReport& r, const Rational& determinant) {
  return {{"bound", to_json(r.bound)}, {"det", to_json(determinant)}, {"det_abs", to_json(r.det_abs)},
          {"holds", r.holds}};
}

json to_json(const CaseReport& r) {
  json theorems = json::array();
  json satisfied = json::array();
  for (const auto& t : r.theorems) {
    json branches = json::array();
    for (const auto& b : t.branches) {
      json entry = {{"id", b.id}, {"lhs", to_json(b.lhs)}, {"rhs", to_json(b.rhs)}, {"holds", b.holds}};
      if (b.holds) {
        satisfied.push_back(entry);
      }
      branches.push_back(std::move(entry));
    }
    theorems.push_back({{"theorem", t.theorem},
                        {"branches", std::move(branches)},
                        {"not_applicable", t.not_applicable},
                        {"satisfied", t.satisfied()}});
  }
  return {{"theorems", std::move(theorems)}, {"satisfied", std::move(satisfied)}};
}

json to_json(const NewtonPolygon& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices) {
    vertices.push_back({v.index, v.valuation});
  }
  json segments = json::array();
  json slopes = json::array();
  for (const auto& s : p.segments) {
    segments.push_back({{"slope", to_json(s.slope)}, {"length", s.length}});
    slopes.push_back(to_json(s.slope));
  }
  json vals = json::array();
  for (const auto& v : p.root_valuations()) {
    vals.push_back(to_json(v));
  }
  return {{"vertices", std::move(vertices)},
          {"segments", std::move(segments)},
          {"slopes", std::move(slopes)},
          {"root_valuations", std::move(vals)},
          {"zero_roots", p.zero_roots}};
}

json to_json(const PolygonBoundReport& r) {
  return {{"upper", to_json(r.upper)},
          {"lower", r.lower ? to_json(*r.lower) : json(nullptr)},
          {"min_root_val", optional_rational(r.min_root_val)},
          {"max_root_val", optional_rational(r.max_root_val)},
          {"upper_ok", r.upper_ok},
          {"lower_ok", r.lower_ok ? json(*r.lower_ok) : json(nullptr)}};
}

}  // namespace ultrametric::io
