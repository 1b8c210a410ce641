#pragma once

// JSON encodings for matrices, polynomials, regions and reports.
//
// Rationals are strings "num/den" (or "num"); absolute values are the integer
// exponent e of p^(-e), or "inf" for |0|. Matrix and region indices are
// 1-based in JSON. Objects use nlohmann::json's sorted keys, so output is
// deterministic.

#include <optional>

#include <nlohmann/json.hpp>

#include "ultrametric/certificates.hpp"
#include "ultrametric/matrix.hpp"
#include "ultrametric/polynomials.hpp"
#include "ultrametric/regions.hpp"

namespace ultrametric::io {

using json = nlohmann::json;

json to_json(const Rational& x);
json to_json(AbsExp a);
json to_json(const Valuation& v);

Rational rational_from_json(const json& j);
AbsExp abs_from_json(const json& j);
/// "p" as a prime integer or the string "trivial".
Valuation valuation_from_json(const json& j);

/// {"p": 3, "entries": [["1","1/2"],["0","3"]]}. `p_override` replaces (or
/// supplies) the "p" field.
Matrix matrix_from_json(const json& j, std::optional<Valuation> p_override = std::nullopt);
json to_json(const Matrix& a);

/// {"p": 5, "coeffs": ["c0", "c1", ...]}, c0..c_{n-1}; the degree is inferred.
MonicPoly poly_from_json(const json& j, std::optional<Valuation> p_override = std::nullopt);
json to_json(const MonicPoly& p);

/// {"axis":"rows","kind":"brauer","p":3,"ovals":[{"j":1,"k":2,"c1":"1","c2":"1","rp":0}]}.
/// Gershgorin unions use "disks" [{"j","c","r"}]; tri-oval unions use
/// "triovals" [{"j","k","l","c1","c2","c3","rp"}].
json to_json(const RegionUnion& r);
RegionUnion region_from_json(const json& j, std::optional<Valuation> p_override = std::nullopt);

json to_json(const RegionUnion& r, const Membership& m);
json to_json(const Certificate& c);
json to_json(const DetBoundReport& r, const Rational& determinant);
json to_json(const CaseReport& r);
json to_json(const NewtonPolygon& p);
json to_json(const PolygonBoundReport& r);

}  // namespace ultrametric::io
