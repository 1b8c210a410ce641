#include "ultrametric/certificates.hpp"

#include <algorithm>

#include "ultrametric/errors.hpp"

namespace ultrametric {

std::vector<bool> check_dominance(const Matrix& a, Axis axis) {
  const auto r = radii(a, axis);
  std::vector<bool> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j] = a.abs(j, j) > r[j];
  }
  return out;
}

std::vector<PairCheck> check_ostrowski(const Matrix& a, Axis axis) {
  const std::size_t n = a.size();
  if (n < 2) {
    throw PreconditionError("ostrowski check requires n >= 2");
  }
  const auto r = radii(a, axis);
  std::vector<PairCheck> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      out.push_back({j, k, a.abs(j, j) * a.abs(k, k) > r[j] * r[k]});
    }
  }
  return out;
}

bool all_hold(const std::vector<bool>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](bool b) { return b; });
}

bool all_hold(const std::vector<PairCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const PairCheck& c) { return c.holds; });
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kRowDominance:
      return "RowDominance";
    case Verdict::kColumnDominance:
      return "ColumnDominance";
    case Verdict::kRowOstrowski:
      return "RowOstrowski";
    case Verdict::kColumnOstrowski:
      return "ColumnOstrowski";
    case Verdict::kInconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

Certificate certify(const Matrix& a) {
  Certificate c;
  c.row_dominance = check_dominance(a, Axis::kRows);
  c.column_dominance = check_dominance(a, Axis::kColumns);
  const bool has_pairs = a.size() >= 2;
  if (has_pairs) {
    c.row_ostrowski = check_ostrowski(a, Axis::kRows);
    c.column_ostrowski = check_ostrowski(a, Axis::kColumns);
  }
  if (all_hold(c.row_dominance)) {
    c.verdict = Verdict::kRowDominance;
  } else if (all_hold(c.column_dominance)) {
    c.verdict = Verdict::kColumnDominance;
  } else if (has_pairs && all_hold(c.row_ostrowski)) {
    c.verdict = Verdict::kRowOstrowski;
  } else if (has_pairs && all_hold(c.column_ostrowski)) {
    c.verdict = Verdict::kColumnOstrowski;
  }
  return c;
}

}  // namespace ultrametric
