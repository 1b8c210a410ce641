#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ultrametric/matrix.hpp"
#include "ultrametric/regions.hpp"

namespace ultrametric {

/// Entry j is |a_jj| > radius_j, strictly. A zero diagonal entry never passes.
std::vector<bool> check_dominance(const Matrix& a, Axis axis);

struct PairCheck {
  std::size_t j;
  std::size_t k;
  bool holds;  // |a_jj| |a_kk| > radius_j radius_k
};

/// Every unordered pair j < k in lexicographic order.
/// Throws PreconditionError for n = 1.
std::vector<PairCheck> check_ostrowski(const Matrix& a, Axis axis);

bool all_hold(const std::vector<bool>& checks);
bool all_hold(const std::vector<PairCheck>& checks);

enum class Verdict { kRowDominance, kColumnDominance, kRowOstrowski, kColumnOstrowski, kInconclusive };

std::string_view to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::kInconclusive;
  std::vector<bool> row_dominance;
  std::vector<bool> column_dominance;
  // Empty for n = 1.
  std::vector<PairCheck> row_ostrowski;
  std::vector<PairCheck> column_ostrowski;
};

/// Tries row dominance, column dominance, row Ostrowski, column Ostrowski in
/// that order and reports the first that passes in full. All four detail
/// vectors are always filled. Inconclusive says nothing about singularity.
Certificate certify(const Matrix& a);

}  // namespace ultrametric
