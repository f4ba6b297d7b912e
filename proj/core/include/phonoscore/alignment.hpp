// core/include/phonoscore/alignment.hpp

// Copyright 2026  Phonoscore Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PHONOSCORE_ALIGNMENT_HPP_
#define PHONOSCORE_ALIGNMENT_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "phonoscore/feature.hpp"

namespace phonoscore {

enum class EditOpKind : std::uint8_t { Match, Substitute, Delete, Insert };

const char* EditOpKindName(EditOpKind k);

struct EditOp {
  EditOpKind kind = EditOpKind::Match;
  // Match/Substitute carry both indices, Delete only ref, Insert only hyp.
  int ref_index = -1;
  int hyp_index = -1;
  double cost = 0.0;
};

// A monotone, complete, non-crossing alignment of two sequences.
struct Alignment {
  std::vector<EditOp> ops;
  double total_cost = 0.0;
  int ref_len = 0;
  int hyp_len = 0;

  int count(EditOpKind k) const {
    int n = 0;
    for (const EditOp& op : ops) n += (op.kind == k);
    return n;
  }
};

// NA-masked normalized distance between two ternary vectors: the fraction
// of mismatched dimensions among those that are non-zero on either side.
// Two all-zero vectors (an empty mask) cost 0.  Result is in [0, 1] and
// equals 0 iff the vectors are identical.
double masked_distance(const FeatureVector& ref, const FeatureVector& hyp);

// As above but only dimensions listed in `dims` participate in the mask.
double masked_distance_over(const FeatureVector& ref, const FeatureVector& hyp,
                            std::span<const int> dims);

// Global alignment minimizing substitution cost plus indel_cost per
// insertion/deletion.  The backtrace is deterministic: on cost ties the
// preference is substitute/match, then delete, then insert.  A diagonal
// step with zero cost is reported as Match.
Alignment align_with_costs(int ref_len, int hyp_len,
                           const std::function<double(int, int)>& sub_cost,
                           double indel_cost);

// Needleman-Wunsch over feature vectors with the masked substitution cost.
Alignment nw_align(std::span<const FeatureVector> ref,
                   std::span<const FeatureVector> hyp,
                   double indel_cost = 1.0);

// Classic unit-cost edit distance with the same tie-break rules; the total
// cost is the Levenshtein distance.
template <typename T>
Alignment levenshtein_align(std::span<const T> ref, std::span<const T> hyp) {
  return align_with_costs(
      static_cast<int>(ref.size()), static_cast<int>(hyp.size()),
      [&](int i, int j) { return ref[i] == hyp[j] ? 0.0 : 1.0; }, 1.0);
}

template <typename T>
Alignment levenshtein_align(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return levenshtein_align(std::span<const T>(ref), std::span<const T>(hyp));
}

}  // namespace phonoscore

#endif  // PHONOSCORE_ALIGNMENT_HPP_
