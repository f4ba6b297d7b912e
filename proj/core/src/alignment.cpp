// core/src/alignment.cpp

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

#include "phonoscore/alignment.hpp"

#include <algorithm>
#include <stdexcept>

namespace phonoscore {

const char* EditOpKindName(EditOpKind k) {
  switch (k) {
    case EditOpKind::Match: return "match";
    case EditOpKind::Substitute: return "substitute";
    case EditOpKind::Delete: return "delete";
    case EditOpKind::Insert: return "insert";
  }
  return "match";
}

double masked_distance(const FeatureVector& ref, const FeatureVector& hyp) {
  int mismatches = 0, mask = 0;
  for (int i = 0; i < kFeatureDims; ++i) {
    if (ref.v[i] != 0 || hyp.v[i] != 0) {
      ++mask;
      mismatches += (ref.v[i] != hyp.v[i]);
    }
  }
  if (mask == 0) return 0.0;  // no applicable features, no evidence of error
  return static_cast<double>(mismatches) / static_cast<double>(mask);
}

double masked_distance_over(const FeatureVector& ref, const FeatureVector& hyp,
                            std::span<const int> dims) {
  int mismatches = 0, mask = 0;
  for (int i : dims) {
    if (ref.v[i] != 0 || hyp.v[i] != 0) {
      ++mask;
      mismatches += (ref.v[i] != hyp.v[i]);
    }
  }
  if (mask == 0) return 0.0;
  return static_cast<double>(mismatches) / static_cast<double>(mask);
}

namespace {

// Backtrace moves.  The fill order encodes the tie-break: a diagonal step
// wins ties, delete wins over insert.
enum Move : std::uint8_t { kDiag = 0, kUp = 1, kLeft = 2 };

}  // namespace

Alignment align_with_costs(int ref_len, int hyp_len,
                           const std::function<double(int, int)>& sub_cost,
                           double indel_cost) {
  const int n = ref_len, m = hyp_len;
  const int width = m + 1;
  std::vector<double> dist(static_cast<size_t>(n + 1) * width);
  std::vector<std::uint8_t> move(dist.size());

  dist[0] = 0.0;
  for (int j = 1; j <= m; ++j) {
    dist[j] = dist[j - 1] + indel_cost;
    move[j] = kLeft;
  }
  for (int i = 1; i <= n; ++i) {
    dist[i * width] = dist[(i - 1) * width] + indel_cost;
    move[i * width] = kUp;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      double best = dist[(i - 1) * width + (j - 1)] + sub_cost(i - 1, j - 1);
      std::uint8_t best_move = kDiag;
      const double del = dist[(i - 1) * width + j] + indel_cost;
      if (del < best) {
        best = del;
        best_move = kUp;
      }
      const double ins = dist[i * width + (j - 1)] + indel_cost;
      if (ins < best) {
        best = ins;
        best_move = kLeft;
      }
      dist[i * width + j] = best;
      move[i * width + j] = best_move;
    }
  }

  Alignment out;
  out.ref_len = n;
  out.hyp_len = m;
  out.total_cost = dist[static_cast<size_t>(n) * width + m];
  out.ops.reserve(static_cast<size_t>(n) + m);
  int i = n, j = m;
  while (i > 0 || j > 0) {
    EditOp op;
    switch (move[i * width + j]) {
      case kDiag: {
        const double c = sub_cost(i - 1, j - 1);
        op.kind = c == 0.0 ? EditOpKind::Match : EditOpKind::Substitute;
        op.ref_index = i - 1;
        op.hyp_index = j - 1;
        op.cost = c;
        --i;
        --j;
        break;
      }
      case kUp:
        op.kind = EditOpKind::Delete;
        op.ref_index = i - 1;
        op.cost = indel_cost;
        --i;
        break;
      default:
        op.kind = EditOpKind::Insert;
        op.hyp_index = j - 1;
        op.cost = indel_cost;
        --j;
        break;
    }
    out.ops.push_back(op);
  }
  std::reverse(out.ops.begin(), out.ops.end());
  return out;
}

Alignment nw_align(std::span<const FeatureVector> ref,
                   std::span<const FeatureVector> hyp, double indel_cost) {
  if (indel_cost <= 0.0)
    throw std::invalid_argument("nw_align: indel cost must be positive");
  return align_with_costs(
      static_cast<int>(ref.size()), static_cast<int>(hyp.size()),
      [&](int i, int j) { return masked_distance(ref[i], hyp[j]); },
      indel_cost);
}

}  // namespace phonoscore
