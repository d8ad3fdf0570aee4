// Copyright 2026 The agentic-typer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AGENTIC_TYPER_SEQUENCE_DIFF_H_
#define AGENTIC_TYPER_SEQUENCE_DIFF_H_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace agentic_typer {

enum class DiffOpKind { kKeep, kDelete, kInsert };

// A run of identical operations: [a_begin, a_end) of the old sequence is
// kept or deleted, or [b_begin, b_end) of the new one is inserted.
struct DiffOp {
  DiffOpKind kind;
  size_t a_begin, a_end;
  size_t b_begin, b_end;
};

namespace internal {

inline void PushOp(std::vector<DiffOp>& ops, DiffOpKind kind, size_t a,
                   size_t b) {
  const size_t da = kind == DiffOpKind::kInsert ? 0 : 1;
  const size_t db = kind == DiffOpKind::kDelete ? 0 : 1;
  if (!ops.empty() && ops.back().kind == kind && ops.back().a_end == a &&
      ops.back().b_end == b) {
    ops.back().a_end += da;
    ops.back().b_end += db;
    return;
  }
  ops.push_back({kind, a, a + da, b, b + db});
}

}  // namespace internal

// Myers' O((N+M)D) shortest edit script over two sequences, after trimming
// the common prefix and suffix. When the edit distance of the middle section
// exceeds `max_cost`, the middle is reported as one delete plus one insert;
// the script is then still correct but no longer minimal.
template <typename T, typename Eq = std::equal_to<T>>
std::vector<DiffOp> SequenceDiff(std::span<const T> a, std::span<const T> b,
                                 size_t max_cost = 4000, Eq eq = Eq{}) {
  size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && eq(a[prefix], b[prefix])) {
    ++prefix;
  }
  size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         eq(a[a.size() - 1 - suffix], b[b.size() - 1 - suffix])) {
    ++suffix;
  }
  const long n = static_cast<long>(a.size() - prefix - suffix);
  const long m = static_cast<long>(b.size() - prefix - suffix);

  std::vector<DiffOp> ops;
  auto emit = [&](DiffOpKind kind, size_t ai, size_t bi) {
    internal::PushOp(ops, kind, ai, bi);
  };
  for (size_t i = 0; i < prefix; ++i) emit(DiffOpKind::kKeep, i, i);

  auto coarse = [&] {
    for (long i = 0; i < n; ++i) {
      emit(DiffOpKind::kDelete, prefix + i, prefix);
    }
    for (long j = 0; j < m; ++j) {
      emit(DiffOpKind::kInsert, prefix + n, prefix + j);
    }
  };

  if (n == 0 || m == 0) {
    coarse();
  } else {
    const long max_d = std::min<long>(n + m, static_cast<long>(max_cost));
    const long offset = max_d + 1;
    std::vector<long> v(2 * offset + 1, 0);
    // trace[d] holds v[-d..d] as it was before step d.
    std::vector<std::vector<long>> trace;
    long found_d = -1;
    for (long d = 0; d <= max_d && found_d < 0; ++d) {
      trace.emplace_back(v.begin() + offset - d, v.begin() + offset + d + 1);
      for (long k = -d; k <= d; k += 2) {
        long x;
        if (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1])) {
          x = v[offset + k + 1];
        } else {
          x = v[offset + k - 1] + 1;
        }
        long y = x - k;
        while (x < n && y < m && eq(a[prefix + x], b[prefix + y])) {
          ++x;
          ++y;
        }
        v[offset + k] = x;
        if (x >= n && y >= m) {
          found_d = d;
          break;
        }
      }
    }
    if (found_d < 0) {
      coarse();
    } else {
      struct Step {
        DiffOpKind kind;
        long x, y;
      };
      std::vector<Step> steps;
      long x = n, y = m;
      for (long d = found_d; d > 0; --d) {
        const std::vector<long>& prev = trace[d];
        auto at = [&](long k) { return prev[k + d]; };
        const long k = x - y;
        long prev_k;
        if (k == -d || (k != d && at(k - 1) < at(k + 1))) {
          prev_k = k + 1;
        } else {
          prev_k = k - 1;
        }
        const long prev_x = at(prev_k);
        const long prev_y = prev_x - prev_k;
        while (x > prev_x && y > prev_y) {
          --x;
          --y;
          steps.push_back({DiffOpKind::kKeep, x, y});
        }
        if (x == prev_x) {
          steps.push_back({DiffOpKind::kInsert, x, prev_y});
        } else {
          steps.push_back({DiffOpKind::kDelete, prev_x, y});
        }
        x = prev_x;
        y = prev_y;
      }
      while (x > 0 && y > 0) {
        --x;
        --y;
        steps.push_back({DiffOpKind::kKeep, x, y});
      }
      for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        emit(it->kind, prefix + it->x, prefix + it->y);
      }
    }
  }
  for (size_t i = 0; i < suffix; ++i) {
    emit(DiffOpKind::kKeep, a.size() - suffix + i, b.size() - suffix + i);
  }
  return ops;
}

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_SEQUENCE_DIFF_H_
