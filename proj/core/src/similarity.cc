// Copyright 2026 The Namelink Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "namelink/similarity.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "namelink/unicode.h"

namespace namelink {
namespace {

double SimU32(const std::u32string& a, const std::u32string& b) {
  if (a.empty() || b.empty()) return 0.0;
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  size_t common = static_cast<size_t>(ia - a.begin());
  return static_cast<double>(common) /
         static_cast<double>(std::max(a.size(), b.size()));
}

std::vector<std::u32string> Decode(const std::vector<std::string>& tokens) {
  std::vector<std::u32string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(DecodeUtf8(t));
  return out;
}

double AssignedTotal(const std::vector<std::vector<double>>& weights) {
  std::vector<size_t> columns = MaxWeightAssignment(weights);
  double total = 0.0;
  for (size_t r = 0; r < columns.size(); ++r) total += weights[r][columns[r]];
  return total;
}

}  // namespace

double Sim(std::string_view a, std::string_view b) {
  return SimU32(DecodeUtf8(a), DecodeUtf8(b));
}

std::vector<size_t> MaxWeightAssignment(
    const std::vector<std::vector<double>>& weights) {
  // Hungarian method with potentials on the negated weights; rows and
  // columns are 1-based inside, index 0 is the virtual start column.
  const size_t n = weights.size();
  if (n == 0) return {};
  const size_t m = weights[0].size();
  const double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<size_t> p(m + 1, 0), way(m + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    p[0] = i;
    size_t j0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      size_t i0 = p[j0];
      size_t j1 = 0;
      double delta = kInf;
      for (size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        double cur = -weights[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<size_t> columns(n, 0);
  for (size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) columns[p[j] - 1] = j - 1;
  }
  return columns;
}

double AtomicToken(const std::vector<std::string>& s1,
                   const std::vector<std::string>& s2) {
  std::vector<std::u32string> a = Decode(s1);
  std::vector<std::u32string> b = Decode(s2);
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return 0.0;
  std::vector<std::vector<double>> weights(a.size(),
                                           std::vector<double>(b.size()));
  for (size_t k = 0; k < a.size(); ++k) {
    for (size_t i = 0; i < b.size(); ++i) weights[k][i] = SimU32(a[k], b[i]);
  }
  return AssignedTotal(weights) / static_cast<double>(b.size());
}

double WeightedAtomicToken(const std::vector<std::string>& s1,
                           const std::vector<std::string>& s2) {
  std::vector<std::u32string> a = Decode(s1);
  std::vector<std::u32string> b = Decode(s2);
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return 0.0;
  const double n2 = static_cast<double>(b.size());
  std::vector<std::vector<double>> weights(a.size(),
                                           std::vector<double>(b.size()));
  for (size_t k = 0; k < a.size(); ++k) {
    for (size_t i = 0; i < b.size(); ++i) {
      double dist = static_cast<double>(i > k ? i - k : k - i);
      weights[k][i] = (1.0 - dist / n2) * SimU32(a[k], b[i]);
    }
  }
  double score = AssignedTotal(weights) / static_cast<double>(a.size());
  return std::clamp(score, 0.0, 1.0);
}

size_t Levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), size_t{0});
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diagonal = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t above = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[b.size()];
}

size_t Levenshtein(std::string_view a, std::string_view b) {
  std::u32string ua = DecodeUtf8(a);
  std::u32string ub = DecodeUtf8(b);
  return Levenshtein(std::u32string_view(ua), std::u32string_view(ub));
}

}  // namespace namelink
