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

#ifndef NAMELINK_SIMILARITY_H_
#define NAMELINK_SIMILARITY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace namelink {

// Shared leading characters of `a` and `b` divided by the longer length,
// counted in code points. 0 when either is empty.
double Sim(std::string_view a, std::string_view b);

// Atomic token score of two token lists. Tokens are paired one-to-one so as
// to maximise the summed Sim; the sum is divided by the longer list's size.
double AtomicToken(const std::vector<std::string>& s1,
                   const std::vector<std::string>& s2);

// Weighted atomic token score. Each pairing of the k-th token of the shorter
// list with the i-th token of the longer one (n2 tokens) contributes
// (1 - |i - k| / n2) * Sim, destination tokens are used at most once, and the
// best total is divided by the shorter list's size. Order sensitive.
double WeightedAtomicToken(const std::vector<std::string>& s1,
                           const std::vector<std::string>& s2);

// Maximum-weight one-to-one assignment of rows to columns for a dense
// rows x cols matrix with rows <= cols. Returns the column chosen for each
// row.
std::vector<size_t> MaxWeightAssignment(
    const std::vector<std::vector<double>>& weights);

// Edit distance with unit-cost insertions, deletions and substitutions over
// code points.
size_t Levenshtein(std::string_view a, std::string_view b);
size_t Levenshtein(std::u32string_view a, std::u32string_view b);

}  // namespace namelink

#endif  // NAMELINK_SIMILARITY_H_
