// Copyright 2026 The Authors.
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

#ifndef MPK_WITNESS_HPP_
#define MPK_WITNESS_HPP_

#include <memory>
#include <vector>

namespace mpk {

// Persistent record of how a table entry was obtained. A node contributes its
// own items plus those of up to two parent nodes, so convolution splits and
// DP chains share structure. A null witness is the empty set.
struct WitnessNode;
using Witness = std::shared_ptr<const WitnessNode>;

struct WitnessNode {
  std::vector<int> items;
  Witness left;
  Witness right;
};

Witness make_leaf(std::vector<int> items);
Witness join(const Witness& a, const Witness& b);
Witness extend(const Witness& base, int item);

// Sorted item ids reachable from w. Ids are expected to be distinct.
std::vector<int> decode(const Witness& w);

}  // namespace mpk

#endif  // MPK_WITNESS_HPP_
