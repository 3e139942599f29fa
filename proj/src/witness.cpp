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

#include "mpk/witness.hpp"

#include <algorithm>

namespace mpk {

Witness make_leaf(std::vector<int> items) {
  if (items.empty()) return nullptr;
  return std::make_shared<const WitnessNode>(WitnessNode{std::move(items), nullptr, nullptr});
}

Witness join(const Witness& a, const Witness& b) {
  if (!a) return b;
  if (!b) return a;
  return std::make_shared<const WitnessNode>(WitnessNode{{}, a, b});
}

Witness extend(const Witness& base, int item) {
  return std::make_shared<const WitnessNode>(WitnessNode{{item}, base, nullptr});
}

std::vector<int> decode(const Witness& w) {
  std::vector<int> out;
  std::vector<const WitnessNode*> stack;
  if (w) stack.push_back(w.get());
  while (!stack.empty()) {
    const WitnessNode* node = stack.back();
    stack.pop_back();
    out.insert(out.end(), node->items.begin(), node->items.end());
    if (node->left) stack.push_back(node->left.get());
    if (node->right) stack.push_back(node->right.get());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mpk
