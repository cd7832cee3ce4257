// Copyright 2026 The permuc authors
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

#include "permuc/unifier.hpp"

#include <algorithm>

namespace permuc {

RoutedProgram dress_swaps(RoutedProgram rp, const std::vector<TwoQubitBlock>& blocks) {
    std::vector<char> consumed(blocks.size(), 0);
    for (auto& ts : rp.swaps) {
        const int la = ts.logical.first;
        const int lb = ts.logical.second;
        if (la < 0 || lb < 0) continue;
        const std::pair<int, int> pair = std::minmax(la, lb);
        int found = -1;
        for (int id = 0; id < static_cast<int>(blocks.size()); ++id)
            if (!consumed[id] && blocks[id].pair == pair) {
                found = id;
                break;
            }
        if (found < 0) continue;
        consumed[found] = 1;
        for (auto& gs : rp.gate_sets) {
            auto it = std::find(gs.begin(), gs.end(), found);
            if (it != gs.end()) {
                gs.erase(it);
                break;
            }
        }
        ts.dressed = true;
        ts.merged_block = found;
        ts.matrix = swap_matrix() * blocks[found].matrix;
        ++rp.swaps_dressed;
    }
    return rp;
}

}  // namespace permuc
