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

#pragma once

#include "permuc/types.hpp"

#include <vector>

namespace permuc {

/// Injective map from logical to physical qubits, inverse maintained.
/// Physical slots without a logical qubit hold -1 in the inverse.
class QubitMap {
public:
    QubitMap() = default;

    QubitMap(std::vector<int> phi, int m) : phi_(std::move(phi)), inv_(m, -1) {
        for (int l = 0; l < static_cast<int>(phi_.size()); ++l) {
            const int p = phi_[l];
            if (p < 0 || p >= m) throw input_error("map image out of device range");
            if (inv_[p] != -1) throw input_error("map is not injective");
            inv_[p] = l;
        }
    }

    static QubitMap identity(int n, int m) {
        std::vector<int> phi(n);
        for (int i = 0; i < n; ++i) phi[i] = i;
        return {std::move(phi), m};
    }

    int n() const { return static_cast<int>(phi_.size()); }
    int m() const { return static_cast<int>(inv_.size()); }
    int phys(int logical) const { return phi_[logical]; }
    /// -1 when no logical qubit sits on this physical slot.
    int logical_at(int phys) const { return inv_[phys]; }
    const std::vector<int>& phi() const { return phi_; }

    /// Exchanges the contents of two physical slots (either may be empty).
    void apply_physical_swap(int a, int b) {
        const int la = inv_[a];
        const int lb = inv_[b];
        if (la >= 0) phi_[la] = b;
        if (lb >= 0) phi_[lb] = a;
        std::swap(inv_[a], inv_[b]);
    }

    bool operator==(const QubitMap& o) const = default;

private:
    std::vector<int> phi_;
    std::vector<int> inv_;
};

}  // namespace permuc
