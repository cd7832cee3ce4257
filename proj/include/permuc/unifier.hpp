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

#include "permuc/router.hpp"

namespace permuc {

/// SWAP unitary unifying: for every transition SWAP whose physical pair
/// hosts a logical pair with a (not yet consumed) circuit block, remove the
/// block from its gate set and replace the SWAP by the dressed unitary
/// SWAP * block (block applied first). Map bookkeeping is unchanged.
RoutedProgram dress_swaps(RoutedProgram rp, const std::vector<TwoQubitBlock>& blocks);

}  // namespace permuc
