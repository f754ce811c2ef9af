// Copyright 2026 The smzi Authors
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

#pragma once

#include <cstdint>

#include "smzi/complex_mat.hpp"

namespace smzi {

/// Haar-random m x m unitary: a complex Gaussian matrix orthonormalized by
/// twice-iterated Gram-Schmidt. Deterministic for a fixed (m, seed) pair;
/// the result certifies unitarity at 1e-12.
UnitaryMatrix haar_random_unitary(std::size_t m, std::uint64_t seed);

} // namespace smzi
