// Copyright 2026 The pbtsim Authors
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

#include <cstdint>

#include "pbtsim/pbt_choi.hpp"

namespace pbtsim {

/// Tr|x - y|.
double trace_norm(const ChoiMatrix& x, const ChoiMatrix& y);

struct DiamondBounds {
  double lower = 0.0;  // Tr|X - Y|
  double upper = 0.0;  // 2 || Tr_out |X - Y| ||_inf
};

DiamondBounds diamond_bounds(const ChoiMatrix& x, const ChoiMatrix& y);

struct DiamondOptions {
  std::uint64_t seed = 0x5eed;
  int restarts = 64;
  double size_tol = 1e-7;
};

/// sup over pure two-qubit inputs of Tr|(id ⊗ (E_x - E_y))(psi)|, by
/// multi-start simplex search. Deterministic for a given seed.
double diamond_numeric(const ChoiMatrix& x, const ChoiMatrix& y, const DiamondOptions& opts = {});

}  // namespace pbtsim
