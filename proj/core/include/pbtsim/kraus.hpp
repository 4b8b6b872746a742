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
#include <vector>

#include "pbtsim/half_int.hpp"
#include "pbtsim/linalg.hpp"
#include "pbtsim/pbt_choi.hpp"
#include "pbtsim/resource_states.hpp"

namespace pbtsim {

struct KrausSet {
  int in_dim = 0;
  int out_dim = 0;
  std::vector<ComplexMatrix> ops;  // each out_dim x in_dim
};

/// Eigenvalues of the Choi matrix below this are dropped.
inline constexpr double kKrausEigenFloor = 1e-12;

/// Qubit-channel Kraus operators from a unit-trace Choi matrix. Throws
/// std::domain_error for eigenvalues below -1e-9.
KrausSet choi_to_kraus(const ChoiMatrix& choi);

/// (id ⊗ K)(|Phi+><Phi+|) for a 2 -> 2 Kraus set.
ChoiMatrix kraus_to_choi(const KrausSet& kraus);

/// sum_k K state K^dagger.
ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& state);

/// sum_k K^dagger K.
ComplexMatrix completeness_operator(const KrausSet& kraus);

struct ProtocolKrausLabel {
  bool boundary = false;  // K^2 family when true
  HalfInt s;
  HalfInt m;
  int alpha = 1;
};

/// Protocol map from Tr_{B_2..B_N}[pi] (A ⊗ B_1, A ordered as in
/// ReducedResource, B_1 last) to the Choi matrix (C_0 ⊗ B_1).
struct ProtocolKraus {
  int n = 0;
  std::vector<ComplexMatrix> k2;  // ascending m
  std::vector<ComplexMatrix> k1;  // s outer, m middle, alpha inner
  std::vector<ProtocolKrausLabel> labels;  // k2 labels then k1 labels

  /// K^2 block followed by K^1 block.
  KrausSet as_set() const;

  /// Number of operators before tracing out B_2..B_N.
  std::uint64_t unreduced_count() const;
};

ProtocolKraus protocol_kraus(int n);

/// Expected size of the K^1 family: sum over s of gamma(n-1, s) (2s + 1).
std::uint64_t protocol_k1_count(int n);

/// Reduced state on A ⊗ B_1 assembled from the blocks.
ComplexMatrix reduced_state(const ReducedResource& reduced);

/// Square root of the first POVM element on A ⊗ C_1 (C_1 last), from the
/// closed-form eigen-structure.
ComplexMatrix sqrt_pi1(int n);

}  // namespace pbtsim
