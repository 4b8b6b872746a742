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

#include "pbtsim/linalg.hpp"
#include "pbtsim/pbt_choi.hpp"
#include "pbtsim/resource_states.hpp"

namespace pbtsim {

// Dense square-root measurement for small port counts. Register order is
// (A_2, ..., A_N, A_1, C), matching the spin basis.

inline constexpr int kMaxOraclePorts = 8;

struct DensePovm {
  int n = 0;
  ComplexMatrix rho;                // sum of sigma_i
  ComplexMatrix support_projector;  // onto the support of rho
  ComplexMatrix pi_1;
};

/// Embeds a two-qubit operator acting on qubits (q1, q2) of an nq-qubit register.
ComplexMatrix embed_two_qubit(const ComplexMatrix& op, int q1, int q2, int nq);

/// Singlet projector between C and A_port (1-based).
ComplexMatrix sigma(int n, int port);

DensePovm build_povm(int n);

/// Pi_port obtained from Pi_1 by exchanging A_1 and A_port.
ComplexMatrix povm_element(const DensePovm& povm, int port);

ChoiMatrix oracle_choi(const DensePovm& povm, const ReducedResource& reduced);
ChoiMatrix oracle_choi(const ReducedResource& reduced);

/// Average over outcomes i of the channel teleported to port i, for a
/// resource that need not be symmetric.
ChoiMatrix oracle_choi_unsymmetrized(const FullResource& full);

/// Exchanges ports 1 and `port` (1-based) of a full resource.
FullResource swap_ports(const FullResource& full, int port);

}  // namespace pbtsim
