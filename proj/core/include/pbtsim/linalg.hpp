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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace pbtsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

// Qubit registers are laid out big-endian: qubit 0 is the most significant
// bit of a computational-basis index.

constexpr std::int64_t dim_of(int qubits) { return std::int64_t{1} << qubits; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// a^{⊗ times}; times == 0 gives the 1x1 identity.
ComplexMatrix kron_power(const ComplexMatrix& a, int times);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

double hermiticity_error(const ComplexMatrix& m);

// Eigenvalues of the Hermitian part of m, ascending.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

// Sum of |eigenvalue| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

// |m| = sqrt(m^† m) for Hermitian m, via eigendecomposition.
ComplexMatrix hermitian_abs(const ComplexMatrix& m);

// Reorders qubits: output qubit k is input qubit order[k].
ComplexMatrix permute_qubits(const ComplexMatrix& rho, std::span<const int> order);

// Traces out the listed qubits of an n-qubit operator; remaining qubits keep
// their relative order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits,
                            std::span<const int> traced);

// Random density matrix from the Ginibre ensemble (full rank).
template <class Rng>
ComplexMatrix random_density_matrix(std::int64_t dim, Rng& rng);

}  // namespace pbtsim

#include "pbtsim/detail/random_density.ipp"
