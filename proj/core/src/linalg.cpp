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

#include "pbtsim/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pbtsim {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& a, int times) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int i = 0; i < times; ++i) out = kron(out, a);
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double trace_norm(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m).cwiseAbs().sum();
}

ComplexMatrix hermitian_abs(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  return es.eigenvectors() * es.eigenvalues().cwiseAbs().asDiagonal() *
         es.eigenvectors().adjoint();
}

ComplexMatrix permute_qubits(const ComplexMatrix& rho, std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  const std::int64_t dim = dim_of(n);
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("permute_qubits: dimension does not match qubit count");
  }
  // map[out_index] = in_index
  std::vector<std::int64_t> map(static_cast<std::size_t>(dim));
  for (std::int64_t out = 0; out < dim; ++out) {
    std::int64_t in = 0;
    for (int k = 0; k < n; ++k) {
      const std::int64_t bit = (out >> (n - 1 - k)) & 1;
      in |= bit << (n - 1 - order[static_cast<std::size_t>(k)]);
    }
    map[static_cast<std::size_t>(out)] = in;
  }
  ComplexMatrix out(dim, dim);
  for (std::int64_t c = 0; c < dim; ++c) {
    const auto ic = map[static_cast<std::size_t>(c)];
    for (std::int64_t r = 0; r < dim; ++r) {
      out(r, c) = rho(map[static_cast<std::size_t>(r)], ic);
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits,
                            std::span<const int> traced) {
  const std::int64_t dim = dim_of(n_qubits);
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("partial_trace: dimension does not match qubit count");
  }
  std::vector<bool> is_traced(static_cast<std::size_t>(n_qubits), false);
  for (int q : traced) {
    if (q < 0 || q >= n_qubits) throw std::invalid_argument("partial_trace: bad qubit");
    is_traced[static_cast<std::size_t>(q)] = true;
  }
  std::vector<int> kept;
  std::vector<int> gone;
  for (int q = 0; q < n_qubits; ++q) {
    (is_traced[static_cast<std::size_t>(q)] ? gone : kept).push_back(q);
  }
  const int nk = static_cast<int>(kept.size());
  const int ng = static_cast<int>(gone.size());
  auto compose = [&](std::int64_t kept_bits, std::int64_t gone_bits) {
    std::int64_t idx = 0;
    for (int k = 0; k < nk; ++k) {
      idx |= ((kept_bits >> (nk - 1 - k)) & 1) << (n_qubits - 1 - kept[static_cast<std::size_t>(k)]);
    }
    for (int g = 0; g < ng; ++g) {
      idx |= ((gone_bits >> (ng - 1 - g)) & 1) << (n_qubits - 1 - gone[static_cast<std::size_t>(g)]);
    }
    return idx;
  };
  const std::int64_t dk = dim_of(nk);
  const std::int64_t dg = dim_of(ng);
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (std::int64_t r = 0; r < dk; ++r) {
    for (std::int64_t c = 0; c < dk; ++c) {
      Complex acc{0.0, 0.0};
      for (std::int64_t g = 0; g < dg; ++g) acc += rho(compose(r, g), compose(c, g));
      out(r, c) = acc;
    }
  }
  return out;
}

}  // namespace pbtsim
