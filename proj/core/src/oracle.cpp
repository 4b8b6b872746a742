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


#include "pbtsim/oracle.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pbtsim {

namespace {

constexpr double kSupportCutoff = 1e-10;

void check_ports(int n) {
  if (n < 2 || n > kMaxOraclePorts) {
    throw std::domain_error("oracle: port count must lie in [2, 8]");
  }
}

ComplexMatrix singlet_projector() {
  ComplexVector v = ComplexVector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

// Qubit index of A_port inside (A_2, ..., A_N, A_1, C).
int a_qubit(int n, int port) { return port == 1 ? n - 1 : port - 2; }

std::shared_ptr<const DensePovm> cached_povm(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const DensePovm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto povm = std::make_shared<const DensePovm>(build_povm(n));
  cache.emplace(n, povm);
  return povm;
}

}  // namespace

ComplexMatrix embed_two_qubit(const ComplexMatrix& op, int q1, int q2, int nq) {
  if (op.rows() != 4 || op.cols() != 4 || q1 == q2 || q1 < 0 || q2 < 0 || q1 >= nq ||
      q2 >= nq) {
    throw std::invalid_argument("embed_two_qubit: bad operator or qubit indices");
  }
  const std::int64_t dim = dim_of(nq);
  const std::int64_t m1 = std::int64_t{1} << (nq - 1 - q1);
  const std::int64_t m2 = std::int64_t{1} << (nq - 1 - q2);
  const std::int64_t rest = ~(m1 | m2);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    const int ri = 2 * ((r & m1) ? 1 : 0) + ((r & m2) ? 1 : 0);
    const std::int64_t base = r & rest;
    for (int ci = 0; ci < 4; ++ci) {
      const std::int64_t c = base | ((ci & 2) ? m1 : 0) | ((ci & 1) ? m2 : 0);
      out(r, c) = op(ri, ci);
    }
  }
  return out;
}

ComplexMatrix sigma(int n, int port) {
  if (port < 1 || port > n) throw std::invalid_argument("sigma: port out of range");
  return embed_two_qubit(singlet_projector(), a_qubit(n, port), n, n + 1);
}

DensePovm build_povm(int n) {
  check_ports(n);
  const std::int64_t dim = dim_of(n + 1);
  DensePovm out;
  out.n = n;
  out.rho = ComplexMatrix::Zero(dim, dim);
  for (int i = 1; i <= n; ++i) out.rho += sigma(n, i);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(out.rho);
  Eigen::VectorXd inv_sqrt = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd support = Eigen::VectorXd::Zero(dim);
  for (std::int64_t k = 0; k < dim; ++k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda > kSupportCutoff) {
      inv_sqrt(k) = 1.0 / std::sqrt(lambda);
      support(k) = 1.0;
    }
  }
  const ComplexMatrix& v = es.eigenvectors();
  const ComplexMatrix rho_inv_sqrt = v * inv_sqrt.cast<Complex>().asDiagonal() * v.adjoint();
  out.support_projector = v * support.cast<Complex>().asDiagonal() * v.adjoint();
  const ComplexMatrix kernel = ComplexMatrix::Identity(dim, dim) - out.support_projector;
  out.pi_1 = rho_inv_sqrt * sigma(n, 1) * rho_inv_sqrt + kernel / static_cast<double>(n);
  out.pi_1 = 0.5 * (out.pi_1 + out.pi_1.adjoint()).eval();
  return out;
}

ComplexMatrix povm_element(const DensePovm& povm, int port) {
  if (port < 1 || port > povm.n) throw std::invalid_argument("povm_element: port out of range");
  if (port == 1) return povm.pi_1;
  std::vector<int> order(static_cast<std::size_t>(povm.n + 1));
  std::iota(order.begin(), order.end(), 0);
  std::swap(order[static_cast<std::size_t>(a_qubit(povm.n, 1))],
            order[static_cast<std::size_t>(a_qubit(povm.n, port))]);
  return permute_qubits(povm.pi_1, order);
}

ChoiMatrix oracle_choi(const DensePovm& povm, const ReducedResource& reduced) {
  if (reduced.n != povm.n) throw std::invalid_argument("oracle_choi: port count mismatch");
  const std::int64_t dim = dim_of(povm.n);
  for (const auto& b : reduced.blocks) {
    if (b.rows() != dim || b.cols() != dim) {
      throw std::invalid_argument("oracle_choi: block dimension mismatch");
    }
  }
  const ComplexMatrix& pi = povm.pi_1;
  ComplexMatrix c(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const ComplexMatrix& r = reduced.blocks[static_cast<std::size_t>(2 * i + j)];
      for (int m = 0; m < 2; ++m) {
        for (int nn = 0; nn < 2; ++nn) {
          Complex acc{0.0, 0.0};
          for (std::int64_t a = 0; a < dim; ++a) {
            for (std::int64_t b = 0; b < dim; ++b) acc += pi(2 * b + nn, 2 * a + m) * r(a, b);
          }
          c(2 * m + i, 2 * nn + j) = 0.5 * povm.n * acc;
        }
      }
    }
  }
  return ChoiMatrix(std::move(c));
}

ChoiMatrix oracle_choi(const ReducedResource& reduced) {
  check_ports(reduced.n);
  return oracle_choi(*cached_povm(reduced.n), reduced);
}

FullResource swap_ports(const FullResource& full, int port) {
  if (port < 1 || port > full.n) throw std::invalid_argument("swap_ports: port out of range");
  std::vector<int> order(static_cast<std::size_t>(2 * full.n));
  std::iota(order.begin(), order.end(), 0);
  std::swap(order[0], order[static_cast<std::size_t>(port - 1)]);
  std::swap(order[static_cast<std::size_t>(full.n)],
            order[static_cast<std::size_t>(full.n + port - 1)]);
  return FullResource{full.n, permute_qubits(full.rho, order)};
}

ChoiMatrix oracle_choi_unsymmetrized(const FullResource& full) {
  ComplexMatrix acc = ComplexMatrix::Zero(4, 4);
  for (int i = 1; i <= full.n; ++i) {
    acc += oracle_choi(reduce(swap_ports(full, i))).matrix();
  }
  return ChoiMatrix(acc / static_cast<double>(full.n));
}

}  // namespace pbtsim
