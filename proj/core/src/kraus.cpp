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

#include "pbtsim/kraus.hpp"

#include <cmath>
#include <stdexcept>

#include "pbtsim/spin_basis.hpp"

namespace pbtsim {

KrausSet choi_to_kraus(const ChoiMatrix& choi) {
  const ComplexMatrix& v = choi.matrix();
  const ComplexMatrix h = 0.5 * (v + v.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw std::domain_error("choi_to_kraus: Choi matrix is not positive semidefinite");
  }
  KrausSet out{2, 2, {}};
  // Trace-one normalisation: C = (1/2) sum_ab |a><b| ⊗ E(|a><b|).
  for (Eigen::Index k = h.rows() - 1; k >= 0; --k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda < kKrausEigenFloor) continue;
    const ComplexVector vec = std::sqrt(2.0 * lambda) * es.eigenvectors().col(k);
    ComplexMatrix op(2, 2);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) op(b, a) = vec(2 * a + b);
    }
    out.ops.push_back(std::move(op));
  }
  return out;
}

ChoiMatrix kraus_to_choi(const KrausSet& kraus) {
  if (kraus.in_dim != 2 || kraus.out_dim != 2) {
    throw std::invalid_argument("kraus_to_choi: need a qubit channel");
  }
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  KrausSet lifted{4, 4, {}};
  for (const auto& k : kraus.ops) lifted.ops.push_back(kron(id, k));
  return ChoiMatrix(apply_kraus(lifted, bell * bell.adjoint()));
}

ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& state) {
  if (state.rows() != kraus.in_dim || state.cols() != kraus.in_dim) {
    throw std::invalid_argument("apply_kraus: state dimension does not match Kraus input");
  }
  ComplexMatrix out = ComplexMatrix::Zero(kraus.out_dim, kraus.out_dim);
  for (const auto& k : kraus.ops) {
    if (k.rows() != kraus.out_dim || k.cols() != kraus.in_dim) {
      throw std::invalid_argument("apply_kraus: operator shape mismatch");
    }
    out.noalias() += k * state * k.adjoint();
  }
  return out;
}

ComplexMatrix completeness_operator(const KrausSet& kraus) {
  ComplexMatrix out = ComplexMatrix::Zero(kraus.in_dim, kraus.in_dim);
  for (const auto& k : kraus.ops) out.noalias() += k.adjoint() * k;
  return out;
}

KrausSet ProtocolKraus::as_set() const {
  const int in_dim = static_cast<int>(dim_of(n + 1));
  KrausSet out{in_dim, 4, {}};
  out.ops.reserve(k2.size() + k1.size());
  out.ops.insert(out.ops.end(), k2.begin(), k2.end());
  out.ops.insert(out.ops.end(), k1.begin(), k1.end());
  return out;
}

std::uint64_t ProtocolKraus::unreduced_count() const {
  return static_cast<std::uint64_t>(k1.size() + k2.size()) *
         static_cast<std::uint64_t>(dim_of(n - 1));
}

std::uint64_t protocol_k1_count(int n) {
  std::uint64_t total = 0;
  for (int ts = (n + 1) % 2; ts <= n - 1; ts += 2) {
    total += degeneracy(n - 1, HalfInt::from_twice(ts)) * static_cast<std::uint64_t>(ts + 1);
  }
  return total;
}

namespace {

// kron(row, I_2) with `row` a 2 x 2^n map C_0 <- A; input A ⊗ B_1, output C_0 ⊗ B_1.
ComplexMatrix lift_b1(const Eigen::MatrixXd& row) {
  return kron(row.cast<Complex>(), ComplexMatrix::Identity(2, 2));
}

}  // namespace

ProtocolKraus protocol_kraus(int n) {
  if (n < 2) throw std::domain_error("protocol_kraus: need at least two ports");
  const auto basis = cached_spin_basis(n);
  const std::int64_t dim = dim_of(n);
  ProtocolKraus out;
  out.n = n;

  const HalfInt top = HalfInt::from_twice(n);  // j = n/2
  for (int tm = -(n + 1); tm <= n + 1; tm += 2) {
    const HalfInt m = HalfInt::from_twice(tm);
    const double ratio = m.value() / (n + 1);
    Eigen::MatrixXd row = Eigen::MatrixXd::Zero(2, dim);
    const double w0 = std::sqrt(std::max(0.0, 0.5 - ratio));
    const double w1 = std::sqrt(std::max(0.0, 0.5 + ratio));
    row.row(0) = w0 * basis->vector(SpinLabel{top, m + kHalf, 1, SpinKind::kTypeII}).transpose();
    row.row(1) = w1 * basis->vector(SpinLabel{top, m - kHalf, 1, SpinKind::kTypeII}).transpose();
    out.k2.push_back(lift_b1(row / std::sqrt(2.0)));
    out.labels.push_back(ProtocolKrausLabel{true, HalfInt::from_twice(n + 1), m, 1});
  }

  std::vector<ProtocolKrausLabel> k1_labels;
  const double pref = std::sqrt(0.5 * n);
  for (int ts = (n + 1) % 2; ts <= n - 1; ts += 2) {
    const HalfInt s = HalfInt::from_twice(ts);
    const int count = static_cast<int>(degeneracy(n - 1, s));
    for (int tm = -ts; tm <= ts; tm += 2) {
      const HalfInt m = HalfInt::from_twice(tm);
      const QRCoeffs q = qr_coeffs(s, m, n);
      for (int alpha = 1; alpha <= count; ++alpha) {
        const SpinLabel i_up{s - kHalf, m + kHalf, alpha, SpinKind::kTypeI};
        const SpinLabel ii_up{s + kHalf, m + kHalf, alpha, SpinKind::kTypeII};
        const SpinLabel i_dn{s - kHalf, m - kHalf, alpha, SpinKind::kTypeI};
        const SpinLabel ii_dn{s + kHalf, m - kHalf, alpha, SpinKind::kTypeII};
        Eigen::MatrixXd row(2, dim);
        row.row(0) = (q.q_minus * basis->vector(i_up) - q.r_plus * basis->vector(ii_up)).transpose();
        row.row(1) = (q.q_plus * basis->vector(i_dn) + q.r_minus * basis->vector(ii_dn)).transpose();
        out.k1.push_back(lift_b1(pref * row));
        k1_labels.push_back(ProtocolKrausLabel{false, s, m, alpha});
      }
    }
  }
  out.labels.insert(out.labels.end(), k1_labels.begin(), k1_labels.end());
  return out;
}

ComplexMatrix reduced_state(const ReducedResource& reduced) {
  const std::int64_t dim = dim_of(reduced.n);
  ComplexMatrix m(2 * dim, 2 * dim);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const ComplexMatrix& b = reduced.blocks[static_cast<std::size_t>(2 * i + j)];
      for (std::int64_t r = 0; r < dim; ++r) {
        for (std::int64_t c = 0; c < dim; ++c) m(2 * r + i, 2 * c + j) = b(r, c);
      }
    }
  }
  return m;
}

ComplexMatrix sqrt_pi1(int n) {
  if (n < 2) throw std::domain_error("sqrt_pi1: need at least two ports");
  const auto basis = cached_spin_basis(n);
  const std::int64_t dim = dim_of(n + 1);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);

  const HalfInt top = HalfInt::from_twice(n);
  for (int tm = -(n + 1); tm <= n + 1; tm += 2) {
    const Eigen::VectorXd psi = rho_eigenvector(*basis, RhoSign::kMinus, top,
                                                HalfInt::from_twice(tm), 1, SpinKind::kTypeII);
    out += psi * psi.transpose() / std::sqrt(static_cast<double>(n));
  }

  for (int ts = (n + 1) % 2; ts <= n - 1; ts += 2) {
    const HalfInt s = HalfInt::from_twice(ts);
    const double sv = s.value();
    const double lam_minus = (n + 1 - 2.0 * sv) / 4.0;
    const double lam_plus = (n + 3 + 2.0 * sv) / 4.0;
    const double w1 = std::sqrt(sv / ((2.0 * sv + 1.0) * lam_minus));
    const double w2 = std::sqrt((sv + 1.0) / ((2.0 * sv + 1.0) * lam_plus));
    const double eig = 4.0 * (n + 1) / ((n + 1 - 2.0 * sv) * (n + 3 + 2.0 * sv));
    const int count = static_cast<int>(degeneracy(n - 1, s));
    for (int tm = -ts; tm <= ts; tm += 2) {
      const HalfInt m = HalfInt::from_twice(tm);
      for (int alpha = 1; alpha <= count; ++alpha) {
        const Eigen::VectorXd vec =
            w1 * rho_eigenvector(*basis, RhoSign::kMinus, s - kHalf, m, alpha, SpinKind::kTypeI) -
            w2 * rho_eigenvector(*basis, RhoSign::kPlus, s + kHalf, m, alpha, SpinKind::kTypeII);
        out += vec * vec.transpose() / std::sqrt(eig);
      }
    }
  }
  return out.cast<Complex>();
}

}  // namespace pbtsim
