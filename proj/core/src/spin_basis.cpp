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

#include "pbtsim/spin_basis.hpp"

#include <cmath>
#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace pbtsim {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return c;
}

namespace {

bool valid_projection(HalfInt j, HalfInt m) {
  return j.twice >= 0 && std::abs(m.twice) <= j.twice && same_parity(j, m);
}

}  // namespace

double clebsch_gordan(CgBranch branch, HalfInt j, HalfInt m) {
  if (j.twice < 0) throw std::domain_error("clebsch_gordan: negative j");
  if (!same_parity(j, m)) throw std::domain_error("clebsch_gordan: j and m parity differ");
  if (std::abs(m.twice) > j.twice) return 0.0;

  const bool raise_j = branch == CgBranch::kPlusPlus || branch == CgBranch::kPlusMinus;
  const bool raise_m = branch == CgBranch::kPlusPlus || branch == CgBranch::kMinusPlus;
  const HalfInt big_j = raise_j ? j + kHalf : j - kHalf;
  const HalfInt big_m = raise_m ? m + kHalf : m - kHalf;
  if (big_j.twice < 0 || std::abs(big_m.twice) > big_j.twice) return 0.0;

  const double denom = 2.0 * (j.twice + 1);
  switch (branch) {
    case CgBranch::kPlusPlus:
      return std::sqrt((j.twice + m.twice + 2) / denom);
    case CgBranch::kPlusMinus:
      return std::sqrt((j.twice - m.twice + 2) / denom);
    case CgBranch::kMinusMinus:
      return std::sqrt((j.twice + m.twice) / denom);
    case CgBranch::kMinusPlus:
      return -std::sqrt((j.twice - m.twice) / denom);
  }
  return 0.0;
}

std::uint64_t degeneracy(int ports, HalfInt j) {
  if (ports < 0 || j.twice < 0 || j.twice > ports || (ports - j.twice) % 2 != 0) return 0;
  const int k = (ports - j.twice) / 2;
  return binomial(ports, k) - binomial(ports, k - 1);
}

double rho_eigenvalue(RhoSign sign, HalfInt j, int n) {
  if (sign == RhoSign::kMinus) {
    if (j.twice < 0 || j.twice > n) throw std::domain_error("rho_eigenvalue: j out of range");
    return 0.5 * (0.5 * n - j.value());
  }
  if (j.twice < 1 || j.twice > n) throw std::domain_error("rho_eigenvalue: j out of range");
  return 0.5 * (0.5 * n + j.value() + 1.0);
}

std::uint64_t SpinBasis::pack(const SpinLabel& l) {
  // 16 bits each for 2j, 2m (offset), alpha; 8 bits kind.
  const auto tj = static_cast<std::uint64_t>(l.j.twice & 0xffff);
  const auto tm = static_cast<std::uint64_t>((l.m.twice + 0x4000) & 0xffff);
  const auto al = static_cast<std::uint64_t>(l.alpha & 0xffffff);
  const auto kd = static_cast<std::uint64_t>(l.kind);
  return (tj << 48) | (tm << 32) | (al << 8) | kd;
}

void SpinBasis::index_labels() {
  index_.clear();
  index_.reserve(labels_.size());
  for (std::size_t k = 0; k < labels_.size(); ++k) index_.emplace(pack(labels_[k]), static_cast<int>(k));
}

std::optional<int> SpinBasis::index_of(const SpinLabel& label) const {
  if (!valid_projection(label.j, label.m) || label.alpha < 1) return std::nullopt;
  const auto it = index_.find(pack(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Eigen::VectorXd SpinBasis::vector(const SpinLabel& label) const {
  const auto idx = index_of(label);
  if (!idx) return Eigen::VectorXd::Zero(u_.rows());
  return u_.col(*idx);
}

int SpinBasis::multiplicity(HalfInt j) const {
  if (j.twice < 0) return 0;
  return static_cast<int>(degeneracy(n_, j));
}

std::optional<int> SpinBasis::parent_column(HalfInt j, HalfInt m, int alpha) const {
  if (alpha < 1) return std::nullopt;
  if (n_ == 1) return index_of(SpinLabel{j, m, alpha, SpinKind::kUnsplit});
  const int type_one = static_cast<int>(degeneracy(n_ - 1, j + kHalf));
  if (alpha <= type_one) return index_of(SpinLabel{j, m, alpha, SpinKind::kTypeI});
  return index_of(SpinLabel{j, m, alpha - type_one, SpinKind::kTypeII});
}

SpinBasis extend_spin_basis(const SpinBasis& parent) {
  const int n = parent.n() + 1;
  if (n > kMaxSpinBasisQubits) {
    throw std::domain_error("spin basis: qubit count above cap of " +
                            std::to_string(kMaxSpinBasisQubits));
  }
  SpinBasis out;
  out.n_ = n;
  const std::int64_t dim = dim_of(n);
  out.u_ = RealMatrix::Zero(dim, dim);
  out.labels_.reserve(static_cast<std::size_t>(dim));
  const RealMatrix& pu = parent.real_unitary();

  auto add_term = [&](int col, double coef, std::optional<int> pcol, int bit) {
    if (coef == 0.0 || !pcol) return;
    for (Eigen::Index r = 0; r < pu.rows(); ++r) {
      out.u_(2 * r + bit, col) += coef * pu(r, *pcol);
    }
  };

  int col = 0;
  for (int tj = n % 2; tj <= n; tj += 2) {
    const HalfInt j = HalfInt::from_twice(tj);
    for (SpinKind kind : {SpinKind::kTypeI, SpinKind::kTypeII}) {
      const HalfInt pj = kind == SpinKind::kTypeI ? j + kHalf : j - kHalf;
      const int count = parent.multiplicity(pj);
      for (int alpha = 1; alpha <= count; ++alpha) {
        for (int tm = -tj; tm <= tj; tm += 2) {
          const HalfInt m = HalfInt::from_twice(tm);
          const HalfInt m_up = m + kHalf;
          const HalfInt m_dn = m - kHalf;
          double c0 = 0.0;
          double c1 = 0.0;
          if (kind == SpinKind::kTypeI) {
            c0 = clebsch_gordan(CgBranch::kMinusMinus, pj, m_up);
            c1 = clebsch_gordan(CgBranch::kMinusPlus, pj, m_dn);
          } else {
            c0 = clebsch_gordan(CgBranch::kPlusMinus, pj, m_up);
            c1 = clebsch_gordan(CgBranch::kPlusPlus, pj, m_dn);
          }
          add_term(col, c0, parent.parent_column(pj, m_up, alpha), 0);
          add_term(col, c1, parent.parent_column(pj, m_dn, alpha), 1);
          out.labels_.push_back(SpinLabel{j, m, alpha, kind});
          ++col;
        }
      }
    }
  }
  if (col != dim) throw std::logic_error("spin basis: label count does not match dimension");
  out.index_labels();
  return out;
}

SpinBasis build_spin_basis(int n) {
  if (n < 1) throw std::domain_error("build_spin_basis: need at least one qubit");
  if (n > kMaxSpinBasisQubits) {
    throw std::domain_error("build_spin_basis: qubit count above cap of " +
                            std::to_string(kMaxSpinBasisQubits));
  }
  SpinBasis basis;
  basis.n_ = 1;
  basis.u_ = RealMatrix::Identity(2, 2);
  basis.labels_ = {SpinLabel{kHalf, -kHalf, 1, SpinKind::kUnsplit},
                   SpinLabel{kHalf, kHalf, 1, SpinKind::kUnsplit}};
  basis.index_labels();
  while (basis.n() < n) basis = extend_spin_basis(basis);
  return basis;
}

std::shared_ptr<const SpinBasis> cached_spin_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const SpinBasis>> cache;
  if (n < 1 || n > kMaxSpinBasisQubits) {
    throw std::domain_error("cached_spin_basis: qubit count out of range");
  }
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::shared_ptr<const SpinBasis> start;
  for (auto it = cache.begin(); it != cache.end() && it->first < n; ++it) start = it->second;
  if (!start) {
    start = std::make_shared<const SpinBasis>(build_spin_basis(1));
    cache.emplace(1, start);
  }
  while (start->n() < n) {
    start = std::make_shared<const SpinBasis>(extend_spin_basis(*start));
    cache.emplace(start->n(), start);
  }
  return start;
}

Eigen::VectorXd rho_eigenvector(const SpinBasis& basis, RhoSign sign, HalfInt j, HalfInt m,
                                int alpha, SpinKind kind) {
  const std::int64_t dim = dim_of(basis.n());
  Eigen::VectorXd psi = Eigen::VectorXd::Zero(2 * dim);
  if (j.twice < 0 || (sign == RhoSign::kPlus && j.twice < 1)) return psi;
  const HalfInt s = sign == RhoSign::kMinus ? j + kHalf : j - kHalf;
  if (std::abs(m.twice) > s.twice || !same_parity(s, m)) return psi;

  const HalfInt m_up = m + kHalf;
  const HalfInt m_dn = m - kHalf;
  const double c0 = sign == RhoSign::kMinus ? clebsch_gordan(CgBranch::kPlusMinus, j, m_up)
                                            : clebsch_gordan(CgBranch::kMinusMinus, j, m_up);
  const double c1 = sign == RhoSign::kMinus ? clebsch_gordan(CgBranch::kPlusPlus, j, m_dn)
                                            : clebsch_gordan(CgBranch::kMinusPlus, j, m_dn);
  const Eigen::VectorXd phi0 = basis.vector(SpinLabel{j, m_up, alpha, kind});
  const Eigen::VectorXd phi1 = basis.vector(SpinLabel{j, m_dn, alpha, kind});
  for (std::int64_t a = 0; a < dim; ++a) {
    psi(2 * a) = c0 * phi0(a);
    psi(2 * a + 1) = c1 * phi1(a);
  }
  return psi;
}

std::vector<RhoEigenvector> build_rho_eigenvectors(int n) {
  const auto basis = cached_spin_basis(n);
  std::vector<RhoEigenvector> out;
  out.reserve(static_cast<std::size_t>(2 * dim_of(n)));
  // One entry per multiplet: labels are grouped by (j, kind, alpha) with m ascending.
  for (const SpinLabel& l : basis->labels()) {
    if (l.m != -l.j) continue;
    for (RhoSign sign : {RhoSign::kMinus, RhoSign::kPlus}) {
      if (sign == RhoSign::kPlus && l.j.twice < 1) continue;
      const HalfInt s = sign == RhoSign::kMinus ? l.j + kHalf : l.j - kHalf;
      const double lambda = rho_eigenvalue(sign, l.j, n);
      for (int tm = -s.twice; tm <= s.twice; tm += 2) {
        const HalfInt m = HalfInt::from_twice(tm);
        out.push_back(RhoEigenvector{RhoEigenLabel{sign, l.j, m, l.alpha, l.kind},
                                     rho_eigenvector(*basis, sign, l.j, m, l.alpha, l.kind),
                                     lambda});
      }
    }
  }
  return out;
}

}  // namespace pbtsim
