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

// Angular-momentum basis of n qubits built by coupling one spin-1/2 at a
// time. Qubit |0> is spin down (m = -1/2), |1> is spin up.
//
// The qubit appended at the last recursion step occupies the last tensor
// slot; in the teleportation setting that qubit is A_1, the sender qubit of
// the port the state is teleported to. Every n-spin multiplet is either
// TypeI (built from an (n-1)-spin multiplet of spin j+1/2) or TypeII (built
// from spin j-1/2); alpha enumerates those parents in the parent basis'
// canonical order. Condon-Shortley phases throughout.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pbtsim/half_int.hpp"
#include "pbtsim/linalg.hpp"

namespace pbtsim {

/// Largest qubit count for which the dense spin basis is built.
inline constexpr int kMaxSpinBasisQubits = 12;

enum class CgBranch { kPlusPlus, kPlusMinus, kMinusPlus, kMinusMinus };

/// <j, m, 1/2, ±1/2 | j±1/2, m±1/2>; the first sign moves j, the second m.
/// Zero whenever either (j, m) or the coupled (J, M) is not a valid label.
double clebsch_gordan(CgBranch branch, HalfInt j, HalfInt m);

/// Exact binomial coefficient; zero outside 0 <= k <= n.
std::uint64_t binomial(int n, int k);

/// Number of spin-j multiplets in `ports` qubits; zero outside the valid range.
std::uint64_t degeneracy(int ports, HalfInt j);

enum class RhoSign { kMinus, kPlus };

/// Eigenvalue (n/2 - j)/2 or (n/2 + j + 1)/2 of the sum of singlet projectors.
double rho_eigenvalue(RhoSign sign, HalfInt j, int n);

enum class SpinKind : std::uint8_t { kTypeI = 0, kTypeII = 1, kUnsplit = 2 };

struct SpinLabel {
  HalfInt j;
  HalfInt m;
  int alpha = 1;
  SpinKind kind = SpinKind::kTypeI;

  friend bool operator==(const SpinLabel&, const SpinLabel&) = default;
};

/// Orthonormal spin basis of n qubits. Column k of `unitary()` is the
/// computational-basis expansion of `labels()[k]`. Columns are ordered by
/// ascending j, then TypeI before TypeII, then alpha, then ascending m.
class SpinBasis {
 public:
  int n() const { return n_; }
  const std::vector<SpinLabel>& labels() const { return labels_; }

  /// Real orthogonal change of basis (2^n x 2^n).
  const RealMatrix& real_unitary() const { return u_; }
  ComplexMatrix unitary() const { return u_.cast<Complex>(); }

  /// Column index of a label; empty for labels outside the basis.
  std::optional<int> index_of(const SpinLabel& label) const;

  /// Computational-basis vector of a label; zero vector for invalid labels.
  Eigen::VectorXd vector(const SpinLabel& label) const;

  /// Multiplicity of spin j when j is used as a parent at level n + 1:
  /// TypeI multiplets come first (alpha as is), then TypeII (offset by the
  /// TypeI count).
  int multiplicity(HalfInt j) const;

  /// Column of the multiplet with parent-order index `alpha` (1-based) at (j, m).
  std::optional<int> parent_column(HalfInt j, HalfInt m, int alpha) const;

 private:
  friend SpinBasis build_spin_basis(int n);
  friend SpinBasis extend_spin_basis(const SpinBasis& parent);

  static std::uint64_t pack(const SpinLabel& l);
  void index_labels();

  int n_ = 0;
  std::vector<SpinLabel> labels_;
  RealMatrix u_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// Builds the n-qubit spin basis by recursion from the single-qubit basis.
SpinBasis build_spin_basis(int n);

/// Couples one more qubit (placed in the last tensor slot) to `parent`.
SpinBasis extend_spin_basis(const SpinBasis& parent);

/// Process-wide cache; the returned basis is immutable.
std::shared_ptr<const SpinBasis> cached_spin_basis(int n);

struct RhoEigenLabel {
  RhoSign sign;
  HalfInt j;  // spin of the sender register A
  HalfInt m;  // total projection of A ⊗ C
  int alpha;
  SpinKind kind;
};

struct RhoEigenvector {
  RhoEigenLabel label;
  Eigen::VectorXd vector;  // length 2^{n+1}, C in the last tensor slot
  double eigenvalue;
};

/// All eigenvectors of the sum of singlet projectors between C and each A_i.
std::vector<RhoEigenvector> build_rho_eigenvectors(int n);

/// Eigenvector Psi(lambda^sign_j, m, alpha) of the given kind built from
/// `basis`; zero vector when the label does not exist.
Eigen::VectorXd rho_eigenvector(const SpinBasis& basis, RhoSign sign, HalfInt j, HalfInt m,
                                int alpha, SpinKind kind);

}  // namespace pbtsim
