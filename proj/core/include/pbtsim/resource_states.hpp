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

// Resource (program) states in three forms:
//
//   FullResource     density matrix over (A_1..A_N, B_1..B_N)
//   ReducedResource  the four blocks <i|_{B_1} Tr_{B_2..B_N}[pi] |j>_{B_1},
//                    each over the A register ordered (A_2, ..., A_N, A_1)
//   SpinCoefficients the blocks written in the n-spin basis

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "pbtsim/half_int.hpp"
#include "pbtsim/linalg.hpp"
#include "pbtsim/spin_basis.hpp"

namespace pbtsim {

enum class BlockTag { k11 = 0, k12 = 1, k21 = 2, k22 = 3 };

inline constexpr std::array<BlockTag, 4> kAllBlocks = {BlockTag::k11, BlockTag::k12,
                                                       BlockTag::k21, BlockTag::k22};

struct FullResource {
  int n = 0;
  ComplexMatrix rho;
};

struct ReducedResource {
  int n = 0;
  std::array<ComplexMatrix, 4> blocks;

  const ComplexMatrix& block(BlockTag t) const { return blocks[static_cast<int>(t)]; }
  ComplexMatrix& block(BlockTag t) { return blocks[static_cast<int>(t)]; }
};

/// Throws std::invalid_argument unless rho is a 2^{2n}-dimensional density
/// matrix (Hermitian and unit trace to `tol`, min eigenvalue >= -psd_tol).
void validate(const FullResource& full, double tol = 1e-12, double psd_tol = 1e-10);

/// Throws std::invalid_argument unless the blocks satisfy r21 = r12^dagger,
/// r11 and r22 Hermitian PSD and Tr r11 + Tr r22 = 1.
void validate(const ReducedResource& reduced, double tol = 1e-12, double psd_tol = 1e-10);

/// Partial trace over B_2..B_N followed by B_1 matrix elements.
ReducedResource reduce(const FullResource& full);

/// N-fold tensor product of a single-port state given in (A, B) order,
/// rearranged to (A_1..A_N, B_1..B_N).
FullResource product_resource(const ComplexMatrix& port_state, int n);

/// Averages over all n! simultaneous permutations of the (A_i, B_i) pairs.
/// Refuses n >= 8.
FullResource symmetrize(const FullResource& full);

inline constexpr int kMaxSymmetrizePorts = 7;

// ---------------------------------------------------------------------------
// Named families.

struct BellFamily {};
struct AdChoiFamily {
  double p = 0.0;
};
struct AlternateFamily {
  double a = 0.5;
};
struct FileFamily {
  std::string path;
};

using ResourceFamily = std::variant<BellFamily, AdChoiFamily, AlternateFamily, FileFamily>;

/// Parses "bell", "adchoi:<p>", "alternate:<a>", otherwise treats the text as
/// a file path.
ResourceFamily parse_family(std::string_view text);

/// 4x4 single-port state in basis {00, 01, 10, 11}, A qubit first. Not
/// defined for FileFamily.
ComplexMatrix port_state(const ResourceFamily& family);

/// Reduced blocks of the n-port product (or file) resource, built port by port.
/// File resources in FULL form are symmetrised before reduction.
ReducedResource make_family(const ResourceFamily& family, int n);

// ---------------------------------------------------------------------------
// Spin-basis coefficients.

/// f^{a}(x, y) = <Phi(x)| R^{a} |Phi(y)> for spin labels x and y, stored as
/// dense u^T R^{a} u matrices.
class SpinCoefficients {
 public:
  SpinCoefficients(std::shared_ptr<const SpinBasis> basis, std::array<ComplexMatrix, 4> tables);

  int n() const { return basis_->n(); }
  const SpinBasis& basis() const { return *basis_; }
  const ComplexMatrix& table(BlockTag t) const { return tables_[static_cast<int>(t)]; }

  /// Exactly zero when either label is outside the basis.
  Complex f(BlockTag t, const SpinLabel& x, const SpinLabel& y) const;

  /// Inverse transform back to computational-basis blocks.
  ReducedResource to_blocks() const;

 private:
  std::shared_ptr<const SpinBasis> basis_;
  std::array<ComplexMatrix, 4> tables_;
};

SpinCoefficients to_spin_coefficients(const ReducedResource& reduced,
                                      std::shared_ptr<const SpinBasis> basis);
SpinCoefficients to_spin_coefficients(const ReducedResource& reduced);

/// Sign tuple (s1, s2, s3, s4), each +1 or -1: the left label sits at
/// (s + s1/2, m + s2/2), the right one at (s + s3/2, m + s4/2).
using Signs = std::array<int, 4>;

/// Parses a four-character string such as "-+-+".
Signs parse_signs(std::string_view text);

/// Sum over the shared parent index alpha in 1..gamma(n-1, s).
Complex g_sum(const SpinCoefficients& coeffs, BlockTag a, SpinKind left, SpinKind right,
              const Signs& signs, HalfInt s, HalfInt m);

/// Kernel-stratum accessor used by the boundary sums: f_{II,II} at
/// j = n/2, alpha = 1 with projections m + s2/2 and m + s4/2. The j signs
/// are ignored.
Complex g_boundary(const SpinCoefficients& coeffs, BlockTag a, const Signs& signs, HalfInt m);

}  // namespace pbtsim
