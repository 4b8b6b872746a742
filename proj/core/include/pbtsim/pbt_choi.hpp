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

#include "pbtsim/half_int.hpp"
#include "pbtsim/linalg.hpp"
#include "pbtsim/resource_states.hpp"

namespace pbtsim {

struct ChoiDiagnostics {
  double hermiticity = 0.0;
  double min_eigenvalue = 0.0;
  double trace_error = 0.0;
  double trace_preservation = 0.0;  // max |Tr_out C - I/2|
};

/// 4x4 Choi matrix of a qubit channel, normalised to unit trace. Row and
/// column index is 2 * idler + output.
class ChoiMatrix {
 public:
  ChoiMatrix();
  explicit ChoiMatrix(ComplexMatrix c);

  const ComplexMatrix& matrix() const { return c_; }
  Complex operator()(int r, int c) const { return c_(r, c); }

  ChoiDiagnostics diagnostics() const;

  /// Throws std::domain_error when any invariant fails.
  void validate(double tol = 1e-10, double psd_tol = 1e-9) const;

 private:
  ComplexMatrix c_;
};

struct QRCoeffs {
  double q_minus = 0.0;
  double q_plus = 0.0;
  double r_minus = 0.0;
  double r_plus = 0.0;
};

/// Requires |m| <= s <= (n - 1) / 2.
QRCoeffs qr_coeffs(HalfInt s, HalfInt m, int n);

/// Closed-form Choi matrix from spin coefficients; n >= 2.
ChoiMatrix assemble_choi(const SpinCoefficients& coeffs);

/// Individual closed-form components with g^{11} replaced by g^{a}.
Complex choi_c11(const SpinCoefficients& coeffs, BlockTag a);
Complex choi_c13(const SpinCoefficients& coeffs, BlockTag a);
Complex choi_c33(const SpinCoefficients& coeffs, BlockTag a);

/// Reduced two-port formulas evaluated on the 4x4 blocks; n must be 2.
ChoiMatrix two_port_choi(const ReducedResource& reduced);

/// Convenience: reduced blocks to spin coefficients to Choi matrix.
ChoiMatrix pbt_choi(const ReducedResource& reduced);

}  // namespace pbtsim
