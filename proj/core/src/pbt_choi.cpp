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

#include "pbtsim/pbt_choi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pbtsim {

ChoiMatrix::ChoiMatrix() : c_(ComplexMatrix::Zero(4, 4)) {}

ChoiMatrix::ChoiMatrix(ComplexMatrix c) : c_(std::move(c)) {
  if (c_.rows() != 4 || c_.cols() != 4) throw std::invalid_argument("ChoiMatrix: must be 4x4");
}

ChoiDiagnostics ChoiMatrix::diagnostics() const {
  ChoiDiagnostics d;
  d.hermiticity = hermiticity_error(c_);
  d.min_eigenvalue = hermitian_eigenvalues(c_).minCoeff();
  d.trace_error = std::abs(c_.trace() - Complex(1.0, 0.0));
  const int traced[] = {1};
  const ComplexMatrix idler = partial_trace(c_, 2, traced);
  d.trace_preservation = max_abs_diff(idler, 0.5 * ComplexMatrix::Identity(2, 2));
  return d;
}

void ChoiMatrix::validate(double tol, double psd_tol) const {
  const ChoiDiagnostics d = diagnostics();
  if (d.hermiticity > tol) throw std::domain_error("Choi matrix: not Hermitian");
  if (d.min_eigenvalue < -psd_tol) throw std::domain_error("Choi matrix: not PSD");
  if (d.trace_error > tol) throw std::domain_error("Choi matrix: trace is not 1");
  if (d.trace_preservation > tol) throw std::domain_error("Choi matrix: not trace preserving");
}

QRCoeffs qr_coeffs(HalfInt s, HalfInt m, int n) {
  if (s.twice < 0 || s.twice > n - 1) {
    throw std::domain_error("qr_coeffs: s must lie in [0, (n-1)/2]");
  }
  if (std::abs(m.twice) > s.twice || !same_parity(s, m)) {
    throw std::domain_error("qr_coeffs: |m| must not exceed s");
  }
  const double sv = s.value();
  const double mv = m.value();
  const double qden = (n + 1 - 2.0 * sv) * (2.0 * sv + 1.0);
  const double rden = (n + 3 + 2.0 * sv) * (2.0 * sv + 1.0);
  QRCoeffs out;
  out.q_minus = std::sqrt(2.0 * (sv - mv) / qden);
  out.q_plus = std::sqrt(2.0 * (sv + mv) / qden);
  out.r_minus = std::sqrt(2.0 * (sv - mv + 1.0) / rden);
  out.r_plus = std::sqrt(2.0 * (sv + mv + 1.0) / rden);
  return out;
}

namespace {

using K = SpinKind;

template <class Bulk, class Edge>
Complex closed_form(const SpinCoefficients& coeffs, Bulk bulk, Edge edge) {
  const int n = coeffs.n();
  if (n < 2) throw std::domain_error("assemble_choi: need at least two ports");
  Complex acc{0.0, 0.0};
  for (int ts = (n + 1) % 2; ts <= n - 1; ts += 2) {
    const HalfInt s = HalfInt::from_twice(ts);
    for (int tm = -ts; tm <= ts; tm += 2) {
      const HalfInt m = HalfInt::from_twice(tm);
      acc += bulk(s, m, qr_coeffs(s, m, n));
    }
  }
  acc *= 0.5 * n;
  Complex boundary{0.0, 0.0};
  for (int tm = -(n + 1); tm <= n + 1; tm += 2) {
    const HalfInt m = HalfInt::from_twice(tm);
    boundary += edge(m, m.value() / (n + 1));
  }
  return acc + 0.5 * boundary;
}

}  // namespace

Complex choi_c11(const SpinCoefficients& c, BlockTag a) {
  static const Signs s1 = parse_signs("-+-+");
  static const Signs s2 = parse_signs("-+++");
  static const Signs s3 = parse_signs("++-+");
  static const Signs s4 = parse_signs("++++");
  return closed_form(
      c,
      [&](HalfInt s, HalfInt m, const QRCoeffs& q) {
        return q.q_minus * q.q_minus * g_sum(c, a, K::kTypeI, K::kTypeI, s1, s, m) -
               q.q_minus * q.r_plus *
                   (g_sum(c, a, K::kTypeI, K::kTypeII, s2, s, m) +
                    g_sum(c, a, K::kTypeII, K::kTypeI, s3, s, m)) +
               q.r_plus * q.r_plus * g_sum(c, a, K::kTypeII, K::kTypeII, s4, s, m);
      },
      [&](HalfInt m, double ratio) { return (0.5 - ratio) * g_boundary(c, a, s1, m); });
}

Complex choi_c13(const SpinCoefficients& c, BlockTag a) {
  static const Signs s1 = parse_signs("-+--");
  static const Signs s2 = parse_signs("-++-");
  static const Signs s3 = parse_signs("++--");
  static const Signs s4 = parse_signs("+++-");
  return closed_form(
      c,
      [&](HalfInt s, HalfInt m, const QRCoeffs& q) {
        return q.q_minus * q.q_plus * g_sum(c, a, K::kTypeI, K::kTypeI, s1, s, m) +
               q.q_minus * q.r_minus * g_sum(c, a, K::kTypeI, K::kTypeII, s2, s, m) -
               q.q_plus * q.r_plus * g_sum(c, a, K::kTypeII, K::kTypeI, s3, s, m) -
               q.r_minus * q.r_plus * g_sum(c, a, K::kTypeII, K::kTypeII, s4, s, m);
      },
      [&](HalfInt m, double ratio) {
        return std::sqrt(std::max(0.0, 0.25 - ratio * ratio)) * g_boundary(c, a, s1, m);
      });
}

Complex choi_c33(const SpinCoefficients& c, BlockTag a) {
  static const Signs s1 = parse_signs("----");
  static const Signs s2 = parse_signs("--+-");
  static const Signs s3 = parse_signs("+---");
  static const Signs s4 = parse_signs("+-+-");
  return closed_form(
      c,
      [&](HalfInt s, HalfInt m, const QRCoeffs& q) {
        return q.q_plus * q.q_plus * g_sum(c, a, K::kTypeI, K::kTypeI, s1, s, m) +
               q.q_plus * q.r_minus *
                   (g_sum(c, a, K::kTypeI, K::kTypeII, s2, s, m) +
                    g_sum(c, a, K::kTypeII, K::kTypeI, s3, s, m)) +
               q.r_minus * q.r_minus * g_sum(c, a, K::kTypeII, K::kTypeII, s4, s, m);
      },
      [&](HalfInt m, double ratio) { return (0.5 + ratio) * g_boundary(c, a, s1, m); });
}

namespace {

ChoiMatrix fill_choi(Complex c11, Complex c12, Complex c22, Complex c13, Complex c14,
                     Complex c23, Complex c24, Complex c33, Complex c34, Complex c44) {
  ComplexMatrix m(4, 4);
  m(0, 0) = c11;
  m(0, 1) = c12;
  m(1, 1) = c22;
  m(0, 2) = c13;
  m(0, 3) = c14;
  m(1, 2) = c23;
  m(1, 3) = c24;
  m(2, 2) = c33;
  m(2, 3) = c34;
  m(3, 3) = c44;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < r; ++c) m(r, c) = std::conj(m(c, r));
  }
  return ChoiMatrix(std::move(m));
}

}  // namespace

ChoiMatrix assemble_choi(const SpinCoefficients& c) {
  using B = BlockTag;
  return fill_choi(choi_c11(c, B::k11), choi_c11(c, B::k12), choi_c11(c, B::k22),
                   choi_c13(c, B::k11), choi_c13(c, B::k12), choi_c13(c, B::k21),
                   choi_c13(c, B::k22), choi_c33(c, B::k11), choi_c33(c, B::k12),
                   choi_c33(c, B::k22));
}

ChoiMatrix two_port_choi(const ReducedResource& reduced) {
  if (reduced.n != 2) throw std::invalid_argument("two_port_choi: need exactly two ports");
  // Basis of the reduced two-port formulas:
  // {Phi_I(0,0), Phi_II(1,-1), Phi_II(1,0), Phi_II(1,1)}.
  const SpinCoefficients coeffs = to_spin_coefficients(reduced);
  const HalfInt zero = HalfInt::from_int(0);
  const HalfInt one = HalfInt::from_int(1);
  const SpinLabel singlet{zero, zero, 1, SpinKind::kTypeI};
  const SpinLabel down{one, -one, 1, SpinKind::kTypeII};
  const SpinLabel mid{one, zero, 1, SpinKind::kTypeII};
  const SpinLabel up{one, one, 1, SpinKind::kTypeII};
  const double inv_2r3 = 1.0 / (2.0 * std::sqrt(3.0));
  const double inv_r6 = 1.0 / std::sqrt(6.0);

  auto c11 = [&](BlockTag a) {
    return 0.5 * reduced.block(a).trace() -
           inv_2r3 * (coeffs.f(a, singlet, mid) + coeffs.f(a, mid, singlet));
  };
  auto c13 = [&](BlockTag a) {
    return inv_r6 * (coeffs.f(a, singlet, down) - coeffs.f(a, up, singlet));
  };
  auto c33 = [&](BlockTag a) {
    return 0.5 * reduced.block(a).trace() +
           inv_2r3 * (coeffs.f(a, singlet, mid) + coeffs.f(a, mid, singlet));
  };
  using B = BlockTag;
  return fill_choi(c11(B::k11), c11(B::k12), c11(B::k22), c13(B::k11), c13(B::k12),
                   c13(B::k21), c13(B::k22), c33(B::k11), c33(B::k12), c33(B::k22));
}

ChoiMatrix pbt_choi(const ReducedResource& reduced) {
  return assemble_choi(to_spin_coefficients(reduced));
}

}  // namespace pbtsim
