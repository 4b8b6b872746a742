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


#include "pbtsim/distances.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "pbtsim/kraus.hpp"
#include "pbtsim/numerics.hpp"

namespace pbtsim {

double trace_norm(const ChoiMatrix& x, const ChoiMatrix& y) {
  return trace_norm(ComplexMatrix(x.matrix() - y.matrix()));
}

DiamondBounds diamond_bounds(const ChoiMatrix& x, const ChoiMatrix& y) {
  const ComplexMatrix diff = x.matrix() - y.matrix();
  const ComplexMatrix mod = hermitian_abs(diff);
  const int traced[] = {1};
  const ComplexMatrix reduced = partial_trace(mod, 2, traced);
  DiamondBounds b;
  b.lower = mod.trace().real();
  b.upper = 2.0 * hermitian_eigenvalues(reduced).maxCoeff();
  return b;
}

namespace {

using Vec4 = Eigen::Matrix<Complex, 4, 1>;
using Mat4 = Eigen::Matrix<Complex, 4, 4>;

// Amplitudes cos t1, sin t1 cos t2, sin t1 sin t2 cos t3, sin t1 sin t2 sin t3;
// the last three carry phases. Index is 2 * idler + input.
Vec4 pure_state(const std::vector<double>& v) {
  const double s1 = std::sin(v[0]);
  const double s2 = std::sin(v[1]);
  Vec4 psi;
  psi(0) = std::cos(v[0]);
  psi(1) = std::polar(s1 * std::cos(v[1]), v[3]);
  psi(2) = std::polar(s1 * s2 * std::cos(v[2]), v[4]);
  psi(3) = std::polar(s1 * s2 * std::sin(v[2]), v[5]);
  return psi;
}

std::vector<Mat4> lifted_ops(const ChoiMatrix& c) {
  const KrausSet k = choi_to_kraus(c);
  std::vector<Mat4> out;
  out.reserve(k.ops.size());
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  for (const auto& op : k.ops) out.emplace_back(kron(id, op));
  return out;
}

class Objective {
 public:
  Objective(const ChoiMatrix& x, const ChoiMatrix& y) : kx_(lifted_ops(x)), ky_(lifted_ops(y)) {}

  double value(const std::vector<double>& v) const {
    const Vec4 psi = pure_state(v);
    Mat4 out = Mat4::Zero();
    for (const auto& k : kx_) {
      const Vec4 w = k * psi;
      out.noalias() += w * w.adjoint();
    }
    for (const auto& k : ky_) {
      const Vec4 w = k * psi;
      out.noalias() -= w * w.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<Mat4> es(out, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }

 private:
  std::vector<Mat4> kx_;
  std::vector<Mat4> ky_;
};

constexpr int kAnnealRounds = 4;

}  // namespace

double diamond_numeric(const ChoiMatrix& x, const ChoiMatrix& y, const DiamondOptions& opts) {
  const Objective obj(x, y);
  auto neg = [&](const std::vector<double>& v) { return -obj.value(v); };

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

  const double half_pi = 0.5 * std::numbers::pi;
  double best = obj.value({0.25 * std::numbers::pi, half_pi, half_pi, 0.0, 0.0, 0.0});
  const int starts = opts.restarts < 1 ? 1 : opts.restarts;
  for (int r = 0; r < starts; ++r) {
    std::vector<double> x0;
    if (r == 0) {
      x0 = {0.25 * std::numbers::pi, half_pi, half_pi, 0.0, 0.0, 0.0};
    } else {
      x0 = {angle(rng), angle(rng), angle(rng), phase(rng), phase(rng), phase(rng)};
    }
    SimplexOptions so;
    so.size_tol = opts.size_tol;
    double local = -neg(x0);
    for (int round = 0; round < kAnnealRounds; ++round) {
      const SimplexResult res = nelder_mead_minimize(neg, x0, so);
      const double improved = -res.value;
      x0 = res.x;
      so.initial_step *= 0.5;
      const bool stalled = improved <= local + 1e-13;
      if (improved > local) local = improved;
      if (stalled) break;
    }
    if (local > best) best = local;
  }
  return best;
}

}  // namespace pbtsim
