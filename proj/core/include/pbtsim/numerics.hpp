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

#include <functional>
#include <optional>
#include <vector>

namespace pbtsim {

struct SimplexOptions {
  double initial_step = 0.5;
  double size_tol = 1e-7;
  int max_iter = 4000;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free Nelder-Mead minimisation.
SimplexResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                   std::vector<double> x0, const SimplexOptions& opts = {});

/// Root of f on [lo, hi] by bisection; nullopt when f(lo), f(hi) share a sign.
std::optional<double> bisect_root(const std::function<double(double)>& f, double lo, double hi,
                                  double xtol = 1e-12);

}  // namespace pbtsim
