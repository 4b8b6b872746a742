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


#include <gtest/gtest.h>

#include <cmath>

#include "pbtsim/numerics.hpp"

namespace pbtsim {
namespace {

TEST(NelderMead, Quadratic) {
  const auto f = [](const std::vector<double>& x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0) + 3.0;
  };
  const SimplexResult r = nelder_mead_minimize(f, {0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], -2.0, 1e-6);
  EXPECT_NEAR(r.value, 3.0, 1e-10);
}

TEST(NelderMead, Rosenbrock) {
  const auto f = [](const std::vector<double>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  SimplexOptions opts;
  opts.max_iter = 20000;
  const SimplexResult r = nelder_mead_minimize(f, {-1.2, 1.0}, opts);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], 1.0, 1e-4);
}

TEST(NelderMead, IterationCapReported) {
  const auto f = [](const std::vector<double>& x) { return std::cos(x[0]) + x[1] * x[1]; };
  SimplexOptions opts;
  opts.max_iter = 3;
  const SimplexResult r = nelder_mead_minimize(f, {0.3, 0.3}, opts);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.iterations, 3);
}

TEST(NelderMead, StopsWhenStalled) {
  const auto f = [](const std::vector<double>& x) { return 3.0 + x[0] * x[0] + x[1] * x[1]; };
  SimplexOptions opts;
  opts.size_tol = 1e-14;
  const SimplexResult r = nelder_mead_minimize(f, {0.4, -0.2}, opts);
  EXPECT_FALSE(r.converged);
  EXPECT_LT(r.iterations, opts.max_iter);
  EXPECT_NEAR(r.value, 3.0, 1e-14);
}

TEST(Bisect, FindsRoot) {
  const auto r = bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0);
  ASSERT_TRUE(r.has_value());
  EXPECT_NEAR(*r, std::sqrt(2.0), 1e-11);
}

TEST(Bisect, EndpointRoot) {
  const auto r = bisect_root([](double x) { return x - 1.0; }, 1.0, 3.0);
  ASSERT_TRUE(r.has_value());
  EXPECT_NEAR(*r, 1.0, 1e-12);
}

TEST(Bisect, NoSignChange) {
  EXPECT_FALSE(bisect_root([](double x) { return x * x + 1.0; }, -1.0, 1.0).has_value());
}

}  // namespace
}  // namespace pbtsim
