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

#include <optional>

#include "pbtsim/pbt_choi.hpp"

namespace pbtsim {

// Simulating an amplitude-damping channel of strength p0 by teleportation
// over product resources. Target Choi matrices use the plus-Bell convention.

/// Tr-norm (and diamond norm) with the R(p0) resource.
double d0_closed(double xi_val, double p0);

/// Diamond norm at p1 = (p0 - xi) / (1 - xi).
double d1_closed(double xi_val, double p0);

struct KnownPoints {
  double p1_a = 0.0;
  double d0 = 0.0;
  std::optional<double> p1_b;  // absent when p0 < xi
  std::optional<double> d1;
};

KnownPoints ad_known_points(int n, double p0);

struct DifferenceSpectrum {
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double e4 = 0.0;
  double c = 0.0;
};

DifferenceSpectrum difference_spectrum(int n, double p0, double p1);
DifferenceSpectrum difference_spectrum_xi(double xi_val, double p0, double p1);

/// |e1| + |e2| + |e3| + |e4|.
double trace_norm_closed(double xi_val, double p0, double p1);

enum class GradientSide { kBelowKink, kAboveKink };

/// d Tr-norm / d p1 on one side of p1 = (2 p0 - xi) / (2 - xi).
double trace_norm_gradient(double xi_val, double p0, double p1, GradientSide side);

/// p1 minimising the trace norm; absent for p0 < xi / 2.
std::optional<double> trace_min_location(int n, double p0);

double p0_cross(double xi_val);

struct AlternateXYZ {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// The x, y, z sums at parameter a. With the port matrix of
/// AlternateFamily{a}, the teleported Choi matrix is alternate_choi(n, 1 - a).
AlternateXYZ alternate_xyz(int n, double a);

/// Choi matrix assembled from x, y, z.
ChoiMatrix alternate_choi(int n, double a);

struct AlternateKnownPoint {
  double a_known = 0.5;
  double d2 = 0.0;
};

/// Solves x(a) - 1/2 = y(a) - p0/2 for a in [1/2, 1]; absent when p0 is
/// not reachable.
std::optional<AlternateKnownPoint> alternate_known_point(int n, double p0);

/// Smallest-|a - 1/2| solution of y(a) = p0 / 2.
std::optional<double> alternate_a_for_y(int n, double p0);

struct AlternateDerivatives {
  double dy_da = 0.0;
  double dz_da = 0.0;
  double dp0_da = 0.0;
  double d2_sum_da2_at_half = 0.0;
};

/// a must lie in (0, 1).
AlternateDerivatives alternate_derivatives(int n, double a);

/// Second derivative of y(a) + y(1 - a) at a = 1/2 (five-point stencil).
double d2_sum_da2_at_half(int n);

}  // namespace pbtsim
