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

#include <iosfwd>
#include <string>
#include <vector>

#include "pbtsim/distances.hpp"

namespace pbtsim {

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  double step = 0.01;

  /// Inclusive of `stop` up to rounding. Throws std::invalid_argument for an
  /// empty grid or a non-positive step.
  std::vector<double> values() const;
};

/// Parses "start:stop:step".
Grid parse_grid(const std::string& text);

enum class SweepFamily { kChoi, kAlternate };

struct SweepRow {
  double param = 0.0;
  double trace_norm = 0.0;
  double diamond_lower = 0.0;
  double diamond_upper = 0.0;
  double diamond_numeric = 0.0;
};

/// Distances from the plus-Bell AD(p0) Choi matrix, sweeping p1 (Choi
/// resource) or a (alternate resource).
std::vector<SweepRow> ad_sweep(int n, double p0, SweepFamily family, const Grid& grid,
                               const DiamondOptions& opts = {});

/// "%.12g".
std::string format_number(double v);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct ComparisonRow {
  double p0 = 0.0;
  double p1 = 0.0;
  double a = 0.0;
  SweepRow choi;
  SweepRow alternate;
};

enum class ComparisonMode {
  kKnownPoints,  // p1 = (p0 - xi) / (1 - xi), a = a_known
  kNearOptimal,  // p1 = (2 p0 - xi) / (2 - xi), y(a) = p0 / 2
};

/// Rows where both parameters exist, p0 stepping from the first value with
/// p1 >= 0 up to `p0_stop`.
std::vector<ComparisonRow> resource_comparison(int n, ComparisonMode mode, double step,
                                               double p0_stop, const DiamondOptions& opts = {});

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

struct FigureFile {
  std::string name;
  std::string csv;
};

struct FigureOptions {
  double step = 0.01;
  DiamondOptions diamond;
};

/// CSV payloads behind figures 1 to 4.
std::vector<FigureFile> figure_data(int id, const FigureOptions& opts = {});

struct VerifyLine {
  std::string check;
  int n = 0;
  double deviation = 0.0;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;
  double max_deviation = 0.0;
};

/// Closed forms, protocol Kraus map and dense oracle compared on the named
/// resource families for n = 2..max_ports.
VerifyReport verify(int max_ports);

}  // namespace pbtsim
