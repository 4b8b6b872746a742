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


#include "pbtsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "pbtsim/ad_study.hpp"
#include "pbtsim/channels.hpp"
#include "pbtsim/kraus.hpp"
#include "pbtsim/oracle.hpp"
#include "pbtsim/pbt_choi.hpp"
#include "pbtsim/resource_states.hpp"

namespace pbtsim {

std::vector<double> Grid::values() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("grid: step must be > 0");
  if (!(start <= stop)) throw std::invalid_argument("grid: start must not exceed stop");
  std::vector<double> out;
  const double slack = 1e-9 * step;
  for (long k = 0;; ++k) {
    const double v = start + static_cast<double>(k) * step;
    if (v > stop + slack) break;
    out.push_back(std::min(v, stop));
  }
  return out;
}

Grid parse_grid(const std::string& text) {
  Grid g;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &g.start, &g.stop, &g.step, &tail) != 3) {
    throw std::invalid_argument("grid: expected start:stop:step, got '" + text + "'");
  }
  g.values();
  return g;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

SweepRow distance_row(double param, const ChoiMatrix& x, const ChoiMatrix& y,
                      const DiamondOptions& opts) {
  SweepRow r;
  r.param = param;
  const DiamondBounds b = diamond_bounds(x, y);
  r.trace_norm = b.lower;
  r.diamond_lower = b.lower;
  r.diamond_upper = b.upper;
  r.diamond_numeric = diamond_numeric(x, y, opts);
  return r;
}

}  // namespace

std::vector<SweepRow> ad_sweep(int n, double p0, SweepFamily family, const Grid& grid,
                               const DiamondOptions& opts) {
  const ChoiMatrix target = ad_choi(p0, AdConvention::kPlusBell);
  std::vector<SweepRow> rows;
  for (const double v : grid.values()) {
    const ChoiMatrix sim =
        family == SweepFamily::kChoi ? pbt_ad_closed_form(n, v) : alternate_choi(n, v);
    rows.push_back(distance_row(v, sim, target, opts));
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "param,trace_norm,diamond_lower,diamond_upper,diamond_numeric\n";
  for (const auto& r : rows) {
    out << format_number(r.param) << ',' << format_number(r.trace_norm) << ','
        << format_number(r.diamond_lower) << ',' << format_number(r.diamond_upper) << ','
        << format_number(r.diamond_numeric) << '\n';
  }
}

std::vector<ComparisonRow> resource_comparison(int n, ComparisonMode mode, double step,
                                               double p0_stop, const DiamondOptions& opts) {
  const double x = xi(n);
  const double p0_start = mode == ComparisonMode::kKnownPoints ? x : x / 2.0;
  std::vector<ComparisonRow> rows;
  for (const double p0 : Grid{p0_start, p0_stop, step}.values()) {
    ComparisonRow row;
    row.p0 = p0;
    std::optional<double> a;
    if (mode == ComparisonMode::kKnownPoints) {
      row.p1 = (p0 - x) / (1.0 - x);
      if (const auto k = alternate_known_point(n, p0)) a = k->a_known;
    } else {
      row.p1 = (2.0 * p0 - x) / (2.0 - x);
      a = alternate_a_for_y(n, p0);
    }
    if (!a || row.p1 < 0.0 || row.p1 > 1.0) continue;
    row.a = *a;
    const ChoiMatrix target = ad_choi(p0, AdConvention::kPlusBell);
    row.choi = distance_row(row.p1, pbt_ad_closed_form(n, row.p1), target, opts);
    row.alternate = distance_row(row.a, alternate_choi(n, row.a), target, opts);
    rows.push_back(row);
  }
  return rows;
}

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "p0,p1,a,choi_trace_norm,choi_diamond_lower,choi_diamond_upper,choi_diamond_numeric,"
         "alt_trace_norm,alt_diamond_lower,alt_diamond_upper,alt_diamond_numeric\n";
  for (const auto& r : rows) {
    out << format_number(r.p0) << ',' << format_number(r.p1) << ',' << format_number(r.a);
    for (const SweepRow* s : {&r.choi, &r.alternate}) {
      out << ',' << format_number(s->trace_norm) << ',' << format_number(s->diamond_lower) << ','
          << format_number(s->diamond_upper) << ',' << format_number(s->diamond_numeric);
    }
    out << '\n';
  }
}

namespace {

FigureFile sweep_file(const std::string& prefix, int n, double p0, SweepFamily family,
                      const FigureOptions& opts) {
  std::ostringstream name;
  name << prefix << "_n" << n << "_p0_" << format_number(p0) << ".csv";
  std::ostringstream csv;
  write_sweep_csv(csv, ad_sweep(n, p0, family, Grid{0.0, 1.0, opts.step}, opts.diamond));
  return {name.str(), csv.str()};
}

FigureFile comparison_file(const std::string& name, int n, ComparisonMode mode,
                           const FigureOptions& opts) {
  std::ostringstream csv;
  write_comparison_csv(csv, resource_comparison(n, mode, opts.step, 0.99, opts.diamond));
  return {name, csv.str()};
}

}  // namespace

std::vector<FigureFile> figure_data(int id, const FigureOptions& opts) {
  switch (id) {
    case 1:
      return {sweep_file("fig1", 4, 0.36, SweepFamily::kChoi, opts),
              sweep_file("fig1", 4, 0.7, SweepFamily::kChoi, opts)};
    case 2:
      return {sweep_file("fig2", 4, 0.85, SweepFamily::kChoi, opts),
              sweep_file("fig2", 4, 0.95, SweepFamily::kChoi, opts)};
    case 3:
      return {sweep_file("fig3", 4, 0.36, SweepFamily::kAlternate, opts),
              sweep_file("fig3", 4, 0.7, SweepFamily::kAlternate, opts)};
    case 4:
      return {comparison_file("fig4_known_points_n6.csv", 6, ComparisonMode::kKnownPoints, opts),
              comparison_file("fig4_near_optimal_n6.csv", 6, ComparisonMode::kNearOptimal, opts)};
    default:
      throw std::invalid_argument("figure: id must be 1, 2, 3 or 4");
  }
}

VerifyReport verify(int max_ports) {
  if (max_ports < 2 || max_ports > kMaxOraclePorts) {
    throw std::invalid_argument("verify: max ports must lie in [2, 8]");
  }
  VerifyReport report;
  auto record = [&](std::string check, int n, double dev) {
    report.max_deviation = std::max(report.max_deviation, dev);
    report.lines.push_back({std::move(check), n, dev});
  };
  const std::vector<std::pair<std::string, ResourceFamily>> families = {
      {"bell", BellFamily{}},          {"adchoi:0", AdChoiFamily{0.0}},
      {"adchoi:0.3", AdChoiFamily{0.3}}, {"adchoi:0.7", AdChoiFamily{0.7}},
      {"adchoi:1", AdChoiFamily{1.0}},   {"alternate:0.1", AlternateFamily{0.1}},
      {"alternate:0.5", AlternateFamily{0.5}}, {"alternate:0.9", AlternateFamily{0.9}},
  };
  for (int n = 2; n <= max_ports; ++n) {
    const DensePovm povm = build_povm(n);
    const ProtocolKraus pk = protocol_kraus(n);
    const KrausSet lambda = pk.as_set();
    for (const auto& [label, family] : families) {
      const ReducedResource red = make_family(family, n);
      const ChoiMatrix closed = pbt_choi(red);
      const ChoiMatrix dense = oracle_choi(povm, red);
      record("closed_vs_oracle " + label, n, max_abs_diff(closed.matrix(), dense.matrix()));
      const ComplexMatrix via_kraus = apply_kraus(lambda, reduced_state(red));
      record("kraus_vs_closed " + label, n, max_abs_diff(via_kraus, closed.matrix()));
      if (const auto* ad = std::get_if<AdChoiFamily>(&family)) {
        record("ad_formula_vs_closed " + label, n,
               max_abs_diff(pbt_ad_closed_form(n, ad->p).matrix(), closed.matrix()));
      } else if (const auto* alt = std::get_if<AlternateFamily>(&family)) {
        // The x, y, z sums are labelled with the mirrored parameter.
        record("xyz_vs_closed " + label, n,
               max_abs_diff(alternate_choi(n, 1.0 - alt->a).matrix(), closed.matrix()));
      }
      if (n == 2) {
        record("two_port_vs_closed " + label, n,
               max_abs_diff(two_port_choi(red).matrix(), closed.matrix()));
      }
    }
    record("bell_vs_depolarising", n,
           max_abs_diff(pbt_choi(make_family(BellFamily{}, n)).matrix(),
                        depolarising_choi(xi(n)).matrix()));
  }
  return report;
}

}  // namespace pbtsim
