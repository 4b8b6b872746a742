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


// Acceptance suite. One line per criterion:
//   AC-<k> PASS|FAIL  <summary>  (<seconds> s)
// Exit status is 0 when every criterion passes, or when the failing set equals
// the set named by --expect-fail (comma separated ids, e.g. --expect-fail 9).
// --report <path> also writes the lines to a file.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pbtsim/ad_study.hpp"
#include "pbtsim/channels.hpp"
#include "pbtsim/distances.hpp"
#include "pbtsim/experiments.hpp"
#include "pbtsim/kraus.hpp"
#include "pbtsim/oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace pbtsim;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

ChoiMatrix target(double p0) { return ad_choi(p0, AdConvention::kPlusBell); }

// Every sweep row computed below, checked by AC-12.
std::vector<SweepRow> g_rows;

std::vector<ReducedResource> family_cases(int n) {
  std::vector<ReducedResource> out = {make_family(BellFamily{}, n)};
  for (double p : {0.0, 0.3, 0.7, 1.0}) out.push_back(make_family(AdChoiFamily{p}, n));
  for (double a : {0.1, 0.5, 0.9}) out.push_back(make_family(AlternateFamily{a}, n));
  return out;
}

std::vector<ReducedResource> random_cases() {
  std::mt19937_64 rng(0xacce55);
  std::vector<ReducedResource> out;
  for (int k = 0; k < 20; ++k) out.push_back(reduce(testing::random_symmetric_resource(2 + k % 3, rng)));
  return out;
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

Outcome ac1() {
  const double x2 = xi(2);
  const double want2 = (6.0 - std::sqrt(3.0)) / 6.0;
  double worst = std::abs(x2 - want2);
  for (int n : {3, 4}) {
    const double dense = 4.0 * oracle_choi(make_family(BellFamily{}, n))(1, 1).real();
    worst = std::max(worst, std::abs(xi(n) - dense));
  }
  worst = std::max(worst, std::abs(xi(3) - 0.5));
  return {worst <= 1e-12, "xi(2)=" + fmt("%.12g", x2) + " xi(4)=" + fmt("%.12g", xi(4)) +
                              " max dev " + fmt("%.2e", worst)};
}

Outcome ac2() {
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& r : family_cases(n)) {
      worst = std::max(worst, max_abs_diff(pbt_choi(r).matrix(), oracle_choi(r).matrix()));
    }
  }
  for (const auto& r : random_cases()) {
    worst = std::max(worst, max_abs_diff(pbt_choi(r).matrix(), oracle_choi(r).matrix()));
  }
  return {worst <= 1e-10, "closed form vs oracle max dev " + fmt("%.2e", worst)};
}

Outcome ac3() {
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    worst = std::max(worst, max_abs_diff(pbt_choi(make_family(BellFamily{}, n)).matrix(),
                                         depolarising_choi(xi(n)).matrix()));
  }
  return {worst <= 1e-10, "Bell resource vs depolarising, N=2..8, max dev " + fmt("%.2e", worst)};
}

Outcome ac4() {
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= 20; ++k) {
      const double p1 = 0.05 * k;
      worst = std::max(worst, max_abs_diff(pbt_choi(make_family(AdChoiFamily{p1}, n)).matrix(),
                                           pbt_ad_closed_form(n, p1).matrix()));
    }
  }
  return {worst <= 1e-10, "AD resource closed form vs pipeline max dev " + fmt("%.2e", worst)};
}

SweepRow row_for(double param, const ChoiMatrix& x, const ChoiMatrix& y) {
  const DiamondBounds b = diamond_bounds(x, y);
  SweepRow r{param, b.lower, b.lower, b.upper, diamond_numeric(x, y)};
  g_rows.push_back(r);
  return r;
}

Outcome ac5() {
  double gap = 0.0, numeric = 0.0, d1_dev = 0.0;
  for (int n : {3, 4, 6}) {
    const double x = xi(n);
    for (double p0 : {0.6, 0.8, 0.95}) {
      const KnownPoints k = ad_known_points(n, p0);
      for (double p1 : {p0, (p0 - x) / (1 - x)}) {
        const SweepRow r = row_for(p1, pbt_ad_closed_form(n, p1), target(p0));
        gap = std::max(gap, r.diamond_upper - r.diamond_lower);
        numeric = std::max(numeric, std::abs(r.diamond_numeric - r.diamond_lower));
        if (p1 != p0) d1_dev = std::max(d1_dev, std::abs(r.diamond_lower - *k.d1));
      }
    }
  }
  return {gap <= 1e-9 && numeric <= 1e-4 && d1_dev <= 1e-9,
          "bound gap " + fmt("%.2e", gap) + ", numeric dev " + fmt("%.2e", numeric) +
              ", closed-form D1 dev " + fmt("%.2e", d1_dev)};
}

Outcome ac6() {
  int checked = 0, bad = 0;
  for (int n = 6; n <= 10; ++n) {
    const double x = xi(n);
    for (int k = 0;; ++k) {
      const double p0 = x + 0.01 * k;
      if (p0 > 0.99 + 1e-12) break;
      ++checked;
      if (d1_closed(x, p0) > d0_closed(x, p0) + 1e-15) ++bad;
    }
  }
  return {bad == 0 && checked > 0,
          "D1 <= D0 on " + std::to_string(checked - bad) + "/" + std::to_string(checked) + " points"};
}

double trace_argmin(int n, double p0) {
  double best = 0.0, best_val = 1e300;
  for (int i = 0; i <= 10000; ++i) {
    const double p1 = 1e-4 * i;
    const double v = trace_norm(pbt_ad_closed_form(n, p1), target(p0));
    if (v < best_val) {
      best_val = v;
      best = p1;
    }
  }
  return best;
}

Outcome ac7() {
  const double x = xi(4);
  bool ok = true;
  std::string detail;
  for (double p0 : {0.36, 0.7, 0.85, 0.95}) {
    const double found = trace_argmin(4, p0);
    const double kink = (2 * p0 - x) / (2 - x);
    const double lo = (p0 - x) / (1 - x);
    if (p0 < 0.8) {
      ok = ok && std::abs(found - kink) <= 1e-4;
    } else {
      ok = ok && found < kink - 1e-4;
      const bool inside = found >= lo && found <= p0;
      ok = ok && (p0 == 0.85 ? inside : !inside);
    }
    detail += " p0=" + fmt("%g", p0) + ":" + fmt("%.4f", found) + "/" + fmt("%.4f", kink);
  }
  return {ok, "argmin/kink" + detail};
}

Outcome ac8() {
  bool ok = p0_cross(0.0) == 2.0 / 3.0;
  int sign_bad = 0;
  double eig_dev = 0.0;
  for (int n : {3, 4, 6}) {
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        const double p0 = i / 99.0, p1 = j / 99.0;
        const DifferenceSpectrum s = difference_spectrum(n, p0, p1);
        if (s.e3 > 0.0 || s.e4 < 0.0) ++sign_bad;
        const Eigen::VectorXd dense =
            hermitian_eigenvalues(pbt_ad_closed_form(n, p1).matrix() - target(p0).matrix());
        std::vector<double> a = {s.e1, s.e2, s.e3, s.e4};
        std::vector<double> b(dense.data(), dense.data() + 4);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (int k = 0; k < 4; ++k) eig_dev = std::max(eig_dev, std::abs(a[k] - b[k]));
      }
    }
  }
  ok = ok && sign_bad == 0 && eig_dev <= 1e-12;
  return {ok, "p0_cross(0)=" + fmt("%.17g", p0_cross(0.0)) + ", sign violations " +
                  std::to_string(sign_bad) + ", eigenvalue dev " + fmt("%.2e", eig_dev)};
}

Outcome ac9() {
  double worst = 0.0;
  const double h = 1e-6;
  for (int n = 2; n <= 8; ++n) {
    for (double a : {0.51, 0.6, 0.75, 0.9}) {
      const AlternateDerivatives d = alternate_derivatives(n, a);
      const double fy = (alternate_xyz(n, a + h).y - alternate_xyz(n, a - h).y) / (2 * h);
      const double fz = (alternate_xyz(n, a + h).z - alternate_xyz(n, a - h).z) / (2 * h);
      worst = std::max(worst, std::abs(d.dy_da - fy) / std::abs(fy));
      worst = std::max(worst, std::abs(d.dz_da - fz) / std::abs(fz));
    }
  }
  std::vector<double> second;
  for (int n = 2; n <= 10; ++n) second.push_back(d2_sum_da2_at_half(n));
  bool shape = std::abs(second.front()) <= 1e-6;
  for (std::size_t i = 1; i < second.size(); ++i) {
    shape = shape && second[i] > second[i - 1] && second[i] < 1.0;
  }
  std::string values;
  for (double v : second) values += (values.empty() ? "" : " ") + fmt("%.4f", v);
  return {worst <= 1e-5 && shape, "first-derivative rel err " + fmt("%.2e", worst) +
                                      ", second derivative at 1/2 for N=2..10: " + values};
}

Outcome ac10() {
  std::string detail;
  bool ok = true;
  for (int n : {4, 6}) {
    const double x = xi(n);
    bool found = false;
    for (int k = 0; !found; ++k) {
      const double p0 = std::ceil(100.0 * x / 2.0) / 100.0 + 0.01 * k;
      if (p0 > 0.5) break;
      // Alternate: numeric on the a values with the smallest trace norm.
      std::vector<std::pair<double, double>> by_lower;
      for (double a : Grid{0.0, 1.0, 0.01}.values()) {
        by_lower.emplace_back(trace_norm(alternate_choi(n, a), target(p0)), a);
      }
      std::sort(by_lower.begin(), by_lower.end());
      double alt = 1e300;
      for (int i = 0; i < 3; ++i) {
        const double a = by_lower[i].second;
        alt = std::min(alt, row_for(a, alternate_choi(n, a), target(p0)).diamond_numeric);
      }
      // Choi: numeric is never below the trace norm, so only p1 with a smaller
      // trace norm can undercut `alt`.
      double choi = 1e300;
      for (double p1 : Grid{0.0, 1.0, 0.01}.values()) {
        const ChoiMatrix c = pbt_ad_closed_form(n, p1);
        if (trace_norm(c, target(p0)) > std::min(alt, choi)) continue;
        choi = std::min(choi, row_for(p1, c, target(p0)).diamond_numeric);
      }
      if (alt < choi) {
        found = true;
        detail += " N=" + std::to_string(n) + " p0=" + fmt("%g", p0) + " alt " + fmt("%.6f", alt) +
                  " < choi " + (choi > 1e299 ? std::string(">= alt") : fmt("%.6f", choi)) + ";";
      }
    }
    if (!found) detail += " N=" + std::to_string(n) + " no advantage found;";
    ok = ok && found;
  }

  // Figure orderings.
  FigureOptions fo;
  const auto f1 = figure_data(1, fo);
  const auto f3 = figure_data(3, fo);
  const auto f4 = figure_data(4, fo);
  for (const auto* set : {&f1, &f3}) {
    for (const auto& f : *set) {
      for (const auto& r : parse_csv(f.csv)) g_rows.push_back({r[0], r[1], r[2], r[3], r[4]});
    }
  }
  auto min_numeric = [](const FigureFile& f) {
    double m = 1e300;
    for (const auto& r : parse_csv(f.csv)) m = std::min(m, r[4]);
    return m;
  };
  for (int i = 0; i < 2; ++i) {
    const double p0 = i == 0 ? 0.36 : 0.7;
    const bool lower_min = min_numeric(f3[i]) < min_numeric(f1[i]);
    const KnownPoints k = ad_known_points(4, p0);
    const auto alt_known = alternate_known_point(4, p0);
    const bool lower_known = alt_known && alt_known->d2 < std::min(k.d0, k.d1.value_or(k.d0));
    ok = ok && lower_min && lower_known;
    detail += " fig3 p0=" + fmt("%g", p0) + (lower_min && lower_known ? " ok" : " ordering off");
  }
  for (const auto& f : f4) {
    const auto rows = parse_csv(f.csv);
    int better = 0, low_better = 0, low_total = 0;
    for (const auto& r : rows) {
      g_rows.push_back({r[1], r[3], r[4], r[5], r[6]});
      g_rows.push_back({r[2], r[7], r[8], r[9], r[10]});
      const bool alt_wins = r[10] < r[6] - 1e-9;
      better += alt_wins;
      if (r[0] > rows.front()[0] + 1e-9 && r[0] <= rows.front()[0] + 0.2 + 1e-9) {
        ++low_total;
        low_better += alt_wins;
      }
    }
    const bool start_equal =
        !rows.empty() && std::abs(rows.front()[10] - rows.front()[6]) <= 1e-6;
    const bool wide = 2 * better >= static_cast<int>(rows.size());
    const bool low = low_total > 0 && low_better == low_total;
    ok = ok && start_equal && wide && low;
    detail += " " + f.name + ": alt better on " + std::to_string(better) + "/" +
              std::to_string(rows.size()) + " rows, low-p0 " + std::to_string(low_better) + "/" +
              std::to_string(low_total) + (start_equal ? ", equal at start" : ", start differs");
  }
  return {ok, detail};
}

Outcome ac11() {
  double worst = 0.0, trace_dev = 0.0;
  const auto randoms = random_cases();
  for (int n = 2; n <= 5; ++n) {
    const KrausSet set = protocol_kraus(n).as_set();
    std::vector<ReducedResource> cases = family_cases(n);
    for (const auto& r : randoms) {
      if (r.n == n) cases.push_back(r);
    }
    for (const auto& r : cases) {
      const ComplexMatrix out = apply_kraus(set, reduced_state(r));
      worst = std::max(worst, max_abs_diff(out, pbt_choi(r).matrix()));
      trace_dev = std::max(trace_dev, std::abs(out.trace().real() - 1.0));
    }
  }
  std::mt19937_64 rng(0x6b72);
  double round = 0.0;
  for (int k = 0; k < 100; ++k) {
    const ChoiMatrix c = ChoiMatrix(testing::random_channel_choi(rng, 1 + k % 4));
    round = std::max(round, max_abs_diff(kraus_to_choi(choi_to_kraus(c)).matrix(), c.matrix()));
  }
  return {worst <= 1e-10 && trace_dev <= 1e-10 && round <= 1e-12,
          "protocol vs closed form " + fmt("%.2e", worst) + ", trace dev " + fmt("%.2e", trace_dev) +
              ", Choi-Kraus round trip " + fmt("%.2e", round)};
}

Outcome ac12() {
  // Figure 2 sweeps complete the set of rows behind criteria 5 to 10.
  for (const auto& f : figure_data(2, FigureOptions{})) {
    for (const auto& r : parse_csv(f.csv)) g_rows.push_back({r[0], r[1], r[2], r[3], r[4]});
  }
  int bad = 0;
  for (const auto& r : g_rows) {
    if (r.trace_norm > r.diamond_numeric + 1e-6 || r.diamond_numeric > r.diamond_upper + 1e-6) ++bad;
  }
  return {bad == 0 && !g_rows.empty(),
          std::to_string(g_rows.size() - bad) + "/" + std::to_string(g_rows.size()) +
              " rows inside the bounds"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  std::string report_path;
  for (int i = 1; i + 1 < argc; ++i) {
    const std::string flag = argv[i];
    if (flag == "--expect-fail") {
      std::istringstream in(argv[i + 1]);
      std::string id;
      while (std::getline(in, id, ',')) expected_failures.insert(std::stoi(id));
    } else if (flag == "--report") {
      report_path = argv[i + 1];
    }
  }
  std::string report;
  auto emit = [&](const std::string& line) {
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    report += line + '\n';
  };

  struct Criterion {
    int id;
    std::function<Outcome()> run;
    double time_limit;  // seconds, 0 for none
  };
  const std::vector<Criterion> criteria = {
      {1, ac1, 1.0},  {2, ac2, 120.0}, {3, ac3, 0.0},  {4, ac4, 0.0},
      {5, ac5, 0.0},  {6, ac6, 0.0},   {7, ac7, 0.0},  {8, ac8, 0.0},
      {9, ac9, 0.0},  {10, ac10, 0.0}, {11, ac11, 0.0}, {12, ac12, 0.0},
  };

  std::set<int> failures;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0.0 && secs > c.time_limit) {
      o.pass = false;
      o.detail += ", over time limit";
    }
    if (!o.pass) failures.insert(c.id);
    emit("AC-" + std::to_string(c.id) + (o.pass ? " PASS  " : " FAIL  ") + o.detail + "  (" +
         fmt("%.2f", secs) + " s)");
  }
  emit(std::to_string(criteria.size() - failures.size()) + "/" + std::to_string(criteria.size()) +
       " criteria passed");
  if (!report_path.empty()) std::ofstream(report_path) << report;
  return failures == expected_failures ? 0 : 1;
}
