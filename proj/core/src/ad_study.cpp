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


#include "pbtsim/ad_study.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pbtsim/channels.hpp"
#include "pbtsim/numerics.hpp"
#include "pbtsim/spin_basis.hpp"

namespace pbtsim {

namespace {

constexpr double kXiMax = (6.0 - 1.7320508075688772) / 6.0;

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error(std::string(what) + ": outside [0, 1]");
}

}  // namespace

double d0_closed(double xi_val, double p0) {
  return xi_val * ((1.0 - p0) / 2.0 + std::sqrt(1.0 - p0));
}

double d1_closed(double xi_val, double p0) {
  const double q = 1.0 - p0;
  const double r = xi_val / (1.0 - xi_val);
  const double g = 1.0 - std::sqrt(1.0 - xi_val);
  return 0.5 * (q * r + std::sqrt(4.0 * q * g * g + q * q * r * r));
}

KnownPoints ad_known_points(int n, double p0) {
  check_unit(p0, "ad_known_points");
  const double x = xi(n);
  KnownPoints out;
  out.p1_a = p0;
  out.d0 = d0_closed(x, p0);
  if (p0 >= x) {
    out.p1_b = (p0 - x) / (1.0 - x);
    out.d1 = d1_closed(x, p0);
  }
  return out;
}

DifferenceSpectrum difference_spectrum_xi(double xi_val, double p0, double p1) {
  check_unit(p0, "difference_spectrum");
  check_unit(p1, "difference_spectrum");
  DifferenceSpectrum d;
  d.e1 = xi_val / 4.0 * (1.0 - p1);
  d.e2 = d.e1 - (p0 - p1) / 2.0;
  d.c = 0.5 * (std::sqrt(1.0 - p0) - (1.0 - xi_val) * std::sqrt(1.0 - p1));
  const double root = std::sqrt((d.e1 - d.e2) * (d.e1 - d.e2) + 4.0 * d.c * d.c);
  d.e3 = -0.5 * ((d.e1 + d.e2) + root);
  d.e4 = -0.5 * ((d.e1 + d.e2) - root);
  return d;
}

DifferenceSpectrum difference_spectrum(int n, double p0, double p1) {
  return difference_spectrum_xi(xi(n), p0, p1);
}

double trace_norm_closed(double xi_val, double p0, double p1) {
  const DifferenceSpectrum d = difference_spectrum_xi(xi_val, p0, p1);
  return std::abs(d.e1) + std::abs(d.e2) + std::abs(d.e3) + std::abs(d.e4);
}

double trace_norm_gradient(double xi_val, double p0, double p1, GradientSide side) {
  const double k = 1.0 - xi_val;
  const double h = (p0 - p1) / 2.0;
  const double w = std::sqrt(1.0 - p0) - k * std::sqrt(1.0 - p1);
  const double num = p1 - p0 + 2.0 * k * (std::sqrt((1.0 - p0) / (1.0 - p1)) - k);
  const double outer = num / (4.0 * std::sqrt(h * h + w * w));
  return side == GradientSide::kBelowKink ? outer - 0.5 : outer + k / 2.0;
}

std::optional<double> trace_min_location(int n, double p0) {
  check_unit(p0, "trace_min_location");
  const double x = xi(n);
  if (p0 < x / 2.0) return std::nullopt;
  const double kink = (2.0 * p0 - x) / (2.0 - x);
  if (kink >= 1.0 - 1e-12) return kink;
  auto left = [&](double p1) { return trace_norm_gradient(x, p0, p1, GradientSide::kBelowKink); };
  if (left(kink) <= 0.0 || kink <= 0.0) return kink;
  const std::optional<double> stationary = bisect_root(left, 0.0, kink);
  if (!stationary) {
    // Gradient already positive at p1 = 0.
    return trace_norm_closed(x, p0, 0.0) < trace_norm_closed(x, p0, kink) ? 0.0 : kink;
  }
  return trace_norm_closed(x, p0, *stationary) <= trace_norm_closed(x, p0, kink) ? *stationary
                                                                                  : kink;
}

double p0_cross(double xi_val) {
  if (!(xi_val >= 0.0 && xi_val <= kXiMax + 1e-12)) {
    throw std::domain_error("p0_cross: xi outside [0, (6 - sqrt 3) / 6]");
  }
  const double x = xi_val;
  const double num = 1.0 + 4.0 * x - 8.0 * x * x + 5.0 * x * x * x +
                     std::pow(1.0 - x, 3.5) - x * x * x * x;
  return num / (3.0 - 3.0 * x + x * x);
}

namespace {

// Value and a-derivative of sum_k a^{p_k} (1 - a)^{q_k} c_k.
struct Series {
  double value = 0.0;
  double slope = 0.0;
};

struct AlternateTerms {
  Series x, y, z;
};

void add_term(Series& s, double a, double p, double q, double c, double slope_factor) {
  if (c == 0.0) return;
  const double w = std::pow(a, p) * std::pow(1.0 - a, q) * c;
  s.value += w;
  s.slope += w * slope_factor;
}

AlternateTerms alternate_terms(int n, double a) {
  if (n < 2) throw std::domain_error("alternate_xyz: need at least two ports");
  check_unit(a, "alternate_xyz");
  const double nd = n;
  // The slope factors are only used for a strictly inside (0, 1).
  const double inner = (a > 0.0 && a < 1.0) ? 1.0 / (2.0 * a * (1.0 - a)) : 0.0;
  AlternateTerms t;
  for (int ts = (n + 1) % 2; ts <= n - 1; ts += 2) {
    const double s = 0.5 * ts;
    const double k = static_cast<double>(binomial(n, (n - 1 - ts) / 2));
    const double den = 2.0 * (2.0 * s + 1.0);
    const double ia = 1.0 / std::sqrt((nd + 1.0) / 2.0 - s);
    const double ib = 1.0 / std::sqrt((nd + 3.0) / 2.0 + s);
    for (int tm = -ts; tm <= ts; tm += 2) {
      const double m = 0.5 * tm;
      const double bx = ia * (s - m) + ib * (s + m + 1.0);
      add_term(t.x, a, (nd + 1.0) / 2.0 + m, (nd - 1.0) / 2.0 - m, k * bx * bx / den,
               (nd * (1.0 - 2.0 * a) + 2.0 * m + 1.0) * inner);
      add_term(t.y, a, (nd - 1.0) / 2.0 + m, (nd + 1.0) / 2.0 - m,
               k * (s + m) * (s - m + 1.0) * (ia - ib) * (ia - ib) / den,
               (nd * (1.0 - 2.0 * a) + 2.0 * m - 1.0) * inner);
      const double bz = ia * ia * (s * s - m * m) + 2.0 * ia * ib * (s * s + m * m + s) +
                        ib * ib * ((s + 1.0) * (s + 1.0) - m * m);
      add_term(t.z, a, nd / 2.0 + m, nd / 2.0 - m, k * bz / den,
               (nd * (1.0 - 2.0 * a) + 2.0 * m) * inner);
    }
  }
  const double bden = 2.0 * nd * (nd + 1.0);
  for (int tm = -(n + 1); tm <= n + 1; tm += 2) {
    const double m = 0.5 * tm;
    const double cx = ((nd + 1.0) / 2.0 + m) * ((nd + 1.0) / 2.0 - m) / bden;
    const double cy = ((nd - 1.0) / 2.0 + m) * ((nd + 1.0) / 2.0 + m) / bden;
    add_term(t.x, a, (nd + 1.0) / 2.0 + m, (nd - 1.0) / 2.0 - m, cx,
             (nd * (1.0 - 2.0 * a) + 2.0 * m + 1.0) * inner);
    add_term(t.y, a, (nd - 1.0) / 2.0 + m, (nd + 1.0) / 2.0 - m, cy,
             (nd * (1.0 - 2.0 * a) + 2.0 * m - 1.0) * inner);
    add_term(t.z, a, nd / 2.0 + m, nd / 2.0 - m, -cx, (nd * (1.0 - 2.0 * a) + 2.0 * m) * inner);
  }
  return t;
}

double y_sum(int n, double a) {
  return alternate_terms(n, a).y.value + alternate_terms(n, 1.0 - a).y.value;
}

}  // namespace

AlternateXYZ alternate_xyz(int n, double a) {
  const AlternateTerms t = alternate_terms(n, a);
  return {t.x.value, t.y.value, t.z.value};
}

ChoiMatrix alternate_choi(int n, double a) {
  const AlternateXYZ v = alternate_xyz(n, a);
  ComplexMatrix c = ComplexMatrix::Zero(4, 4);
  c(0, 0) = v.x;
  c(1, 1) = 0.5 - v.x;
  c(2, 2) = v.y;
  c(3, 3) = 0.5 - v.y;
  c(0, 3) = c(3, 0) = v.z;
  return ChoiMatrix(std::move(c));
}

std::optional<AlternateKnownPoint> alternate_known_point(int n, double p0) {
  check_unit(p0, "alternate_known_point");
  auto g = [&](double a) {
    const AlternateXYZ v = alternate_xyz(n, a);
    return 1.0 - 2.0 * (v.x - v.y) - p0;
  };
  constexpr int kScan = 200;
  double lo = 0.5;
  double glo = g(lo);
  std::optional<double> root;
  if (glo == 0.0) root = lo;
  for (int i = 1; i <= kScan && !root; ++i) {
    const double hi = 0.5 + 0.5 * i / kScan;
    const double ghi = g(hi);
    if ((glo < 0.0) != (ghi < 0.0) || ghi == 0.0) {
      root = bisect_root(g, lo, hi);
    }
    lo = hi;
    glo = ghi;
  }
  if (!root) return std::nullopt;
  const AlternateXYZ v = alternate_xyz(n, *root);
  const double h = p0 - 2.0 * v.y;
  const double w = std::sqrt(1.0 - p0) - 2.0 * v.z;
  return AlternateKnownPoint{*root, h + std::sqrt(h * h + w * w)};
}

std::optional<double> alternate_a_for_y(int n, double p0) {
  check_unit(p0, "alternate_a_for_y");
  auto g = [&](double a) { return alternate_xyz(n, a).y - p0 / 2.0; };
  constexpr int kScan = 200;
  for (const double dir : {1.0, -1.0}) {
    double lo = 0.5;
    double glo = g(lo);
    if (glo == 0.0) return lo;
    for (int i = 1; i <= kScan; ++i) {
      const double hi = 0.5 + dir * 0.5 * i / kScan;
      const double ghi = g(hi);
      if ((glo < 0.0) != (ghi < 0.0) || ghi == 0.0) {
        return dir > 0 ? bisect_root(g, lo, hi) : bisect_root(g, hi, lo);
      }
      lo = hi;
      glo = ghi;
    }
  }
  return std::nullopt;
}

double d2_sum_da2_at_half(int n) {
  constexpr double h = 1e-3;
  const double c = 0.5;
  return (-y_sum(n, c + 2 * h) + 16.0 * y_sum(n, c + h) - 30.0 * y_sum(n, c) +
          16.0 * y_sum(n, c - h) - y_sum(n, c - 2 * h)) /
         (12.0 * h * h);
}

AlternateDerivatives alternate_derivatives(int n, double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("alternate_derivatives: a must lie in (0, 1)");
  const AlternateTerms t = alternate_terms(n, a);
  const AlternateTerms mirror = alternate_terms(n, 1.0 - a);
  AlternateDerivatives d;
  d.dy_da = t.y.slope;
  d.dz_da = t.z.slope;
  d.dp0_da = 2.0 * (t.y.slope - mirror.y.slope);
  d.d2_sum_da2_at_half = d2_sum_da2_at_half(n);
  return d;
}

}  // namespace pbtsim
