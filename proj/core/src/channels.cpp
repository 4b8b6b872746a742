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


#include "pbtsim/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pbtsim/spin_basis.hpp"

namespace pbtsim {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(std::string(what) + ": probability outside [0, 1]");
  }
}

}  // namespace

double xi(int n) {
  if (n < 2) throw std::domain_error("xi: need at least two ports");
  if (n > kMaxXiPorts) throw std::domain_error("xi: port count above 60");
  const double np2 = n + 2.0;
  double sum = 0.0;
  for (int ts = (n + 1) % 2; ts <= n - 1; ts += 2) {
    const double s = 0.5 * ts;
    const double d = np2 * np2 - (2.0 * s + 1.0) * (2.0 * s + 1.0);
    const auto k = (n - 1 - ts) / 2;
    const double binom = static_cast<double>(binomial(n, k));
    sum += s * (s + 1.0) * binom * (np2 - std::sqrt(d)) / d;
  }
  return std::ldexp(sum / 3.0, 4 - n) + std::ldexp(np2 / 3.0, 1 - n);
}

ChoiMatrix depolarising_choi(double xi_val) {
  if (!(xi_val >= 0.0 && xi_val <= 4.0 / 3.0)) {
    throw std::domain_error("depolarising_choi: parameter outside [0, 4/3]");
  }
  ComplexMatrix c = ComplexMatrix::Zero(4, 4);
  c(0, 0) = c(3, 3) = 0.5 - xi_val / 4.0;
  c(1, 1) = c(2, 2) = xi_val / 4.0;
  c(0, 3) = c(3, 0) = 0.5 - xi_val / 2.0;
  return ChoiMatrix(std::move(c));
}

ChoiMatrix identity_choi() { return depolarising_choi(0.0); }

ChoiMatrix ad_choi(double p, AdConvention convention) {
  check_probability(p, "ad_choi");
  const double r = std::sqrt(1.0 - p);
  ComplexMatrix c = ComplexMatrix::Zero(4, 4);
  if (convention == AdConvention::kSingletBell) {
    c(0, 0) = p / 2.0;
    c(1, 1) = (1.0 - p) / 2.0;
    c(2, 2) = 0.5;
    c(1, 2) = c(2, 1) = -r / 2.0;
  } else {
    c(0, 0) = 0.5;
    c(2, 2) = p / 2.0;
    c(3, 3) = (1.0 - p) / 2.0;
    c(0, 3) = c(3, 0) = r / 2.0;
  }
  return ChoiMatrix(std::move(c));
}

ChoiMatrix model_choi(const ChannelModel& model) {
  if (const auto* dep = std::get_if<Depolarising>(&model)) return depolarising_choi(dep->xi);
  const auto& ad = std::get<AmplitudeDamping>(model);
  return ad_choi(ad.p, ad.convention);
}

ChoiMatrix pbt_ad_closed_form(int n, double p1) {
  check_probability(p1, "pbt_ad_closed_form");
  const double x = xi(n);
  const double q = 1.0 - p1;
  ComplexMatrix c = ComplexMatrix::Zero(4, 4);
  c(0, 0) = 0.5 - x / 4.0 * q;
  c(1, 1) = x / 4.0 * q;
  c(2, 2) = p1 * (0.5 - x / 4.0) + x / 4.0;
  c(3, 3) = q * (0.5 - x / 4.0);
  c(0, 3) = c(3, 0) = (0.5 - x / 2.0) * std::sqrt(q);
  return ChoiMatrix(std::move(c));
}

}  // namespace pbtsim
