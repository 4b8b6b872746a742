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

#include <variant>

#include "pbtsim/pbt_choi.hpp"

namespace pbtsim {

inline constexpr int kMaxXiPorts = 60;

/// Depolarising probability of N-port teleportation with singlet ports.
double xi(int n);

ChoiMatrix depolarising_choi(double xi_val);

/// Projector onto (|00> + |11>)/sqrt(2).
ChoiMatrix identity_choi();

enum class AdConvention {
  kSingletBell,  // against (|01> - |10>)/sqrt(2); the per-port resource R(p)
  kPlusBell,     // against (|00> + |11>)/sqrt(2); comparable with PBT output
};

ChoiMatrix ad_choi(double p, AdConvention convention);

struct Depolarising {
  double xi = 0.0;
};
struct AmplitudeDamping {
  double p = 0.0;
  AdConvention convention = AdConvention::kPlusBell;
};
using ChannelModel = std::variant<Depolarising, AmplitudeDamping>;

ChoiMatrix model_choi(const ChannelModel& model);

/// Closed-form output of N-port teleportation with the R(p1) product resource.
ChoiMatrix pbt_ad_closed_form(int n, double p1);

}  // namespace pbtsim
