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

// Text format for resource states:
//
//   PBTRES 1
//   N=<ports>
//   FORM=FULL|REDUCED
//   <re> <im> ...            row-major entries
//
// FULL carries 2^{2N} rows of 2^{2N} entries. REDUCED carries the blocks
// R11, R12, R21, R22 in that order, each 2^N rows of 2^N entries.

#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "pbtsim/resource_states.hpp"

namespace pbtsim {

using ResourceFile = std::variant<FullResource, ReducedResource>;

/// Default tolerance for Hermiticity and positivity checks on parsed input.
inline constexpr double kResourceFileTolerance = 1e-8;

/// Throws std::invalid_argument on malformed input or on a state that is not
/// Hermitian / PSD / unit trace within kResourceFileTolerance.
ResourceFile read_resource(std::istream& in);
ResourceFile read_resource_file(const std::string& path);

void write_resource(std::ostream& out, const FullResource& full);
void write_resource(std::ostream& out, const ReducedResource& reduced);

}  // namespace pbtsim
