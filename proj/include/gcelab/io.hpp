// Copyright 2026 The gcelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Statevector files and number formatting shared by the writers.
//
// A statevector file is a JSON object
//
//   {"n": 2, "amplitudes": [[0.7071067811865476, 0], [0, 0], [0, 0], [0.7071067811865476, 0]]}
//
// holding 2^n [re, im] pairs, with qubit 0 as the most significant bit of the
// basis index.

#ifndef GCELAB_IO_HPP
#define GCELAB_IO_HPP

#include <iosfwd>
#include <string>

#include "gcelab/quantum_core.hpp"

namespace gcelab {

/// Shortest decimal form that reads back to the same double.
std::string format_double(double value);

/// Throws ParseError naming the offending field or amplitude index. Norms
/// within 1e-6 of 1 are rescaled to unit norm; anything further is rejected.
PureState parse_statevector_json(const std::string& text);
PureState read_statevector_file(const std::string& path);

std::string statevector_to_json(const PureState& psi);
void write_statevector_file(const std::string& path, const PureState& psi);

}  // namespace gcelab

#endif  // GCELAB_IO_HPP
