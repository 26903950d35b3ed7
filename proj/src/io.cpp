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

#include "gcelab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gcelab/errors.hpp"

namespace gcelab {

std::string format_double(double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

PureState parse_statevector_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("statevector JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("statevector JSON: top level must be an object");
  if (!doc.contains("n")) throw ParseError("statevector JSON: missing field \"n\"");
  if (!doc["n"].is_number_integer()) throw ParseError("statevector JSON: field \"n\" must be an integer");
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > kMaxDenseQubits) {
    throw ParseError("statevector JSON: field \"n\" = " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxDenseQubits) + "]");
  }
  if (!doc.contains("amplitudes")) throw ParseError("statevector JSON: missing field \"amplitudes\"");
  const auto& amps = doc["amplitudes"];
  if (!amps.is_array()) throw ParseError("statevector JSON: field \"amplitudes\" must be an array");
  const std::size_t dim = std::size_t{1} << n;
  if (amps.size() != dim) {
    throw ParseError("statevector JSON: \"amplitudes\" has " + std::to_string(amps.size()) +
                     " entries, expected 2^n = " + std::to_string(dim));
  }
  CVector v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& a = amps[i];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
      throw ParseError("statevector JSON: amplitudes[" + std::to_string(i) + "] must be [re, im]");
    }
    v[static_cast<Eigen::Index>(i)] = cplx(a[0].get<double>(), a[1].get<double>());
  }
  const double norm = v.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-6) {
    throw ParseError("statevector JSON: amplitudes have norm " + format_double(norm) + ", expected 1");
  }
  return PureState::normalized(static_cast<int>(n), std::move(v));
}

PureState read_statevector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open statevector file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_statevector_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string statevector_to_json(const PureState& psi) {
  std::ostringstream out;
  out << "{\"n\": " << psi.num_qubits() << ", \"amplitudes\": [";
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    if (i) out << ", ";
    out << '[' << format_double(psi[i].real()) << ", " << format_double(psi[i].imag()) << ']';
  }
  out << "]}";
  return out.str();
}

void write_statevector_file(const std::string& path, const PureState& psi) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << statevector_to_json(psi) << '\n';
}

}  // namespace gcelab
