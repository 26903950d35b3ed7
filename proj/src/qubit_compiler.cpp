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

#include "gcelab/qubit_compiler.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gcelab/errors.hpp"

namespace gcelab {

int ancilla_width(int copies) {
  if (copies < 2) throw std::invalid_argument("copy count K must be >= 2");
  int l = 0;
  while ((1 << l) < copies) ++l;
  return l;
}

FbMatrix fb_matrix(int copies) {
  const int l = ancilla_width(copies);
  const Eigen::Index dim = Eigen::Index{1} << l;
  CMatrix m = CMatrix::Identity(dim, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(copies));
  for (int j = 0; j < copies; ++j) {
    for (int k = 0; k < copies; ++k) {
      m(j, k) = std::polar(scale, 2.0 * std::numbers::pi * ((j * k) % copies) / copies);
    }
  }
  return {copies, std::move(m)};
}

namespace {

// Target word after a shift by z: output target j holds input target j+z.
// Target j is bit (K-1-j) of the word.
std::uint64_t shift_targets(std::uint64_t word, int copies, int z) {
  std::uint64_t out = 0;
  for (int j = 0; j < copies; ++j) {
    const int src = (j + z) % copies;
    if ((word >> (copies - 1 - src)) & 1U) out |= std::uint64_t{1} << (copies - 1 - j);
  }
  return out;
}

}  // namespace

CMatrix ccp_unitary(int copies) {
  const int l = ancilla_width(copies);
  const Eigen::Index dim = Eigen::Index{1} << (l + copies);
  const std::uint64_t target_mask = (std::uint64_t{1} << copies) - 1;
  CMatrix u = CMatrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const auto ux = static_cast<std::uint64_t>(x);
    const int z = static_cast<int>(ux >> copies);
    const std::uint64_t t = ux & target_mask;
    const std::uint64_t t_out = z < copies ? shift_targets(t, copies, z) : t;
    u(static_cast<Eigen::Index>((ux & ~target_mask) | t_out), x) = 1.0;
  }
  return u;
}

// ---------------------------------------------------------------------------
// GateList

namespace {

int group_of(const Gate& gate, int width, int num_labels) {
  if (gate.ancillas.size() != static_cast<std::size_t>(width) || width == 0) {
    throw std::invalid_argument("ancilla group must have exactly l = " + std::to_string(width) + " qubits");
  }
  const int first = gate.ancillas.front();
  if (first < 0 || first % width != 0 || first / width >= num_labels) {
    throw std::invalid_argument("ancilla group does not start at a group boundary");
  }
  for (int i = 0; i < width; ++i) {
    if (gate.ancillas[static_cast<std::size_t>(i)] != first + i) {
      throw std::invalid_argument("ancilla group qubits must be consecutive");
    }
  }
  return first / width;
}

const char* kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kFb: return "FB";
    case GateKind::kFbDagger: return "FBD";
    case GateKind::kCcp: return "CCP";
    case GateKind::kMeasure: return "MEAS";
  }
  return "?";
}

}  // namespace

void GateList::validate() const {
  if (num_labels < 1) throw std::invalid_argument("gate list needs n >= 1");
  if (width != ancilla_width(copies)) {
    throw std::invalid_argument("ancilla width l must equal ceil(log2 K)");
  }
  static constexpr GateKind kOrder[] = {GateKind::kFb, GateKind::kCcp, GateKind::kFbDagger,
                                        GateKind::kMeasure};
  std::vector<int> stage(static_cast<std::size_t>(num_labels), 0);
  std::vector<int> controlled(static_cast<std::size_t>(num_labels), 0);
  for (const Gate& gate : gates) {
    const int g = group_of(gate, width, num_labels);
    int& st = stage[static_cast<std::size_t>(g)];
    if (st >= 4 || kOrder[st] != gate.kind) {
      throw std::invalid_argument(std::string("unexpected ") + kind_name(gate.kind) + " on ancilla group " +
                                  std::to_string(g) + "; each group runs FB, CCP, FBD, MEAS");
    }
    ++st;
    if (gate.kind == GateKind::kCcp) {
      if (gate.copies != copies) throw std::invalid_argument("CCP copy count differs from K");
      if (gate.label < 0 || gate.label >= num_labels) {
        throw std::invalid_argument("CCP label " + std::to_string(gate.label) + " out of range");
      }
      ++controlled[static_cast<std::size_t>(gate.label)];
    }
  }
  for (int g = 0; g < num_labels; ++g) {
    if (stage[static_cast<std::size_t>(g)] != 4) {
      throw std::invalid_argument("ancilla group " + std::to_string(g) + " is incomplete");
    }
    if (controlled[static_cast<std::size_t>(g)] != 1) {
      throw std::invalid_argument("label " + std::to_string(g) + " must be controlled exactly once");
    }
  }
}

GateList compile_circuit(int num_labels, int copies) {
  if (num_labels < 1) throw std::invalid_argument("qubit count n must be >= 1");
  require_prime_order(copies);
  GateList out{num_labels, copies, ancilla_width(copies), {}};
  for (int g = 0; g < num_labels; ++g) {
    std::vector<int> anc;
    for (int i = 0; i < out.width; ++i) anc.push_back(g * out.width + i);
    out.gates.push_back({GateKind::kFb, anc});
    out.gates.push_back({GateKind::kCcp, anc, g, copies});
    out.gates.push_back({GateKind::kFbDagger, anc});
    out.gates.push_back({GateKind::kMeasure, anc});
  }
  return out;
}

std::string serialize_gatelist(const GateList& gates) {
  std::ostringstream out;
  out << "GCE-CIRCUIT v1 n=" << gates.num_labels << " K=" << gates.copies << " l=" << gates.width << '\n';
  for (const Gate& gate : gates.gates) {
    out << kind_name(gate.kind) << " anc=";
    for (std::size_t i = 0; i < gate.ancillas.size(); ++i) {
      if (i) out << ',';
      out << gate.ancillas[i];
    }
    if (gate.kind == GateKind::kCcp) out << " label=" << gate.label << " copies=" << gate.copies;
    out << '\n';
  }
  return out.str();
}

namespace {

int parse_int(std::string_view text, int line_no, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": malformed " + std::string(what) + " '" +
                     std::string(text) + "'");
  }
  return value;
}

// key=value tokens of one line, in order, after the leading word.
std::vector<std::pair<std::string, std::string>> key_values(std::istringstream& in, int line_no) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("line " + std::to_string(line_no) + ": expected key=value, got '" + token + "'");
    }
    out.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  return out;
}

}  // namespace

GateList parse_gatelist(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  GateList out;
  bool have_header = false;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream in(line);
    std::string word;
    in >> word;
    if (!have_header) {
      std::string version;
      in >> version;
      if (word != "GCE-CIRCUIT" || version != "v1") {
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'GCE-CIRCUIT v1'");
      }
      std::map<std::string, int> fields;
      for (const auto& [k, v] : key_values(in, line_no)) fields[k] = parse_int(v, line_no, k);
      for (const char* key : {"n", "K", "l"}) {
        if (!fields.count(key)) {
          throw ParseError("line " + std::to_string(line_no) + ": header is missing " + key + "=");
        }
      }
      out.num_labels = fields["n"];
      out.copies = fields["K"];
      out.width = fields["l"];
      have_header = true;
      continue;
    }
    Gate gate{};
    if (word == "FB") gate.kind = GateKind::kFb;
    else if (word == "FBD") gate.kind = GateKind::kFbDagger;
    else if (word == "CCP") gate.kind = GateKind::kCcp;
    else if (word == "MEAS") gate.kind = GateKind::kMeasure;
    else throw ParseError("line " + std::to_string(line_no) + ": unknown gate '" + word + "'");
    bool have_anc = false;
    for (const auto& [k, v] : key_values(in, line_no)) {
      if (k == "anc") {
        std::string_view rest = v;
        while (true) {
          const auto comma = rest.find(',');
          gate.ancillas.push_back(parse_int(rest.substr(0, comma), line_no, "ancilla index"));
          if (comma == std::string_view::npos) break;
          rest.remove_prefix(comma + 1);
        }
        have_anc = true;
      } else if (k == "label" && gate.kind == GateKind::kCcp) {
        gate.label = parse_int(v, line_no, "label");
      } else if (k == "copies" && gate.kind == GateKind::kCcp) {
        gate.copies = parse_int(v, line_no, "copies");
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unexpected field '" + k + "' for " + word);
      }
    }
    if (!have_anc) throw ParseError("line " + std::to_string(line_no) + ": missing anc=");
    if (gate.kind == GateKind::kCcp && (gate.label < 0 || gate.copies == 0)) {
      throw ParseError("line " + std::to_string(line_no) + ": CCP needs label= and copies=");
    }
    out.gates.push_back(std::move(gate));
  }
  if (!have_header) throw ParseError("empty gate list");
  try {
    out.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid gate list: ") + e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simulation

namespace {

void apply_group_matrix(CVector& state, int total, const std::vector<int>& qubits, const CMatrix& m) {
  const int width = static_cast<int>(qubits.size());
  const std::uint64_t local_dim = std::uint64_t{1} << width;
  std::vector<std::uint64_t> offsets(local_dim, 0);
  std::uint64_t group_mask = 0;
  for (std::uint64_t v = 0; v < local_dim; ++v) {
    for (int i = 0; i < width; ++i) {
      if ((v >> (width - 1 - i)) & 1U) offsets[v] |= std::uint64_t{1} << (total - 1 - qubits[static_cast<std::size_t>(i)]);
    }
  }
  group_mask = offsets[local_dim - 1];
  CVector in(static_cast<Eigen::Index>(local_dim));
  const auto dim = static_cast<std::uint64_t>(state.size());
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & group_mask) continue;
    for (std::uint64_t v = 0; v < local_dim; ++v) in[static_cast<Eigen::Index>(v)] = state[static_cast<Eigen::Index>(base | offsets[v])];
    const CVector out = m * in;
    for (std::uint64_t v = 0; v < local_dim; ++v) state[static_cast<Eigen::Index>(base | offsets[v])] = out[static_cast<Eigen::Index>(v)];
  }
}

void apply_ccp(CVector& state, int total, const GateList& gates, const Gate& gate) {
  const int k = gates.copies;
  const int n = gates.num_labels;
  const int l = gates.width;
  auto bit_of = [&](int qubit) { return total - 1 - qubit; };
  std::vector<int> target_bits(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    target_bits[static_cast<std::size_t>(c)] = bit_of(n * l + c * n + gate.label);
  }
  const int anc_low_bit = bit_of(gate.ancillas.back());
  const std::uint64_t anc_mask = (std::uint64_t{1} << l) - 1;
  const auto dim = static_cast<std::uint64_t>(state.size());
  CVector out(state.size());
  for (std::uint64_t x = 0; x < dim; ++x) {
    const int z = static_cast<int>((x >> anc_low_bit) & anc_mask);
    std::uint64_t y = x;
    if (z != 0 && z < k) {
      for (int c = 0; c < k; ++c) y &= ~(std::uint64_t{1} << target_bits[static_cast<std::size_t>(c)]);
      // Output target j holds input target j+z.
      for (int j = 0; j < k; ++j) {
        const int src = (j + z) % k;
        if ((x >> target_bits[static_cast<std::size_t>(src)]) & 1U) {
          y |= std::uint64_t{1} << target_bits[static_cast<std::size_t>(j)];
        }
      }
    }
    out[static_cast<Eigen::Index>(y)] = state[static_cast<Eigen::Index>(x)];
  }
  state = std::move(out);
}

}  // namespace

CircuitResult run_gatelist(const GateList& gates, const PureState& psi) {
  gates.validate();
  require_prime_order(gates.copies);
  const int n = gates.num_labels;
  const int k = gates.copies;
  const int l = gates.width;
  if (psi.num_qubits() != n) {
    throw std::invalid_argument("state has " + std::to_string(psi.num_qubits()) +
                                " qubits but the circuit expects " + std::to_string(n));
  }
  const int total = n * l + n * k;
  if (total > kMaxCircuitQubits) {
    throw ResourceLimitError("circuit needs " + std::to_string(total) + " qubits; the simulator guard is " +
                             std::to_string(kMaxCircuitQubits));
  }

  // |0...0>_anc (x) |psi>^{(x)K}: the ancilla bits are the high bits, so the
  // joint vector starts with the data block.
  CVector data = psi.amplitudes();
  for (int c = 1; c < k; ++c) {
    CVector next(data.size() * psi.amplitudes().size());
    for (Eigen::Index a = 0; a < data.size(); ++a) {
      next.segment(a * psi.amplitudes().size(), psi.amplitudes().size()) = data[a] * psi.amplitudes();
    }
    data = std::move(next);
  }
  CVector state = CVector::Zero(Eigen::Index{1} << total);
  state.head(data.size()) = data;

  const CMatrix fb = fb_matrix(k).matrix;
  const CMatrix fbd = fb.adjoint();
  for (const Gate& gate : gates.gates) {
    switch (gate.kind) {
      case GateKind::kFb: apply_group_matrix(state, total, gate.ancillas, fb); break;
      case GateKind::kFbDagger: apply_group_matrix(state, total, gate.ancillas, fbd); break;
      case GateKind::kCcp: apply_ccp(state, total, gates, gate); break;
      case GateKind::kMeasure: break;  // deferred: no later gate touches a measured group
    }
  }

  const std::uint64_t data_dim = std::uint64_t{1} << (n * k);
  const std::uint64_t num_readings = std::uint64_t{1} << (n * l);
  CircuitResult result{n, k, l, std::vector<double>(num_readings, 0.0), 0.0};
  for (std::uint64_t a = 0; a < num_readings; ++a) {
    result.readings[a] = state.segment(static_cast<Eigen::Index>(a * data_dim), static_cast<Eigen::Index>(data_dim)).squaredNorm();
    for (int g = 0; g < n; ++g) {
      const auto value = (a >> (l * (n - 1 - g))) & ((std::uint64_t{1} << l) - 1);
      if (value >= static_cast<std::uint64_t>(k)) {
        result.overflow_mass += result.readings[a];
        break;
      }
    }
  }
  return result;
}

ProbabilityTable CircuitResult::table(const GateList& gates) const {
  if (overflow_mass > 1e-10) {
    throw std::runtime_error("ancilla readings >= K carry probability " + std::to_string(overflow_mass));
  }
  // label_group[j]: ancilla group whose CCP acts on label j.
  std::vector<int> label_group(static_cast<std::size_t>(num_labels), -1);
  for (const Gate& gate : gates.gates) {
    if (gate.kind == GateKind::kCcp) {
      label_group[static_cast<std::size_t>(gate.label)] = gate.ancillas.front() / width;
    }
  }
  std::vector<ProbabilityTable::Entry> entries;
  const std::uint64_t group_mask = (std::uint64_t{1} << width) - 1;
  for (std::uint64_t a = 0; a < readings.size(); ++a) {
    std::vector<int> digits(static_cast<std::size_t>(num_labels));
    bool in_range = true;
    for (int j = 0; j < num_labels && in_range; ++j) {
      const int g = label_group[static_cast<std::size_t>(j)];
      const auto value = (a >> (width * (num_labels - 1 - g))) & group_mask;
      in_range = value < static_cast<std::uint64_t>(copies);
      digits[static_cast<std::size_t>(j)] = static_cast<int>(value);
    }
    if (!in_range) continue;
    entries.push_back({DigitString(copies, std::move(digits)), readings[a]});
  }
  return ProbabilityTable(copies, num_labels, std::move(entries));
}

ProbabilityTable simulate_gatelist(const GateList& gates, const PureState& psi) {
  return run_gatelist(gates, psi).table(gates);
}

std::vector<std::pair<int, int>> decompose_derangement_to_swaps(int copies) {
  if (copies < 2) throw std::invalid_argument("copy count K must be >= 2");
  std::vector<std::pair<int, int>> swaps;
  for (int i = 0; i + 1 < copies; ++i) swaps.emplace_back(i, i + 1);
  return swaps;
}

}  // namespace gcelab
