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

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gcelab/concentration.hpp"
#include "gcelab/conjecture_lab.hpp"
#include "gcelab/errors.hpp"
#include "gcelab/gce_oracle.hpp"
#include "gcelab/io.hpp"
#include "gcelab/permutation_test.hpp"
#include "gcelab/qubit_compiler.hpp"
#include "gcelab/robustness.hpp"
#include "gcelab/states.hpp"

namespace gcelab::cli {

using nlohmann::json;

namespace {

// Seed streams split off the single --seed.
enum Stream : std::uint64_t {
  kStateStream = 1,
  kShotStream = 2,
  kConcentrationStream = 3,
};

// Named families with closed forms are evaluated from the closed form alone
// above this size.
constexpr int kDenseFamilyLimit = 20;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("'" + s + "' is not a number");
  }
  if (used != s.size()) throw std::invalid_argument("'" + s + "' is not a number");
  return v;
}

int to_int(const std::string& s) {
  const double v = to_real(s);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw std::invalid_argument("'" + s + "' is not an integer");
  return static_cast<int>(v);
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("range must be start:stop[:step]");
    const double start = to_real(parts[0]);
    const double stop = to_real(parts[1]);
    const double step = parts.size() == 3 ? to_real(parts[2]) : 1.0;
    if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
    std::vector<double> out;
    for (long long i = 0;; ++i) {
      const double v = start + static_cast<double>(i) * step;
      if (v >= stop - 1e-9 * step) break;
      out.push_back(v);
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(to_real(p));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("range must be start:stop[:step]");
    const int start = to_int(parts[0]);
    const int stop = to_int(parts[1]);
    const int step = parts.size() == 3 ? to_int(parts[2]) : 1;
    if (step <= 0) throw std::invalid_argument("range step must be positive");
    for (int v = start; v < stop; v += step) out.push_back(v);
    return out;
  }
  for (const auto& p : split(text, ',')) out.push_back(to_int(p));
  return out;
}

namespace {

SubsetLabel parse_subset(const std::string& text, int n) {
  if (text.empty() || text == "all") return SubsetLabel::all(n);
  auto labels = parse_int_list(text);
  SubsetLabel s = SubsetLabel::from_unsorted(std::move(labels));
  s.check_valid_for(n);
  return s;
}

json subset_json(const SubsetLabel& s) { return json(s.indices()); }

/// ostream for --output; "-" or empty means the command's stdout.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct StateOptions {
  std::string family;
  std::string path;
  int n = 0;
  double mu = 0.0;
};

void add_state_options(CLI::App* cmd, StateOptions& o, const std::string& default_family) {
  o.family = default_family;
  cmd->add_option("--family", o.family, "named state: ghz, w, spin-squeezed, haar, product")
      ->check(CLI::IsMember({"ghz", "w", "spin-squeezed", "haar", "product"}));
  cmd->add_option("--state", o.path, "statevector JSON file (overrides --family)");
  cmd->add_option("--n", o.n, "qubit count for --family");
  cmd->add_option("--mu", o.mu, "interaction strength of the spin-squeezed family");
}

PureState load_state(const StateOptions& o, std::uint64_t seed) {
  if (!o.path.empty()) return read_statevector_file(o.path);
  if (o.n < 1) throw std::invalid_argument("--n is required with --family");
  if (o.family == "ghz") return ghz_state(o.n);
  if (o.family == "w") return w_state(o.n);
  if (o.family == "spin-squeezed") return spin_squeezed_state(o.n, o.mu);
  if (o.family == "product") return random_product_state(o.n, derive_seed(seed, {kStateStream}));
  return haar_random_state(o.n, derive_seed(seed, {kStateStream}));
}

std::string state_label(const StateOptions& o) { return o.path.empty() ? o.family : o.path; }

int require_integer_order(double k) {
  if (k != std::floor(k) || k < 2 || k > 64) {
    throw std::invalid_argument("K must be an integer in [2, 64] for circuits");
  }
  return static_cast<int>(k);
}

// ---------------------------------------------------------------------------

struct GceCmd {
  StateOptions state;
  std::string subset;
  double order = 2.0;
};

int cmd_gce(const GceCmd& c, std::uint64_t seed, std::ostream& out) {
  if (!(c.order > 1.0)) throw std::invalid_argument("--k must be > 1");
  json j;
  std::optional<double> closed;
  const bool named = c.state.path.empty();
  const int n = named ? c.state.n : 0;
  std::optional<PureState> psi;
  if (!named || n <= kDenseFamilyLimit || (c.state.family != "ghz" && c.state.family != "w" &&
                                           c.state.family != "spin-squeezed")) {
    psi = load_state(c.state, seed);
  }
  const int nq = psi ? psi->num_qubits() : n;
  if (nq < 1) throw std::invalid_argument("--n is required with --family");
  const SubsetLabel s = parse_subset(c.subset, nq);
  const int m = static_cast<int>(s.size());
  if (named) {
    if (c.state.family == "ghz") closed = gce_ghz_closed_form(nq, m, c.order);
    else if (c.state.family == "w") closed = gce_w_closed_form(nq, m, c.order);
    else if (c.state.family == "spin-squeezed") closed = gce_spin_squeezed(SqueezingParams(nq, c.state.mu), m, c.order);
    else if (c.state.family == "product") closed = 0.0;
  }
  j["state"] = state_label(c.state);
  j["n"] = nq;
  j["K"] = c.order;
  j["s"] = subset_json(s);
  if (psi) {
    const double value = gce(*psi, GceParams(c.order, s));
    j["gce"] = value;
    j["method"] = "statevector";
    if (closed) {
      j["closed_form"] = *closed;
      j["abs_diff"] = std::abs(value - *closed);
    }
  } else {
    j["gce"] = *closed;
    j["method"] = "closed-form";
    j["closed_form"] = *closed;
  }
  out << j.dump(2) << '\n';
  return kOk;
}

struct EstimateCmd {
  StateOptions state;
  std::string subset;
  double order = 3.0;
  bool order_given = false;
  std::uint64_t shots = 0;
  std::string table_path = "pz_table.csv";
  std::string circuit_path;
  bool allow_large = false;
};

int cmd_estimate(const EstimateCmd& c, std::uint64_t seed, std::ostream& out) {
  std::optional<GateList> circuit;
  int k = 0;
  if (!c.circuit_path.empty()) {
    std::ifstream in(c.circuit_path);
    if (!in) throw ParseError("cannot open gate list '" + c.circuit_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    circuit = parse_gatelist(buf.str());
    k = circuit->copies;
    if (c.order_given && require_integer_order(c.order) != k) {
      throw std::invalid_argument("--k differs from the circuit's K");
    }
  } else {
    k = require_integer_order(c.order);
  }
  require_prime_order(k);

  StateOptions so = c.state;
  if (circuit && so.path.empty() && so.n == 0) so.n = circuit->num_labels;
  if (so.path.empty() && so.n == 0) so.n = 2;
  const PureState psi = load_state(so, seed);
  const SubsetLabel s = parse_subset(c.subset, psi.num_qubits());
  const GceParams params(k, s);

  TableOptions topt;
  topt.allow_large = c.allow_large;
  const ProbabilityTable kraus = exact_probability_table(psi, k, topt);
  std::optional<ProbabilityTable> exact_table;
  json j;
  if (circuit) {
    exact_table = simulate_gatelist(*circuit, psi);
    j["source"] = "circuit";
    j["circuit_vs_kraus_tv"] = total_variation(*exact_table, kraus);
  } else {
    exact_table = kraus;
    j["source"] = "kraus";
  }
  const ProbabilityTable used =
      c.shots == 0 ? *exact_table : sample_table(*exact_table, c.shots, derive_seed(seed, {kShotStream}));
  const double exact = gce(psi, params);
  const GceEstimate est = estimate_gce(used, params);
  {
    Output table(c.table_path, out);
    used.write_csv(*table);
  }
  j["state"] = state_label(so);
  j["n"] = psi.num_qubits();
  j["K"] = k;
  j["s"] = subset_json(s);
  j["shots"] = c.shots;
  j["exact"] = exact;
  j["estimated"] = est.from_zero_residue;
  j["estimated_nonzero_residue"] = est.from_nonzero_residue;
  j["abs_error"] = std::abs(est.from_zero_residue - exact);
  j["table_path"] = c.table_path;
  out << j.dump(2) << '\n';
  return kOk;
}

struct ConcentrateCmd {
  StateOptions state;
  int samples = 1;
  int label = 0;
  std::string format = "json";
  std::string output;
};

int cmd_concentrate(const ConcentrateCmd& c, std::uint64_t seed, std::ostream& out) {
  struct Row {
    int index;
    ConcentrationReport report;
  };
  std::vector<Row> rows;
  const bool entangled = !c.state.path.empty() || !c.state.family.empty();
  if (entangled) {
    const PureState psi = load_state(c.state, seed);
    for (const auto& r : concentrate_entangled(psi, c.label)) rows.push_back({0, r});
  } else {
    if (c.samples < 0) throw std::invalid_argument("--samples must be >= 0");
    for (int i = 0; i < c.samples; ++i) {
      Rng rng(derive_seed(seed, {kConcentrationStream, static_cast<std::uint64_t>(i)}));
      for (const auto& r : concentrate(ConcentrationInput::random(rng))) rows.push_back({i, r});
    }
  }
  Output dest(c.output, out);
  if (c.format == "csv") {
    *dest << "input_index,outcome,probability,fidelity_before,fidelity_after,theta,lambda\n";
    for (const auto& r : rows) {
      *dest << r.index << ',' << r.report.outcome << ',' << format_double(r.report.probability) << ','
            << format_double(r.report.fidelity_before) << ',' << format_double(r.report.fidelity_after) << ','
            << format_double(r.report.theta) << ',' << format_double(r.report.lambda) << '\n';
    }
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"input_index", r.index},
                     {"outcome", r.report.outcome},
                     {"probability", r.report.probability},
                     {"fidelity_before", r.report.fidelity_before},
                     {"fidelity_after", r.report.fidelity_after},
                     {"theta", r.report.theta},
                     {"lambda", r.report.lambda}});
    }
    *dest << arr.dump(2) << '\n';
  }
  return kOk;
}

struct RobustnessCmd {
  std::string n = "3,4";
  std::string k = "2,3";
  std::string scenarios = "all,one";
  std::string eps = "0.05";
  int subset_size = 2;
  int samples = 200;
  std::string output = "robustness.csv";
};

int cmd_robustness(const RobustnessCmd& c, std::uint64_t seed, int threads, std::ostream& out) {
  RobustnessConfig cfg;
  cfg.num_qubits = parse_int_list(c.n);
  cfg.copies = parse_int_list(c.k);
  for (const auto& name : split(c.scenarios, ',')) {
    for (double e : parse_real_list(c.eps)) cfg.cases.push_back({parse_scenario(name), e});
  }
  cfg.subset_size = c.subset_size;
  cfg.samples = c.samples;
  cfg.seed = seed;
  cfg.threads = threads;
  const auto rows = robustness_sweep(cfg);
  {
    Output dest(c.output, out);
    write_robustness_csv(*dest, rows);
  }
  if (c.output.empty() || c.output == "-") return kOk;
  json cells = json::array();
  for (const auto& s : summarize(rows)) {
    cells.push_back({{"n", s.n},
                     {"K", s.copies},
                     {"s_size", s.subset_size},
                     {"scenario", scenario_name(s.scenario)},
                     {"epsilon", s.epsilon},
                     {"samples", s.samples},
                     {"mean_error", s.mean_error},
                     {"max_error", s.max_error},
                     {"bound", s.bound}});
  }
  out << json{{"rows", rows.size()}, {"output", c.output}, {"cells", cells}}.dump(2) << '\n';
  return kOk;
}

struct ConjecturesCmd {
  std::string n = "5,6";
  std::string k = "1.2,1.8,3,5";
  int samples = 1000;
  std::string mono_sub = "0,1,2";
  std::string mono_super = "0,1,2,3";
  std::string subadd_left = "0,1";
  std::string subadd_right = "2,3";
  bool no_q = false;
  bool no_nsssa = false;
  std::string output = "conjectures.csv";
  std::string dump_dir = "counterexamples";
};

int cmd_conjectures(const ConjecturesCmd& c, std::uint64_t seed, int threads, std::ostream& out) {
  ConjectureConfig cfg;
  cfg.num_qubits = parse_int_list(c.n);
  cfg.orders = parse_real_list(c.k);
  cfg.samples = c.samples;
  auto subset = [](const std::string& t) { return SubsetLabel::from_unsorted(parse_int_list(t)); };
  cfg.monotone_sub = subset(c.mono_sub);
  cfg.monotone_super = subset(c.mono_super);
  cfg.subadd_left = subset(c.subadd_left);
  cfg.subadd_right = subset(c.subadd_right);
  cfg.include_q = !c.no_q;
  cfg.include_nsssa = !c.no_nsssa;
  cfg.seed = seed;
  cfg.threads = threads;
  const auto report = conjecture_sweep(cfg);
  {
    Output dest(c.output, out);
    write_conjecture_csv(*dest, report.rows);
  }
  json cands = json::array();
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    const auto& cand = report.candidates[i];
    std::filesystem::create_directories(c.dump_dir);
    const std::string path = (std::filesystem::path(c.dump_dir) / ("candidate_" + std::to_string(i) + ".json")).string();
    std::ofstream(path) << cand.state_json << '\n';
    cands.push_back({{"conjecture", cand.row.conjecture},
                     {"n", cand.row.n},
                     {"K", cand.row.order},
                     {"sample_index", cand.row.sample_index},
                     {"difference", cand.row.difference},
                     {"extended_difference", static_cast<double>(cand.extended_difference)},
                     {"confirmed", cand.confirmed},
                     {"state_path", path}});
  }
  json minima = json::object();
  for (const auto& r : report.rows) {
    if (!minima.contains(r.conjecture) || r.difference < minima[r.conjecture].get<double>()) {
      minima[r.conjecture] = r.difference;
    }
  }
  if (c.output.empty() || c.output == "-") {
    for (const auto& cand : cands) out << "# candidate " << cand.dump() << '\n';
    return kOk;
  }
  out << json{{"rows", report.rows.size()},
              {"output", c.output},
              {"min_difference", minima},
              {"max_odd_q", report.max_odd_q},
              {"max_nsssa_identity_residue", report.max_nsssa_identity_residue},
              {"candidates", cands}}
                 .dump(2)
      << '\n';
  return kOk;
}

struct CompileCmd {
  int n = 1;
  int k = 2;
  std::string output;
};

int cmd_compile(const CompileCmd& c, std::ostream& out) {
  const GateList gates = compile_circuit(c.n, c.k);
  Output dest(c.output, out);
  *dest << serialize_gatelist(gates);
  return kOk;
}

struct ExamplesCmd {
  std::string figure = "spin";
  std::string n;
  std::string k = "2,3,5";
  std::string mu = "0:3.2:0.05";
  std::string output;
};

int cmd_examples(const ExamplesCmd& c, std::ostream& out) {
  const auto orders = parse_real_list(c.k);
  for (double k : orders) {
    if (!(k > 1.0)) throw std::invalid_argument("every K must be > 1");
  }
  Output dest(c.output, out);
  if (c.figure == "spin") {
    const auto ns = parse_int_list(c.n.empty() ? "40" : c.n);
    const auto mus = parse_real_list(c.mu);
    *dest << "n,K,mu,s_size,gce\n";
    for (int n : ns) {
      for (double k : orders) {
        for (double mu : mus) {
          *dest << n << ',' << format_double(k) << ',' << format_double(mu) << ',' << n << ','
                << format_double(gce_spin_squeezed(SqueezingParams(n, mu), n, k)) << '\n';
        }
      }
    }
  } else {
    const auto ns = parse_int_list(c.n.empty() ? "3:9" : c.n);
    *dest << "n,s_size,K,ghz,w,difference\n";
    for (int n : ns) {
      for (int m = 1; m <= n; ++m) {
        for (double k : orders) {
          const double g = gce_ghz_closed_form(n, m, k);
          const double w = gce_w_closed_form(n, m, k);
          *dest << n << ',' << m << ',' << format_double(k) << ',' << format_double(g) << ',' << format_double(w)
                << ',' << format_double(g - w) << '\n';
        }
      }
    }
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized concentratable entanglement laboratory"};
  app.name(args.empty() ? "gcelab" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  int threads = 1;
  app.add_option("--seed", seed, "master seed; every random stream is split from it");
  app.add_option("--threads", threads, "worker threads for sweeps (0 = all cores)");

  GceCmd gce_c;
  auto* gce_cmd = app.add_subcommand("gce", "exact GCE of a state");
  add_state_options(gce_cmd, gce_c.state, "haar");
  gce_cmd->add_option("--s", gce_c.subset, "measured labels, e.g. 0,1,2 (default: all)");
  gce_cmd->add_option("--k", gce_c.order, "order K > 1 (real)");

  EstimateCmd est_c;
  auto* est_cmd = app.add_subcommand("estimate", "estimate GCE from the permutation-test distribution");
  add_state_options(est_cmd, est_c.state, "haar");
  est_cmd->add_option("--s", est_c.subset, "measured labels (default: all)");
  auto* k_opt = est_cmd->add_option("--k", est_c.order, "prime copy count K");
  est_cmd->add_option("--shots", est_c.shots, "measurement shots (0 = exact distribution)");
  est_cmd->add_option("--table", est_c.table_path, "where to write the p(z) CSV");
  est_cmd->add_option("--circuit", est_c.circuit_path, "gate list to simulate instead of the Kraus path");
  est_cmd->add_flag("--allow-large", est_c.allow_large, "lift the K*n <= 24 guard");

  ConcentrateCmd con_c;
  auto* con_cmd = app.add_subcommand("concentrate", "K = 3 W-state concentration");
  add_state_options(con_cmd, con_c.state, "");
  con_cmd->add_option("--samples", con_c.samples, "random product inputs");
  con_cmd->add_option("--label", con_c.label, "label tested on an entangled input");
  con_cmd->add_option("--format", con_c.format)->check(CLI::IsMember({"json", "csv"}));
  con_cmd->add_option("-o,--output", con_c.output);

  RobustnessCmd rob_c;
  auto* rob_cmd = app.add_subcommand("robustness", "error of the estimate with imperfect copies");
  rob_cmd->add_option("--n", rob_c.n, "qubit counts (list or range)");
  rob_cmd->add_option("--k", rob_c.k, "prime copy counts");
  rob_cmd->add_option("--scenario", rob_c.scenarios, "all-noisy and/or one-noisy");
  rob_cmd->add_option("--eps", rob_c.eps, "trace distances (list or range)");
  rob_cmd->add_option("--s-size", rob_c.subset_size, "|s|, with s = {0, ..., |s|-1}");
  rob_cmd->add_option("--samples", rob_c.samples, "Haar samples per cell");
  rob_cmd->add_option("-o,--output", rob_c.output, "CSV path ('-' for stdout)");

  ConjecturesCmd cj_c;
  auto* cj_cmd = app.add_subcommand("conjectures", "Haar sweeps of the GCE inequalities");
  cj_cmd->add_option("--n", cj_c.n, "qubit counts");
  cj_cmd->add_option("--k", cj_c.k, "orders K > 1");
  cj_cmd->add_option("--samples", cj_c.samples, "Haar samples per (n, K)");
  cj_cmd->add_option("--mono-sub", cj_c.mono_sub);
  cj_cmd->add_option("--mono-super", cj_c.mono_super);
  cj_cmd->add_option("--subadd-left", cj_c.subadd_left);
  cj_cmd->add_option("--subadd-right", cj_c.subadd_right);
  cj_cmd->add_flag("--no-q", cj_c.no_q, "skip q(z)");
  cj_cmd->add_flag("--no-nsssa", cj_c.no_nsssa, "skip NSSSA");
  cj_cmd->add_option("-o,--output", cj_c.output, "CSV path ('-' for stdout)");
  cj_cmd->add_option("--dump-dir", cj_c.dump_dir, "directory for counterexample states");

  CompileCmd cc_c;
  auto* cc_cmd = app.add_subcommand("compile", "qubit-only gate list of the permutation test");
  cc_cmd->add_option("--n", cc_c.n, "qubit count of the input state")->required();
  cc_cmd->add_option("--k", cc_c.k, "prime copy count")->required();
  cc_cmd->add_option("-o,--output", cc_c.output, "gate-list path (default stdout)");

  ExamplesCmd ex_c;
  auto* ex_cmd = app.add_subcommand("examples", "closed-form example curves");
  ex_cmd->add_option("--figure", ex_c.figure)->check(CLI::IsMember({"spin", "ghz-w"}));
  ex_cmd->add_option("--n", ex_c.n, "qubit counts (spin: 40, ghz-w: 3:9)");
  ex_cmd->add_option("--k", ex_c.k, "orders K > 1");
  ex_cmd->add_option("--mu", ex_c.mu, "mu values for the spin figure");
  ex_cmd->add_option("-o,--output", ex_c.output, "CSV path (default stdout)");

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gce_cmd) return cmd_gce(gce_c, seed, out);
    if (*est_cmd) {
      est_c.order_given = k_opt->count() > 0;
      return cmd_estimate(est_c, seed, out);
    }
    if (*con_cmd) return cmd_concentrate(con_c, seed, out);
    if (*rob_cmd) return cmd_robustness(rob_c, seed, threads, out);
    if (*cj_cmd) return cmd_conjectures(cj_c, seed, threads, out);
    if (*cc_cmd) return cmd_compile(cc_c, out);
    if (*ex_cmd) return cmd_examples(ex_c, out);
  } catch (const UnsupportedOrderError& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupportedOrder;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gcelab::cli
