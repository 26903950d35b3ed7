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

#include "gcelab/conjecture_lab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "gcelab/io.hpp"
#include "gcelab/parallel.hpp"

namespace gcelab {

namespace {

void require_subset(const SubsetLabel& sub, const SubsetLabel& s) {
  if ((sub.mask() & ~s.mask()) != 0) throw std::invalid_argument("s' is not a subset of s");
}

SubsetLabel set_union(const SubsetLabel& a, const SubsetLabel& b) {
  return SubsetLabel::from_mask(a.mask() | b.mask());
}

// Tr(rho_alpha^K) for every alpha subset of {0..n-1}, indexed by the mask
// with bit q for qubit q.
std::vector<double> all_trace_powers(const PureState& psi, double order) {
  return subset_trace_powers(psi, SubsetLabel::all(psi.num_qubits()), order);
}

double gce_from_table(const std::vector<double>& traces, std::uint64_t s_mask, double order) {
  double sum = 0.0;
  // Iterate all submasks of s_mask, including 0.
  for (std::uint64_t sub = s_mask;; sub = (sub - 1) & s_mask) {
    sum += traces[sub];
    if (sub == 0) break;
  }
  return (1.0 - std::ldexp(sum, -std::popcount(s_mask))) / (order - 1.0);
}

double q_from_table(const std::vector<double>& traces, std::uint64_t z_mask, int n) {
  double sum = 0.0;
  for (std::uint64_t alpha = 0; alpha < traces.size(); ++alpha) {
    sum += (std::popcount(alpha & z_mask) % 2 ? -1.0 : 1.0) * traces[alpha];
  }
  return std::ldexp(sum, -n);
}

double tsallis_from_trace(double tr, double order) { return (1.0 - tr) / (order - 1.0); }

void check_partition(int n, const SubsetLabel& a, int b, const SubsetLabel& c) {
  a.check_valid_for(n);
  c.check_valid_for(n);
  if (b < 0 || b >= n) throw std::invalid_argument("label b out of range");
  const std::uint64_t bm = std::uint64_t{1} << b;
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if ((a.mask() & bm) || (c.mask() & bm) || (a.mask() & c.mask()) || ((a.mask() | bm | c.mask()) != full)) {
    throw std::invalid_argument("A, {b}, C must partition the qubits");
  }
}

double nsssa_from_table(const std::vector<double>& traces, std::uint64_t a_mask, int b, std::uint64_t c_mask,
                        double order) {
  const std::uint64_t bm = std::uint64_t{1} << b;
  double sum = 0.0;
  for (std::uint64_t sub = a_mask;; sub = (sub - 1) & a_mask) {
    sum += tsallis_from_trace(traces[sub | bm | c_mask], order) + tsallis_from_trace(traces[sub], order) -
           tsallis_from_trace(traces[sub | bm], order) - tsallis_from_trace(traces[sub | c_mask], order);
    if (sub == 0) break;
  }
  return sum;
}

double nsssa_trace_from_table(const std::vector<double>& traces, std::uint64_t a_mask, int b, double order) {
  const std::uint64_t bm = std::uint64_t{1} << b;
  double sum = 0.0;
  for (std::uint64_t sub = a_mask;; sub = (sub - 1) & a_mask) {
    sum += traces[sub | bm] - traces[sub];
    if (sub == 0) break;
  }
  return 2.0 / (order - 1.0) * sum;
}

double nsssa_gce_from_table(const std::vector<double>& traces, std::uint64_t a_mask, int b, double order) {
  const std::uint64_t bm = std::uint64_t{1} << b;
  const double delta = gce_from_table(traces, a_mask | bm, order) - gce_from_table(traces, a_mask, order);
  return -std::ldexp(delta, std::popcount(a_mask) + 2);
}

std::string label_list(const SubsetLabel& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s.indices()[i]);
  }
  return out + "]";
}

}  // namespace

double conj_monotone_diff(const PureState& psi, const SubsetLabel& s_sub, const SubsetLabel& s, double order) {
  require_subset(s_sub, s);
  return gce(psi, GceParams(order, s)) - gce(psi, GceParams(order, s_sub));
}

double conj_subadd_diff(const PureState& psi, const SubsetLabel& s, const SubsetLabel& s2, double order) {
  if (s.mask() & s2.mask()) throw std::invalid_argument("subsets must be disjoint");
  return gce(psi, GceParams(order, s)) + gce(psi, GceParams(order, s2)) -
         gce(psi, GceParams(order, set_union(s, s2)));
}

double q_of_z(const PureState& psi, std::span<const int> z, int order) {
  const int n = psi.num_qubits();
  if (order < 2) throw std::invalid_argument("q(z) needs an integer K >= 2");
  if (static_cast<int>(z.size()) != n) throw std::invalid_argument("z must have one bit per qubit");
  std::uint64_t z_mask = 0;
  for (int q = 0; q < n; ++q) {
    const int bit = z[static_cast<std::size_t>(q)];
    if (bit != 0 && bit != 1) throw std::invalid_argument("z must be a binary string");
    if (bit) z_mask |= std::uint64_t{1} << q;
  }
  return q_from_table(all_trace_powers(psi, order), z_mask, n);
}

double nsssa_sum(const PureState& psi, const SubsetLabel& a, int b, const SubsetLabel& c, double order) {
  check_partition(psi.num_qubits(), a, b, c);
  return nsssa_from_table(all_trace_powers(psi, order), a.mask(), b, c.mask(), order);
}

double nsssa_trace_form(const PureState& psi, const SubsetLabel& a, int b, double order) {
  a.check_valid_for(psi.num_qubits());
  if (b < 0 || b >= psi.num_qubits() || a.contains(b)) throw std::invalid_argument("b must be a label outside A");
  double sum = 0.0;
  const std::uint64_t count = std::uint64_t{1} << a.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetLabel alpha = a.select(bits);
    std::vector<int> with_b = alpha.indices();
    with_b.push_back(b);
    sum += subset_trace_power(psi, SubsetLabel::from_unsorted(with_b), order) -
           subset_trace_power(psi, alpha, order);
  }
  return 2.0 / (order - 1.0) * sum;
}

double nsssa_gce_form(const PureState& psi, const SubsetLabel& a, int b, double order) {
  if (a.empty()) throw std::invalid_argument("A must be non-empty");
  std::vector<int> with_b = a.indices();
  with_b.push_back(b);
  const double delta =
      gce(psi, GceParams(order, SubsetLabel::from_unsorted(with_b))) - gce(psi, GceParams(order, a));
  return -std::ldexp(delta, static_cast<int>(a.size()) + 2);
}

// ---------------------------------------------------------------------------
// Sweep

namespace {

struct TaskResult {
  std::vector<ConjectureRow> rows;
  double max_odd_q = 0.0;
  double max_identity = 0.0;
};

long double extended_difference(const ConjectureRow& row, const PureState& psi, const ConjectureConfig& cfg) {
  const long double k = row.order;
  auto c = [&](const SubsetLabel& s) { return gce_extended(psi, GceParams(row.order, s)); };
  if (row.conjecture == "1.1") return c(cfg.monotone_super) - c(cfg.monotone_sub);
  if (row.conjecture == "1.2") {
    return c(cfg.subadd_left) + c(cfg.subadd_right) - c(set_union(cfg.subadd_left, cfg.subadd_right));
  }
  if (row.conjecture == "NSSSA") {
    return std::ldexp(c(cfg.monotone_super) - c(cfg.monotone_sub), static_cast<int>(cfg.monotone_sub.size()) + 2);
  }
  // q(z): minimum over even-parity z, in long double.
  const int n = psi.num_qubits();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<long double> traces(count);
  for (std::uint64_t m = 0; m < count; ++m) traces[m] = subset_trace_power_extended(psi, SubsetLabel::from_mask(m), k);
  long double best = std::numeric_limits<long double>::infinity();
  for (std::uint64_t z = 0; z < count; ++z) {
    if (std::popcount(z) % 2) continue;
    long double sum = 0.0L;
    for (std::uint64_t a = 0; a < count; ++a) sum += (std::popcount(a & z) % 2 ? -1.0L : 1.0L) * traces[a];
    best = std::min(best, std::ldexp(sum, -n));
  }
  return best;
}

}  // namespace

ConjectureReport conjecture_sweep(const ConjectureConfig& config) {
  if (config.samples < 0) throw std::invalid_argument("sample count must be >= 0");
  for (double k : config.orders) {
    if (!(k > 1.0) || !std::isfinite(k)) throw std::invalid_argument("every order K must be > 1");
  }
  require_subset(config.monotone_sub, config.monotone_super);
  if (config.subadd_left.mask() & config.subadd_right.mask()) {
    throw std::invalid_argument("subadditivity subsets must be disjoint");
  }
  const std::uint64_t extra = config.monotone_super.mask() & ~config.monotone_sub.mask();
  if (config.include_nsssa && std::popcount(extra) != 1) {
    throw std::invalid_argument("NSSSA needs the monotonicity subsets to differ by exactly one label");
  }
  const int b = config.include_nsssa ? std::countr_zero(extra) : -1;
  for (int n : config.num_qubits) {
    if (n < 1 || n > 20) throw std::invalid_argument("qubit count must lie in [1, 20]");
    config.monotone_super.check_valid_for(n);
    set_union(config.subadd_left, config.subadd_right).check_valid_for(n);
  }

  const std::string mono_text = label_list(config.monotone_sub) + "<=" + label_list(config.monotone_super);
  const std::string subadd_text = label_list(config.subadd_left) + "+" + label_list(config.subadd_right);

  struct Task {
    int n;
    double order;
    int sample;
  };
  std::vector<Task> tasks;
  for (int n : config.num_qubits) {
    for (double k : config.orders) {
      for (int i = 0; i < config.samples; ++i) tasks.push_back({n, k, i});
    }
  }
  std::vector<TaskResult> results(tasks.size());

  parallel_for(tasks.size(), config.threads, [&](std::size_t t) {
    const Task& task = tasks[t];
    const std::uint64_t seed =
        derive_seed(config.seed, {static_cast<std::uint64_t>(task.n), static_cast<std::uint64_t>(task.sample)});
    const PureState psi = haar_random_state(task.n, seed);
    const auto traces = all_trace_powers(psi, task.order);
    TaskResult& out = results[t];
    auto row = [&](const char* id, std::string subsets, double diff) {
      out.rows.push_back({id, task.n, task.order, std::move(subsets), task.sample, diff, seed});
    };

    const std::uint64_t sub = config.monotone_sub.mask();
    const std::uint64_t sup = config.monotone_super.mask();
    row("1.1", mono_text, gce_from_table(traces, sup, task.order) - gce_from_table(traces, sub, task.order));

    const std::uint64_t l = config.subadd_left.mask();
    const std::uint64_t r = config.subadd_right.mask();
    row("1.2", subadd_text,
        gce_from_table(traces, l, task.order) + gce_from_table(traces, r, task.order) -
            gce_from_table(traces, l | r, task.order));

    if (config.include_q && task.order == std::floor(task.order) && task.order >= 2.0) {
      double min_even = std::numeric_limits<double>::infinity();
      const std::uint64_t count = std::uint64_t{1} << task.n;
      for (std::uint64_t z = 0; z < count; ++z) {
        const double q = q_from_table(traces, z, task.n);
        if (std::popcount(z) % 2) {
          out.max_odd_q = std::max(out.max_odd_q, std::abs(q));
        } else {
          min_even = std::min(min_even, q);
        }
      }
      row("q(z)", "min-even-z", min_even);
    }

    if (config.include_nsssa) {
      const std::uint64_t full = (std::uint64_t{1} << task.n) - 1;
      const std::uint64_t c_mask = full & ~sup;
      const double sum = nsssa_from_table(traces, sub, b, c_mask, task.order);
      const double via_traces = nsssa_trace_from_table(traces, sub, b, task.order);
      const double via_gce = nsssa_gce_from_table(traces, sub, b, task.order);
      out.max_identity = std::max({out.max_identity, std::abs(sum - via_traces), std::abs(sum - via_gce)});
      row("NSSSA", "A=" + label_list(config.monotone_sub) + " b=" + std::to_string(b) + " C=" +
                       label_list(SubsetLabel::from_mask(c_mask)),
          -sum);
    }
    if (config.row_hook) {
      for (auto& rw : out.rows) config.row_hook(rw);
    }
  });

  ConjectureReport report;
  for (auto& res : results) {
    report.max_odd_q = std::max(report.max_odd_q, res.max_odd_q);
    report.max_nsssa_identity_residue = std::max(report.max_nsssa_identity_residue, res.max_identity);
    for (auto& rw : res.rows) {
      if (rw.difference < config.threshold || !std::isfinite(rw.difference)) {
        const PureState psi = haar_random_state(rw.n, rw.seed);
        const long double ext = extended_difference(rw, psi, config);
        report.candidates.push_back({rw, ext, ext < config.threshold, statevector_to_json(psi)});
      }
      report.rows.push_back(std::move(rw));
    }
  }
  return report;
}

void write_conjecture_csv(std::ostream& out, const std::vector<ConjectureRow>& rows) {
  out << "conjecture,n,K,subsets,sample_index,difference\n";
  for (const auto& r : rows) {
    out << r.conjecture << ',' << r.n << ',' << format_double(r.order) << ',' << r.subsets << ','
        << r.sample_index << ',' << format_double(r.difference) << '\n';
  }
}

}  // namespace gcelab
