// Copyright 2026 The ifsim Authors
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

#ifndef IFS_VERIFY_H
#define IFS_VERIFY_H

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ifs/compile_exchange.h"
#include "ifs/encoding.h"
#include "ifs/model.h"
#include "ifs/schedule.h"

namespace ifs {

/// Every pass/fail threshold used by the suites. Defaults are the pinned
/// acceptance values; the CLI may override them per invocation.
struct Thresholds {
    double algebraic = 1e-12;
    double exact_fidelity = 1e-10;
    double bell_amplitude = 1e-9;
    double ratio_min = 1.6;
    double ratio_max = 2.4;
    double slope_min = -1.4;
    double slope_max = -0.6;
    double swap_n64_infidelity = 1e-2;
    double exchange_cphase_min_fidelity = 0.995;
};

struct FidelityReport {
    double fidelity = 0.0;
    double leakage = 0.0;
    CostReport cost;
    std::string target_label;
    std::map<std::string, std::string> params;
};

/// M = E^dag U E with U the schedule unitary and E the code embedding;
/// fidelity = |tr(target^dag M)| / d, leakage = 1 - tr(M^dag M) / d.
FidelityReport process_fidelity(
    const PulseSchedule &sched, const Architecture &arch, const Matrix &target, const Matrix &embedding,
    std::string target_label = "");
FidelityReport process_fidelity(
    const PulseSchedule &sched, const Architecture &arch, const Matrix &target, const CodeSpace &code,
    std::string target_label = "");

/// Phase-invariant overlap |tr(a^dag b)| / d.
double operator_overlap(const Matrix &a, const Matrix &b);
/// min over global phase of the spectral norm of (b - e^{i phi} a).
double phase_aligned_distance(const Matrix &a, const Matrix &b);

/// Embedding for pair-level synthesis checks: every basis state of the four
/// group qubits, with all other isolators in the singlet and all other stars up.
/// Column index bit i is the state of ExchangeGroup::qubits()[i].
Matrix group_embedding(const ExchangeChain &arch, const ExchangeGroup &group);

/// exp(-i (XX + YY) pi/4) = [[1,0,0,0],[0,0,-i,0],[0,-i,0,0],[0,0,0,1]].
Matrix iswap_target();
/// exp(-i XX pi/4) = (I - i XX)/sqrt(2).
Matrix xx_quarter_target();
Matrix cphase_target();
Matrix cnot_target(size_t control_bit, size_t target_bit);
Matrix logical_hadamard_target();

/// Lifts a 2-qubit gate on positions (p, q) of an n-qubit index space.
Matrix lift_two_qubit(const Matrix &gate, size_t p, size_t q, size_t n);
/// Lifts a 1-qubit gate on position p of an n-qubit index space.
Matrix lift_one_qubit(const Matrix2 &gate, size_t p, size_t n);

struct TrotterSweepRow {
    size_t n_reps = 0;
    double error = 0.0;
    double leakage = 0.0;
    double total_evolve_time = 0.0;
    /// Phase-aligned spectral distance between synthesized and target unitary.
    double operator_distance = 0.0;
};

struct TrotterSweep {
    double jz = 0.0;
    std::vector<TrotterSweepRow> rows;
    /// Least-squares slope of log(error) against log(N).
    double slope = 0.0;
    /// error(N_i) / error(N_{i+1}).
    std::vector<double> ratios;
    bool monotone = true;
};

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double> &x, const std::vector<double> &y);

/// Swap synthesis on `pair` of a copy of `arch` for every jz, over the given Ns.
std::vector<TrotterSweep> trotter_sweep(
    const ExchangeChain &arch, StarDotPair pair, const std::vector<size_t> &ns, const std::vector<double> &jzs);

/// One line of a verification report.
struct CheckRow {
    std::string suite;
    std::string case_name;
    std::string metric;
    double value = 0.0;
    std::string threshold;
    bool pass = false;
};

struct Report {
    std::vector<CheckRow> rows;

    void add(std::string suite, std::string case_name, std::string metric, double value, std::string threshold,
             bool pass);
    /// value <= limit
    void at_most(const std::string &suite, const std::string &case_name, const std::string &metric, double value,
                 double limit);
    /// value >= limit
    void at_least(const std::string &suite, const std::string &case_name, const std::string &metric, double value,
                  double limit);
    void within(const std::string &suite, const std::string &case_name, const std::string &metric, double value,
                double lo, double hi);
    void merge(const Report &other);

    bool all_pass() const;
    size_t failures() const;
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

/// Annihilation, idle invariance, neighbor independence and readout round trips.
Report invariance_suites(const Architecture &arch, const Thresholds &th = {});

/// Every compiled diagonal gate against its logical target on an L=3 chain,
/// including the Bell-state circuit.
Report diagonal_gate_suite(const Thresholds &th = {});

/// Swap synthesis accounting, oracle-injection exactness, N=64 fidelity and the
/// encoded two-bit gate on an L=2 exchange chain.
Report exchange_gate_suite(size_t n_reps, const Thresholds &th = {});

/// Error scaling checks over a sweep.
Report trotter_suite(const std::vector<TrotterSweep> &sweeps, const Thresholds &th = {});

struct CostRow {
    std::string operation;
    std::string model;
    SymbolicReal time;
    /// "published" for reference figures carried as constants,
    /// "construction" for interaction times summed from this compiler's schedules.
    std::string provenance;
};

std::vector<CostRow> cost_table(const DiagonalChain &diag, const ExchangeChain &exch, size_t n_reps);
std::string cost_table_csv(const std::vector<CostRow> &rows);
/// Comparison checks plus the table rows themselves.
Report cost_comparison(const Thresholds &th = {});

}  // namespace ifs

#endif
