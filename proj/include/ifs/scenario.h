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

#ifndef IFS_SCENARIO_H
#define IFS_SCENARIO_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ifs/compile_exchange.h"
#include "ifs/encoding.h"
#include "ifs/model.h"
#include "ifs/schedule.h"

namespace ifs {

/// Malformed or inconsistent scenario input. The message names the field.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class UnknownGateError : public ConfigError {
   public:
    explicit UnknownGateError(const std::string &gate)
        : ConfigError("unknown gate '" + gate + "'"), gate_(gate) {}
    const std::string &gate() const {
        return gate_;
    }

   private:
    std::string gate_;
};

/// One logical gate request of a program.
///
///   rz          target, angle          Z rotation on logical bit target
///   hadamard    target | targets       logical Hadamard (several non-adjacent bits run in parallel)
///   cphase      control, target        adjacent bits
///   cnot        control, target        adjacent bits (diagonal only)
///   local       target, axis, angle    rotation of physical qubit target
///   init        -                      b flips turning all-up into the encoded zeros (diagonal only)
///   swap        star, dot              selective-coupling swap (exchange only)
///   xx_quarter  star, dot              selective-coupling exp(-i XX pi/4) (exchange only)
struct GateRequest {
    std::string gate;
    std::vector<size_t> targets;
    std::optional<size_t> control;
    std::optional<SymbolicReal> angle;
    std::optional<Axis> axis;
    std::optional<size_t> star;
    std::optional<size_t> dot;
};

struct Scenario {
    Architecture arch = DiagonalChain{};
    std::vector<int> initial;
    std::vector<GateRequest> program;
    SynthesisParams synthesis;
    std::uint64_t seed = 0;
    size_t shots = 0;
    std::string out_dir;
};

Architecture parse_architecture(const nlohmann::json &doc, const std::string &path = "architecture");
GateRequest parse_gate_request(const nlohmann::json &doc, const std::string &path);
Scenario parse_scenario(const nlohmann::json &doc);
/// Parse errors name the line and column of the offending byte.
Scenario parse_scenario_text(const std::string &text);

/// Throws ConfigError for requests the architecture cannot carry.
PulseSchedule compile_request(const Architecture &arch, const GateRequest &req, const SynthesisParams &params);
PulseSchedule compile_program(const Scenario &scenario);

struct SimulationResult {
    Vector logical;
    double leakage = 0.0;
    /// Probability that logical bit k reads 1.
    std::vector<double> marginals;
    /// Sampled logical outcomes keyed by bit string (bit 0 first); empty when shots = 0.
    std::map<std::string, size_t> counts;
    CostReport cost;
};

SimulationResult simulate(const Scenario &scenario);
/// Rows: kind,key,re,im,value. Deterministic for a given scenario.
std::string simulation_csv(const SimulationResult &result);
nlohmann::json simulation_json(const SimulationResult &result);

}  // namespace ifs

#endif
