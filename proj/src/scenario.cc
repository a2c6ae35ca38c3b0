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

#include "ifs/scenario.h"

#include <cstdio>
#include <random>
#include <sstream>

#include "ifs/compile_ising.h"

namespace ifs {

namespace {

using nlohmann::json;

const std::vector<std::string> KNOWN_GATES = {"rz",    "hadamard", "cphase", "cnot",
                                              "local", "init",     "swap",   "xx_quarter"};

const json &require(const json &doc, const std::string &key, const std::string &path) {
    if (!doc.is_object()) {
        throw ConfigError(path + ": expected an object");
    }
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw ConfigError(path + "." + key + ": missing");
    }
    return *it;
}

size_t read_index(const json &v, const std::string &path) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw ConfigError(path + ": expected a non-negative integer");
    }
    return v.get<size_t>();
}

std::optional<size_t> optional_index(const json &doc, const std::string &key, const std::string &path) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        return std::nullopt;
    }
    return read_index(*it, path + "." + key);
}

/// Numbers or symbolic strings such as "pi/16" or "1.0".
SymbolicReal read_real(const json &v, const std::string &path) {
    try {
        if (v.is_number()) {
            return SymbolicReal::raw(v.get<double>());
        }
        if (v.is_string()) {
            return SymbolicReal::parse(v.get<std::string>());
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError(path + ": " + e.what());
    }
    throw ConfigError(path + ": expected a number or a symbolic string");
}

void check_bit(const Architecture &arch, size_t k, const std::string &what) {
    if (k >= logical_width(arch)) {
        throw ConfigError(what + " " + std::to_string(k) + " is outside a register of width " +
                          std::to_string(logical_width(arch)));
    }
}

size_t single_target(const GateRequest &req) {
    if (req.targets.size() != 1) {
        throw ConfigError("gate '" + req.gate + "' needs exactly one target");
    }
    return req.targets[0];
}

SymbolicReal need_angle(const GateRequest &req) {
    if (!req.angle) {
        throw ConfigError("gate '" + req.gate + "' needs an angle");
    }
    return *req.angle;
}

const DiagonalChain &need_diagonal(const Architecture &arch, const GateRequest &req) {
    if (!std::holds_alternative<DiagonalChain>(arch)) {
        throw ConfigError("gate '" + req.gate + "' is only available on the diagonal chain");
    }
    return std::get<DiagonalChain>(arch);
}

const ExchangeChain &need_exchange(const Architecture &arch, const GateRequest &req) {
    if (!std::holds_alternative<ExchangeChain>(arch)) {
        throw ConfigError("gate '" + req.gate + "' is only available on the exchange chain");
    }
    return std::get<ExchangeChain>(arch);
}

StarDotPair pair_of(const ExchangeChain &arch, const GateRequest &req) {
    if (req.star && req.dot) {
        return {*req.star, *req.dot};
    }
    size_t k = single_target(req);
    check_bit(arch, k, "target");
    return {arch.star(k), arch.dot1(k)};
}

std::string bit_string(size_t index, size_t width) {
    std::string s;
    for (size_t k = 0; k < width; k++) {
        s += ((index >> k) & 1) ? '1' : '0';
    }
    return s;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Architecture parse_architecture(const json &doc, const std::string &path) {
    std::string kind;
    const json &k = require(doc, "kind", path);
    if (!k.is_string()) {
        throw ConfigError(path + ".kind: expected a string");
    }
    kind = k.get<std::string>();
    size_t n = read_index(require(doc, "n_logical", path), path + ".n_logical");
    Architecture arch;
    if (kind == "diagonal") {
        DiagonalChain d;
        d.n_logical = n;
        d.j0 = read_real(require(doc, "j0", path), path + ".j0").value();
        d.j1 = read_real(require(doc, "j1", path), path + ".j1").value();
        if (auto it = doc.find("edge_overrides"); it != doc.end()) {
            if (!it->is_array()) {
                throw ConfigError(path + ".edge_overrides: expected an array");
            }
            for (size_t i = 0; i < it->size(); i++) {
                std::string p = path + ".edge_overrides[" + std::to_string(i) + "]";
                const json &e = (*it)[i];
                size_t a = read_index(require(e, "p", p), p + ".p");
                size_t b = read_index(require(e, "q", p), p + ".q");
                d.edge_overrides[{std::min(a, b), std::max(a, b)}] = read_real(require(e, "j", p), p + ".j").value();
            }
        }
        arch = d;
    } else if (kind == "exchange") {
        ExchangeChain e;
        e.n_logical = n;
        e.jxy = read_real(require(doc, "jxy", path), path + ".jxy").value();
        if (auto it = doc.find("jz"); it != doc.end()) {
            e.jz = read_real(*it, path + ".jz").value();
        }
        arch = e;
    } else {
        throw ConfigError(path + ".kind: unknown architecture '" + kind + "' (expected diagonal or exchange)");
    }
    try {
        validate(arch);
    } catch (const std::exception &e) {
        throw ConfigError(path + ": " + e.what());
    }
    return arch;
}

GateRequest parse_gate_request(const json &doc, const std::string &path) {
    const json &g = require(doc, "gate", path);
    if (!g.is_string()) {
        throw ConfigError(path + ".gate: expected a string");
    }
    GateRequest req;
    req.gate = g.get<std::string>();
    if (std::find(KNOWN_GATES.begin(), KNOWN_GATES.end(), req.gate) == KNOWN_GATES.end()) {
        throw UnknownGateError(req.gate);
    }
    if (auto it = doc.find("target"); it != doc.end()) {
        req.targets.push_back(read_index(*it, path + ".target"));
    }
    if (auto it = doc.find("targets"); it != doc.end()) {
        if (!it->is_array()) {
            throw ConfigError(path + ".targets: expected an array");
        }
        for (size_t i = 0; i < it->size(); i++) {
            req.targets.push_back(read_index((*it)[i], path + ".targets[" + std::to_string(i) + "]"));
        }
    }
    req.control = optional_index(doc, "control", path);
    req.star = optional_index(doc, "star", path);
    req.dot = optional_index(doc, "dot", path);
    if (auto it = doc.find("angle"); it != doc.end()) {
        req.angle = read_real(*it, path + ".angle");
    }
    if (auto it = doc.find("axis"); it != doc.end()) {
        try {
            req.axis = parse_axis(it->get<std::string>());
        } catch (const std::exception &e) {
            throw ConfigError(path + ".axis: " + e.what());
        }
    }
    return req;
}

Scenario parse_scenario(const json &doc) {
    if (!doc.is_object()) {
        throw ConfigError("scenario: expected an object");
    }
    Scenario s;
    s.arch = parse_architecture(require(doc, "architecture", "scenario"), "architecture");
    const size_t width = logical_width(s.arch);
    if (auto it = doc.find("initial"); it != doc.end()) {
        if (!it->is_array()) {
            throw ConfigError("initial: expected an array of bits");
        }
        for (size_t i = 0; i < it->size(); i++) {
            const json &b = (*it)[i];
            if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1)) {
                throw ConfigError("initial[" + std::to_string(i) + "]: expected 0 or 1");
            }
            s.initial.push_back(b.get<int>());
        }
        if (s.initial.size() != width) {
            throw ConfigError("initial: " + std::to_string(s.initial.size()) + " bits for a register of width " +
                              std::to_string(width));
        }
    } else {
        s.initial.assign(width, 0);
    }
    if (auto it = doc.find("program"); it != doc.end()) {
        if (!it->is_array()) {
            throw ConfigError("program: expected an array");
        }
        for (size_t i = 0; i < it->size(); i++) {
            s.program.push_back(parse_gate_request((*it)[i], "program[" + std::to_string(i) + "]"));
        }
    }
    if (auto it = doc.find("synthesis"); it != doc.end()) {
        if (auto n = optional_index(*it, "n_reps", "synthesis")) {
            if (*n < 1) {
                throw ConfigError("synthesis.n_reps: must be at least 1");
            }
            s.synthesis.n_reps = *n;
        }
        if (auto m = it->find("level1"); m != it->end()) {
            std::string mode = m->is_string() ? m->get<std::string>() : "";
            if (mode == "trotter") {
                s.synthesis.level1 = Level1Mode::Trotter;
            } else if (mode == "ideal") {
                s.synthesis.level1 = Level1Mode::Ideal;
            } else {
                throw ConfigError("synthesis.level1: expected 'trotter' or 'ideal'");
            }
        }
    }
    if (auto it = doc.find("seed"); it != doc.end()) {
        s.seed = read_index(*it, "seed");
    }
    if (auto it = doc.find("shots"); it != doc.end()) {
        s.shots = read_index(*it, "shots");
    }
    if (auto it = doc.find("out"); it != doc.end()) {
        if (!it->is_string()) {
            throw ConfigError("out: expected a string");
        }
        s.out_dir = it->get<std::string>();
    }
    for (size_t i = 0; i < s.program.size(); i++) {
        try {
            compile_request(s.arch, s.program[i], s.synthesis);
        } catch (const ConfigError &e) {
            throw ConfigError("program[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return s;
}

Scenario parse_scenario_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); i++) {
            if (text[i] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
        throw ConfigError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
    return parse_scenario(doc);
}

PulseSchedule compile_request(const Architecture &arch, const GateRequest &req, const SynthesisParams &params) {
    try {
        params.validate();
        if (req.gate == "rz") {
            size_t k = single_target(req);
            check_bit(arch, k, "target");
            SymbolicReal angle = need_angle(req);
            if (const auto *d = std::get_if<DiagonalChain>(&arch)) {
                return rz_logical(*d, k, angle);
            }
            const auto &e = std::get<ExchangeChain>(arch);
            PulseSchedule s("rz_logical(" + std::to_string(k) + ", " + angle.str() + ")");
            return s.rotation(e.star(k), Axis::Z, angle);
        }
        if (req.gate == "hadamard") {
            if (req.targets.empty()) {
                throw ConfigError("gate 'hadamard' needs a target");
            }
            for (size_t k : req.targets) {
                check_bit(arch, k, "target");
            }
            if (const auto *d = std::get_if<DiagonalChain>(&arch)) {
                return hadamard_logical_parallel(*d, req.targets);
            }
            const auto &e = std::get<ExchangeChain>(arch);
            PulseSchedule s("hadamard_logical");
            for (size_t k : req.targets) {
                s.append(local_logical_gate_exchange(e, k, gates::hadamard()));
            }
            return s;
        }
        if (req.gate == "cphase" || req.gate == "cnot") {
            if (!req.control) {
                throw ConfigError("gate '" + req.gate + "' needs a control");
            }
            size_t t = single_target(req);
            check_bit(arch, *req.control, "control");
            check_bit(arch, t, "target");
            if (req.gate == "cnot") {
                return cnot_logical(need_diagonal(arch, req), *req.control, t);
            }
            if (const auto *d = std::get_if<DiagonalChain>(&arch)) {
                return cphase_logical(*d, *req.control, t);
            }
            return cphase_logical_exchange(std::get<ExchangeChain>(arch), *req.control, t, params);
        }
        if (req.gate == "local") {
            size_t q = single_target(req);
            if (q >= physical_qubit_count(arch)) {
                throw ConfigError("physical qubit " + std::to_string(q) + " out of range");
            }
            if (!req.axis) {
                throw ConfigError("gate 'local' needs an axis");
            }
            PulseSchedule s("local");
            return s.rotation(q, *req.axis, need_angle(req));
        }
        if (req.gate == "init") {
            return init_schedule_diagonal(need_diagonal(arch, req));
        }
        if (req.gate == "swap") {
            const auto &e = need_exchange(arch, req);
            return synth_swap(e, pair_of(e, req), params);
        }
        if (req.gate == "xx_quarter") {
            const auto &e = need_exchange(arch, req);
            return synth_xx_quarter(e, pair_of(e, req), params);
        }
    } catch (const ConfigError &) {
        throw;
    } catch (const std::exception &e) {
        throw ConfigError("gate '" + req.gate + "': " + e.what());
    }
    throw UnknownGateError(req.gate);
}

PulseSchedule compile_program(const Scenario &scenario) {
    PulseSchedule s("program");
    for (const auto &req : scenario.program) {
        s.append(compile_request(scenario.arch, req, scenario.synthesis));
    }
    return s;
}

SimulationResult simulate(const Scenario &scenario) {
    const CodeSpace code(scenario.arch);
    const size_t width = code.logical_width();
    PulseSchedule program = compile_program(scenario);
    StateVector final_state = execute(program, scenario.arch, code.encode(scenario.initial), scenario.seed);

    SimulationResult r;
    r.cost = accounting(program);
    r.logical = code.logical_amplitudes(final_state);
    r.leakage = code.leakage(final_state);
    r.marginals.assign(width, 0.0);
    std::vector<double> probs(static_cast<size_t>(r.logical.size()));
    for (size_t j = 0; j < probs.size(); j++) {
        probs[j] = std::norm(r.logical[static_cast<Eigen::Index>(j)]);
        for (size_t k = 0; k < width; k++) {
            if ((j >> k) & 1) {
                r.marginals[k] += probs[j];
            }
        }
    }
    if (scenario.shots > 0) {
        std::mt19937_64 rng(scenario.seed);
        std::discrete_distribution<size_t> dist(probs.begin(), probs.end());
        std::vector<size_t> tally(probs.size(), 0);
        for (size_t i = 0; i < scenario.shots; i++) {
            tally[dist(rng)]++;
        }
        for (size_t j = 0; j < tally.size(); j++) {
            if (tally[j]) {
                r.counts[bit_string(j, width)] = tally[j];
            }
        }
    }
    return r;
}

std::string simulation_csv(const SimulationResult &result) {
    const size_t width = result.marginals.size();
    std::ostringstream out;
    out << "kind,key,re,im,value\n";
    for (Eigen::Index j = 0; j < result.logical.size(); j++) {
        Complex a = result.logical[j];
        out << "amplitude," << bit_string(static_cast<size_t>(j), width) << ',' << fmt(a.real()) << ','
            << fmt(a.imag()) << ',' << fmt(std::norm(a)) << '\n';
    }
    for (size_t k = 0; k < width; k++) {
        out << "marginal,bit" << k << ",,," << fmt(result.marginals[k]) << '\n';
    }
    out << "leakage,code,,," << fmt(result.leakage) << '\n';
    for (const auto &[key, n] : result.counts) {
        out << "count," << key << ",,," << n << '\n';
    }
    return out.str();
}

json simulation_json(const SimulationResult &result) {
    const size_t width = result.marginals.size();
    json amps = json::object();
    for (Eigen::Index j = 0; j < result.logical.size(); j++) {
        amps[bit_string(static_cast<size_t>(j), width)] = {result.logical[j].real(), result.logical[j].imag()};
    }
    return {{"amplitudes", amps},
            {"marginals", result.marginals},
            {"leakage", result.leakage},
            {"counts", result.counts},
            {"cost",
             {{"local_gates", result.cost.local_gate_count},
              {"evolves", result.cost.evolve_count},
              {"total_evolve_time", result.cost.total_evolve_time},
              {"exact_evolve_time", result.cost.exact_evolve_time ? result.cost.exact_evolve_time->str() : ""}}}};
}

}  // namespace ifs
