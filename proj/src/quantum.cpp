// Copyright 2026 The wkqfa authors
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

#include "wkqfa/quantum.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace wkqfa {

uint32_t Mwkqfa::state_index(const std::string& name) const {
    for (uint32_t i = 0; i < state_names.size(); ++i) {
        if (state_names[i] == name) {
            return i;
        }
    }
    throw DomainError("state '" + name + "' is not declared");
}

const ComplexMatrix* Mwkqfa::operator_for(const SymbolTuple& t) const {
    auto it = operators.find(t);
    return it == operators.end() ? nullptr : &it->second;
}

void Mwkqfa::validate() const {
    const size_t n = state_names.size();
    if (n == 0) {
        throw ValidationError("machine has no states");
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (state_names[i] == state_names[j]) {
                throw ValidationError("duplicate state name '" + state_names[i] + "'");
            }
        }
    }
    if (state_kinds.size() != n) {
        throw ValidationError("state kind list does not match the state list");
    }
    if (initial_state >= n) {
        throw ValidationError("initial state index out of range");
    }
    if (is_halting(initial_state)) {
        throw ValidationError("initial state '" + state_names[initial_state] +
                              "' must be non-halting");
    }
    if (upper_heads < 1 || lower_heads < 1) {
        throw ValidationError("head counts must be at least 1");
    }
    if (moves.size() != n) {
        throw ValidationError("move function must be total on the state set");
    }
    for (size_t i = 0; i < n; ++i) {
        if (moves[i].size() != head_count()) {
            throw ValidationError("move vector of state '" + state_names[i] +
                                  "' has the wrong arity");
        }
        for (uint8_t d : moves[i]) {
            if (d > 1) {
                throw ValidationError("move vector of state '" + state_names[i] +
                                      "' has an entry outside {0,1}");
            }
        }
    }
    const size_t gamma = alphabet.gamma_size();
    for (const auto& [tuple, matrix] : operators) {
        if (tuple.size() != head_count()) {
            throw StructuralError("operator tuple " + alphabet.format_tuple(tuple, upper_heads) +
                                  " has the wrong arity");
        }
        for (GammaSymbol g : tuple) {
            if (g >= gamma) {
                throw StructuralError("operator tuple uses a symbol outside the working alphabet");
            }
        }
        if (!matrix.square() || matrix.rows() != n) {
            throw StructuralError("operator for tuple " +
                                  alphabet.format_tuple(tuple, upper_heads) + " is " +
                                  std::to_string(matrix.rows()) + "x" +
                                  std::to_string(matrix.cols()) + ", expected " +
                                  std::to_string(n) + "x" + std::to_string(n));
        }
    }
}

double Superposition::live_mass() const {
    double mass = 0.0;
    for (const auto& [c, amp] : amplitudes) {
        mass += std::norm(amp);
    }
    return mass;
}

std::string_view to_string(HaltReason reason) {
    switch (reason) {
        case HaltReason::MassExhausted:
            return "mass-exhausted";
        case HaltReason::StepBudget:
            return "step-budget";
        case HaltReason::NoLiveConfigurations:
            return "no-live-configurations";
    }
    return "unknown";
}

double WellFormednessReport::max_deviation() const {
    double worst = 0.0;
    for (const auto& t : tuples) {
        worst = std::max(worst, t.deviation);
    }
    return worst;
}

WellFormednessReport check_well_formed(const Mwkqfa& m, double tolerance) {
    const size_t n = m.state_count();
    WellFormednessReport report;
    report.tolerance = tolerance;
    for (const auto& [tuple, matrix] : m.operators) {
        if (!matrix.square() || matrix.rows() != n) {
            throw StructuralError("operator for tuple " +
                                  m.alphabet.format_tuple(tuple, m.upper_heads) +
                                  " does not act on the state space");
        }
        const double deviation = (matrix.adjoint() * matrix).max_deviation_from_identity();
        report.tuples.push_back({tuple, deviation});
        if (deviation > tolerance) {
            report.failing.push_back(tuple);
        }
    }
    report.pass = report.failing.empty();
    return report;
}

SymbolTuple read_tuple(const Mwkqfa& m, const DoubleTape& tape, const Configuration& c) {
    SymbolTuple t;
    t.reserve(m.head_count());
    for (uint32_t pos : c.upper) {
        assert(pos <= tape.upper_dollar());
        t.push_back(tape.upper_at(pos));
    }
    for (uint32_t pos : c.lower) {
        assert(pos <= tape.lower_dollar());
        t.push_back(tape.lower_at(pos));
    }
    return t;
}

Superposition initial_superposition(const Mwkqfa& m) {
    Superposition s;
    Configuration c;
    c.state = m.initial_state;
    c.upper.assign(m.upper_heads, 0);
    c.lower.assign(m.lower_heads, 0);
    s.amplitudes.emplace(std::move(c), Amplitude{1.0});
    return s;
}

namespace {

// Advance heads by the target state's move vector, holding any head already
// on '$' in place.
Configuration advance(const Configuration& c, uint32_t target, const MoveVector& move,
                      const DoubleTape& tape) {
    Configuration next;
    next.state = target;
    next.upper.reserve(c.upper.size());
    next.lower.reserve(c.lower.size());
    size_t mi = 0;
    for (uint32_t pos : c.upper) {
        uint32_t d = move[mi++];
        next.upper.push_back(pos >= tape.upper_dollar() ? pos : pos + d);
    }
    for (uint32_t pos : c.lower) {
        uint32_t d = move[mi++];
        next.lower.push_back(pos >= tape.lower_dollar() ? pos : pos + d);
    }
    return next;
}

}  // namespace

Superposition evolve_step(const Mwkqfa& m, const DoubleTape& tape, const Superposition& s) {
    const size_t n = m.state_count();
    Superposition next;
    next.p_acc = s.p_acc;
    next.p_rej = s.p_rej;

    // Stage 1: apply the tuple operator configuration-wise.
    std::map<Configuration, Amplitude> staged;
    for (const auto& [c, amp] : s.amplitudes) {
        assert(!m.is_halting(c.state));
        if (amp == Amplitude{}) {
            continue;
        }
        const SymbolTuple tuple = read_tuple(m, tape, c);
        const ComplexMatrix* op = m.operator_for(tuple);
        if (op == nullptr) {
            // Default-reject completion: the state maps to its own reject
            // sink, which is measured immediately and cannot interfere with
            // anything else.
            next.p_rej += std::norm(amp);
            continue;
        }
        if (!op->square() || op->rows() != n) {
            throw ConfigurationError("operator for tuple " +
                                     m.alphabet.format_tuple(tuple, m.upper_heads) +
                                     " does not act on the state space");
        }
        for (uint32_t target = 0; target < n; ++target) {
            const Amplitude u = op->at(target, c.state);
            if (u == Amplitude{}) {
                continue;
            }
            staged[advance(c, target, m.moves[target], tape)] += amp * u;
        }
    }

    // Stage 2: observe against the accept/reject/non-halting decomposition.
    for (auto& [c, amp] : staged) {
        if (amp == Amplitude{}) {
            continue;  // exact cancellation; never materialized
        }
        switch (m.state_kinds[c.state]) {
            case StateKind::Accepting:
                next.p_acc += std::norm(amp);
                break;
            case StateKind::Rejecting:
                next.p_rej += std::norm(amp);
                break;
            case StateKind::NonHalting:
                next.amplitudes.emplace(c, amp);
                break;
        }
    }
    return next;
}

uint64_t default_step_budget(const Mwkqfa& m, size_t upper_len, size_t lower_len) {
    constexpr uint64_t cap = UINT64_MAX / 2;
    unsigned __int128 budget = m.state_count();
    for (uint32_t i = 0; i < m.upper_heads; ++i) {
        budget *= (upper_len + 2);
        if (budget > cap) {
            return cap;
        }
    }
    for (uint32_t i = 0; i < m.lower_heads; ++i) {
        budget *= (lower_len + 2);
        if (budget > cap) {
            return cap;
        }
    }
    return static_cast<uint64_t>(budget) + 1;
}

RunOutcome run(const Mwkqfa& m, const Word& w1, const Word& w2, const RunParams& params) {
    if (!is_wk_pair(m.rho, w1, w2)) {
        throw ValidationError("[w1/w2] is not a Watson-Crick pair under the machine's relation");
    }
    const DoubleTape tape = make_wk_tape(m.rho, w1, w2);
    const uint64_t budget =
        params.step_budget > 0 ? params.step_budget : default_step_budget(m, w1.size(), w2.size());

    Superposition s = initial_superposition(m);
    RunOutcome out;
    double live = s.live_mass();
    while (true) {
        if (s.amplitudes.empty()) {
            out.halt_reason = HaltReason::NoLiveConfigurations;
            break;
        }
        if (live < params.mass_epsilon) {
            out.halt_reason = HaltReason::MassExhausted;
            break;
        }
        if (out.steps >= budget) {
            out.halt_reason = HaltReason::StepBudget;
            break;
        }
        s = evolve_step(m, tape, s);
        ++out.steps;
        live = s.live_mass();
        out.conservation_drift =
            std::max(out.conservation_drift, std::abs(1.0 - (s.p_acc + s.p_rej + live)));
    }
    out.p_acc = s.p_acc;
    out.p_rej = s.p_rej;
    out.p_residual = live;
    return out;
}

RunOutcome run_as_wkqfa(const Mwkqfa& m, const Word& w1, const Word& w2,
                        const RunParams& params) {
    if (m.upper_heads != 1 || m.lower_heads != 1) {
        throw ValidationError("the single-head-pair entry point requires k1 = k2 = 1");
    }
    return run(m, w1, w2, params);
}

AcceptanceProfile acceptance_profile(const Mwkqfa& m, const Word& w1, const RunParams& params) {
    AcceptanceProfile profile;
    for (Word& w2 : complement_strands(m.rho, w1, params.complement_guard)) {
        RunOutcome outcome = run(m, w1, w2, params);
        profile.best_p_acc = std::max(profile.best_p_acc, outcome.p_acc);
        profile.entries.push_back({std::move(w2), outcome});
    }
    return profile;
}

std::vector<Word> language_sample(const Mwkqfa& m, size_t max_len, const SampleParams& sample,
                                  const RunParams& params) {
    std::vector<Word> accepted;
    uint64_t work = 0;
    for (const Word& w1 : all_words(m.alphabet.size(), max_len)) {
        const uint64_t runs = std::max<uint64_t>(1, complement_count(m.rho, w1));
        work += runs;
        if (work > sample.work_guard) {
            throw CapacityError("language sweep exceeds the work guard of " +
                                std::to_string(sample.work_guard) + " runs");
        }
        if (acceptance_profile(m, w1, params).best_p_acc > sample.cutpoint) {
            accepted.push_back(w1);
        }
    }
    return accepted;
}

}  // namespace wkqfa
