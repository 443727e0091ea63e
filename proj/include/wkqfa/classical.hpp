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

// Classical baselines: one-way k-head deterministic finite automata with the
// halting acceptance convention, the two-condition reversibility verifier,
// and the nondeterministic chunk-reading Watson-Crick automaton.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wkqfa/symbols.hpp"

namespace wkqfa {

using MoveVector = std::vector<uint8_t>;

struct ClassicalTransition {
    uint32_t from = 0;
    SymbolTuple read;  // k gamma symbols
    uint32_t to = 0;
    MoveVector move;   // k entries, 0/1
};

// One-way deterministic k-head automaton over an end-marked tape. The
// transition map is partial; an undefined situation halts the machine, and a
// word is accepted iff the machine halts in an accepting state. Every defined
// transition must keep a head reading '$' in place.
struct MultiHeadDfa {
    Alphabet alphabet;
    std::vector<std::string> state_names;
    std::vector<bool> accepting;  // F
    uint32_t initial_state = 0;
    uint32_t heads = 1;  // k
    std::vector<ClassicalTransition> transitions;  // declaration order

    size_t state_count() const { return state_names.size(); }
    uint32_t state_index(const std::string& name) const;
    void validate() const;  // $-clamp, arity, duplicate (from, read), index ranges
    const ClassicalTransition* find_transition(uint32_t state, const SymbolTuple& read) const;
};

struct ClassicalConfiguration {
    uint32_t state = 0;
    std::vector<uint32_t> positions;  // one per head, in [0, |w|+1]

    auto operator<=>(const ClassicalConfiguration&) const = default;
};

struct ClassicalRun {
    bool accepted = false;  // halted in an accepting state
    bool halted = true;     // false when the step cap was hit (stationary loop)
    std::vector<ClassicalConfiguration> trace;  // initial configuration first
};

// Deterministic iteration of the step relation until the transition map is
// undefined. The cap catches machines that cycle without moving any head;
// such machines never halt and are reported with halted = false.
ClassicalRun run_1dfa_k(const MultiHeadDfa& a, const Word& w, uint64_t step_cap = 1'000'000);

enum class ReversibilityMode : uint8_t {
    // Condition (2) checked over configurations reachable from all words up
    // to max_len. Sound only up to the bound.
    Bounded,
    // Purely syntactic sufficient condition: no two distinct transitions into
    // the same state are simultaneously matchable (they must disagree on some
    // head that both read at the same offset). Sound for all words.
    Syntactic,
};
std::string_view to_string(ReversibilityMode mode);

struct ReversibilityViolation {
    std::string detail;
    std::vector<size_t> transitions;  // indices into MultiHeadDfa::transitions
    std::optional<Word> witness;      // bounded mode
    std::optional<ClassicalConfiguration> configuration;
};

struct ReversibilityReport {
    ReversibilityMode mode = ReversibilityMode::Bounded;
    uint32_t max_len = 8;  // bounded-mode scope, echoed
    bool pass = false;
    // Condition (1): all transitions entering a state share one move vector.
    std::vector<ReversibilityViolation> condition1;
    // Condition (2): at most one transition can have produced each reachable
    // configuration.
    std::vector<ReversibilityViolation> condition2;
};

ReversibilityReport check_reversibility(const MultiHeadDfa& a,
                                        ReversibilityMode mode = ReversibilityMode::Bounded,
                                        uint32_t max_len = 8);

// Rule (from, upper chunk, lower chunk, to); chunks may be empty.
struct WkRule {
    uint32_t from = 0;
    Word upper;
    Word lower;
    uint32_t to = 0;
};

struct ClassicalWkAutomaton {
    Alphabet alphabet;
    ComplementarityRelation rho;
    std::vector<std::string> state_names;
    std::vector<bool> final_states;
    uint32_t initial_state = 0;
    std::vector<WkRule> rules;

    size_t state_count() const { return state_names.size(); }
    uint32_t state_index(const std::string& name) const;
    void validate() const;
};

// True iff some complement w2 of w1 admits a rule path consuming exactly
// [w1/w2] from the initial state to a final state. Breadth-first over
// (state, upper offset, lower offset) with a visited set, so empty-chunk rule
// cycles terminate.
bool run_wk_classical(const ClassicalWkAutomaton& a, const Word& w1,
                      uint64_t complement_guard = kDefaultComplementGuard);

}  // namespace wkqfa
