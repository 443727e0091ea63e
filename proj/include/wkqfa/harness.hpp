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

// Brute-force language oracles, a sample-automata library, and an exhaustive
// comparison harness that sweeps a machine against an oracle at desk scale.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wkqfa/classical.hpp"
#include "wkqfa/quantum.hpp"

namespace wkqfa {

struct LanguageOracle {
    std::string name;
    Alphabet alphabet;
    std::string definition;  // documented set-builder reading
    std::function<bool(const Word&)> decide;
};

// Built-in oracles: "ww", "yao-rivest", "parity", "anbn".
const std::vector<LanguageOracle>& builtin_oracles();
const LanguageOracle* find_oracle(std::string_view name);

// |w| is even and the first half equals the second half.
bool oracle_ww(const Word& w);

// Over the four-symbol alphabet {a, b, *, |}: the word splits on '|' into
// blocks, each of the form w '*' x with w, x over {a, b}; membership holds
// iff two blocks share w but differ in x. '|' is this tool's block separator;
// any malformed block structure is non-membership.
bool oracle_yao_rivest(const Word& w);

// Standard DFA acceptance of a single-head machine via run_1dfa_k.
bool oracle_regular(const MultiHeadDfa& d, const Word& w);

// Defined on '#' and every letter for every state (a machine also defined on
// '$' never halts under the halting acceptance convention).
bool is_total_dfa(const MultiHeadDfa& d);

struct Disagreement {
    Word word;
    bool oracle_accepts = false;
    double best_p_acc = 0.0;
};

struct ComparisonReport {
    uint64_t words_tested = 0;
    std::vector<Disagreement> disagreements;  // sweep order
    double cutpoint = 0.5;
    uint64_t max_len = 0;
    RunParams run_params;
    double max_residual = 0.0;  // large residuals flag unreliable verdicts

    bool agree() const { return disagreements.empty(); }
};

// Sweeps every word up to max_len in length-then-lex order and compares the
// oracle verdict against best_p_acc > cutpoint. The machine and oracle must
// share an alphabet. work_guard bounds the total (word, complement) runs.
ComparisonReport exhaustive_compare(const Mwkqfa& m, const LanguageOracle& oracle,
                                    uint64_t max_len, double cutpoint = 0.5,
                                    const RunParams& params = {},
                                    uint64_t work_guard = 1'000'000);

// Classical counterparts used by the CLI and cross-checks.
ComparisonReport exhaustive_compare_classical(const MultiHeadDfa& d,
                                              const LanguageOracle& oracle, uint64_t max_len);
ComparisonReport exhaustive_compare_wk(const ClassicalWkAutomaton& a,
                                       const LanguageOracle& oracle, uint64_t max_len,
                                       uint64_t complement_guard = kDefaultComplementGuard);

struct Sample {
    std::string name;
    std::string description;
    Mwkqfa machine;
    // Analytic acceptance expectation for upper-strand words.
    std::function<double(const Word&)> expected_p_acc;
};

// Unary two-live-state machine whose per-'a' operator is the plane rotation
// [[cos t, -sin t], [sin t, cos t]] and whose '$' operator routes the first
// basis state to accept and the second to reject: p_acc(a^n) = cos^2(n t).
Mwkqfa make_rotor(double theta);

// Splits |q0> into two branches with amplitudes 1/sqrt(2) each, then routes
// them onto one accepting state with amplitudes of opposite sign: the target
// word "a" has two nonzero-amplitude paths into the accepting state yet
// p_acc = 0 by cancellation.
Mwkqfa make_interference_sample();

// Single-head DFA over {a, b} accepting words with an even number of a's.
// Reversible in both checker modes.
MultiHeadDfa make_parity_dfa();

// Two-head DFA over {a, b} accepting { a^n b^n : n >= 0 }. Reversible in both
// checker modes.
MultiHeadDfa make_anbn_dfa();

// Chunk-reading classical WK automaton for { a^n b^n } under the identity
// relation.
ClassicalWkAutomaton make_anbn_wk();

// rotor_0, rotor_pi_6, rotor_pi_4, rotor_pi_2, parity_embedded,
// anbn_embedded, interference; each with its expected acceptance function.
std::vector<Sample> sample_library();

}  // namespace wkqfa
