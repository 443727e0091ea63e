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

// Multi-head Watson-Crick quantum finite automata: machine type, unitarity
// (well-formedness) verification, and the measure-after-each-step run
// semantics.
//
// A machine has k1 heads on the upper strand and k2 on the lower. Each symbol
// tuple (k1 upper reads followed by k2 lower reads, as gamma codes) selects a
// |Q|x|Q| operator on the state space. The transition amplitude from q to q'
// on tuple t is <q'|U_t|q>, and entering q' moves the heads by the machine's
// move vector D(q') (0 = stay, 1 = right). A head already on '$' is held in
// place regardless of D, which keeps the configuration space finite.
//
// Each step applies the tuple operators configuration-wise, then measures:
// squared amplitudes on accepting/rejecting states are accumulated into
// p_acc/p_rej and removed. The live vector is deliberately left unnormalized
// so the accumulated probabilities are directly additive.
//
// Operator storage is sparse. A tuple with no stored operator behaves as the
// default-reject completion: every state maps to its own fresh reject sink
// with an all-zero move vector, so the configuration's squared amplitude goes
// straight to p_rej. Distinct sinks cannot interfere, which makes the direct
// accumulation exact.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wkqfa/complex_matrix.hpp"
#include "wkqfa/symbols.hpp"

namespace wkqfa {

enum class StateKind : uint8_t { NonHalting, Accepting, Rejecting };

// One 0/1 entry per head, upper heads first.
using MoveVector = std::vector<uint8_t>;

struct Mwkqfa {
    Alphabet alphabet;
    ComplementarityRelation rho;
    std::vector<std::string> state_names;
    std::vector<StateKind> state_kinds;
    uint32_t initial_state = 0;
    uint32_t upper_heads = 1;  // k1
    uint32_t lower_heads = 1;  // k2
    std::vector<MoveVector> moves;                    // D, indexed by state
    std::map<SymbolTuple, ComplexMatrix> operators;   // sparse; see header note

    size_t state_count() const { return state_names.size(); }
    uint32_t head_count() const { return upper_heads + lower_heads; }
    uint32_t state_index(const std::string& name) const;
    const ComplexMatrix* operator_for(const SymbolTuple& t) const;
    bool is_halting(uint32_t state) const { return state_kinds[state] != StateKind::NonHalting; }

    // Throws ValidationError/StructuralError. Checks: distinct state names,
    // index ranges, k1,k2 >= 1, D total with the right arity and 0/1 entries,
    // a non-halting initial state, and |Q|x|Q| operators with well-formed
    // tuples.
    void validate() const;
};

struct Configuration {
    uint32_t state = 0;
    std::vector<uint32_t> upper;  // k1 head positions
    std::vector<uint32_t> lower;  // k2 head positions

    auto operator<=>(const Configuration&) const = default;
};

struct Superposition {
    std::map<Configuration, Amplitude> amplitudes;  // zero entries never stored
    double p_acc = 0.0;
    double p_rej = 0.0;

    double live_mass() const;
};

enum class HaltReason : uint8_t { MassExhausted, StepBudget, NoLiveConfigurations };
std::string_view to_string(HaltReason reason);

struct RunOutcome {
    double p_acc = 0.0;
    double p_rej = 0.0;
    double p_residual = 0.0;
    uint64_t steps = 0;
    HaltReason halt_reason = HaltReason::StepBudget;
    // Max over executed steps of |1 - (p_acc + p_rej + live mass)|. The model
    // does not prove global norm preservation across mixed tuples, so the
    // engine measures it instead of assuming it.
    double conservation_drift = 0.0;
};

struct TupleCheck {
    SymbolTuple tuple;
    double deviation;  // max-entry |U+U - I|
};

struct WellFormednessReport {
    double tolerance = 1e-9;
    bool pass = false;
    std::vector<TupleCheck> tuples;        // one per stored tuple, tuple order
    std::vector<SymbolTuple> failing;
    double max_deviation() const;
};

// Gram check U+U == I per stored symbol tuple. Unstored tuples are the
// default-reject completion, which is a permutation and needs no check.
WellFormednessReport check_well_formed(const Mwkqfa& m, double tolerance = 1e-9);

// Tuple of k1 upper symbols then k2 lower symbols at the configuration's head
// positions. Out-of-bounds heads are an internal invariant violation.
SymbolTuple read_tuple(const Mwkqfa& m, const DoubleTape& tape, const Configuration& c);

Superposition initial_superposition(const Mwkqfa& m);

// One transformation-then-observation step. The input superposition must not
// carry amplitude on halting states (the previous measurement guarantees it).
Superposition evolve_step(const Mwkqfa& m, const DoubleTape& tape, const Superposition& s);

struct RunParams {
    uint64_t step_budget = 0;  // 0 = default_step_budget
    double mass_epsilon = 1e-12;
    uint64_t complement_guard = kDefaultComplementGuard;
};

// One more than the configuration count: |Q| * (n1+2)^k1 * (n2+2)^k2 + 1,
// saturating.
uint64_t default_step_budget(const Mwkqfa& m, size_t upper_len, size_t lower_len);

// Runs the machine on the WK pair [w1/w2] from |q0> with all heads at 0,
// iterating until the live set empties, the live mass drops below
// mass_epsilon, or the step budget runs out. Requires is_wk_pair(rho, w1, w2).
RunOutcome run(const Mwkqfa& m, const Word& w1, const Word& w2, const RunParams& params = {});

// The single-head-pair machine shape (k1 = k2 = 1) is the same engine invoked
// through a narrower entry point; outcomes are bitwise identical.
RunOutcome run_as_wkqfa(const Mwkqfa& m, const Word& w1, const Word& w2,
                        const RunParams& params = {});

struct ProfileEntry {
    Word lower;
    RunOutcome outcome;
};

struct AcceptanceProfile {
    std::vector<ProfileEntry> entries;  // lexicographic complements
    double best_p_acc = 0.0;
};

// One run per complement of w1 under rho; acceptance over the lower strand is
// existential, so best_p_acc is the max over complements.
AcceptanceProfile acceptance_profile(const Mwkqfa& m, const Word& w1,
                                     const RunParams& params = {});

struct SampleParams {
    uint64_t work_guard = 1'000'000;  // total (word, complement) runs allowed
    double cutpoint = 0.5;            // strict: accepted iff best_p_acc > cutpoint
};

// All w1 with |w1| <= max_len and best_p_acc > cutpoint, length-then-lex.
std::vector<Word> language_sample(const Mwkqfa& m, size_t max_len,
                                  const SampleParams& sample = {},
                                  const RunParams& params = {});

}  // namespace wkqfa
