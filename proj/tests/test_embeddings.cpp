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

#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "wkqfa/embeddings.hpp"
#include "wkqfa/harness.hpp"

using namespace wkqfa;
using wkqfa::testing::make_word;

namespace {

MachineDraft two_state_draft() {
    MachineDraft draft;
    draft.alphabet = Alphabet({"a"});
    draft.rho = ComplementarityRelation::identity(1);
    draft.state_names = {"q0", "q1"};
    draft.state_kinds = {StateKind::NonHalting, StateKind::NonHalting};
    draft.initial_state = 0;
    draft.moves = {{0, 0}, {0, 0}};
    return draft;
}

}  // namespace

TEST_CASE("completion leaves a fully authored permutation unchanged") {
    MachineDraft draft = two_state_draft();
    const SymbolTuple tuple{draft.alphabet.left_marker(), draft.alphabet.left_marker()};
    draft.authored[tuple][0] = {Amplitude{}, Amplitude{1.0}};
    draft.authored[tuple][1] = {Amplitude{1.0}, Amplitude{}};
    const CompletionOutcome out = complete_to_unitary(draft);
    CHECK(out.sinks_added == 0);
    CHECK(out.machine.state_count() == 2);
    const ComplexMatrix& u = out.machine.operators.at(tuple);
    CHECK(u.at(1, 0) == Amplitude{1.0});
    CHECK(u.at(0, 1) == Amplitude{1.0});
    CHECK(check_well_formed(out.machine, 1e-9).pass);
}

TEST_CASE("completion adds a sink for the unauthored state and stays a permutation") {
    MachineDraft draft = two_state_draft();
    const SymbolTuple tuple{draft.alphabet.left_marker(), draft.alphabet.left_marker()};
    draft.authored[tuple][0] = {Amplitude{}, Amplitude{1.0}};  // q0 -> q1 only
    const CompletionOutcome out = complete_to_unitary(draft);
    CHECK(out.sinks_added == 1);
    REQUIRE(out.machine.state_count() == 3);
    CHECK(out.reject_sink_of[1] == 2);
    CHECK(out.machine.state_kinds[2] == StateKind::Rejecting);
    CHECK(out.machine.moves[2] == MoveVector{0, 0});
    CHECK(out.machine.state_names[2] == "q_rej_q1");

    const ComplexMatrix& u = out.machine.operators.at(tuple);
    // q0 -> q1 (authored), q1 -> sink, sink -> q0: a 3x3 permutation.
    CHECK(u.at(1, 0) == Amplitude{1.0});
    CHECK(u.at(2, 1) == Amplitude{1.0});
    CHECK(u.at(0, 2) == Amplitude{1.0});
    CHECK((u.adjoint() * u).max_deviation_from_identity() == 0.0);
    CHECK(check_well_formed(out.machine, 1e-9).pass);
}

TEST_CASE("completion rejects non-orthonormal authored columns") {
    MachineDraft draft = two_state_draft();
    const SymbolTuple tuple{draft.alphabet.left_marker(), draft.alphabet.left_marker()};
    draft.authored[tuple][0] = {Amplitude{1.0}, Amplitude{}};
    draft.authored[tuple][1] = {Amplitude{1.0}, Amplitude{}};  // duplicated column
    CHECK_THROWS_WITH_AS(complete_to_unitary(draft),
                         "cannot complete tuple (# | #): columns of 'q0' and 'q1' are not "
                         "orthonormal",
                         ValidationError);
}

TEST_CASE("completion handles authored columns that are not basis vectors") {
    const double r = 1.0 / std::sqrt(2.0);
    MachineDraft draft = two_state_draft();
    const SymbolTuple tuple{draft.alphabet.left_marker(), draft.alphabet.left_marker()};
    draft.authored[tuple][0] = {Amplitude{r}, Amplitude{r}};
    const CompletionOutcome out = complete_to_unitary(draft);
    CHECK(out.sinks_added == 1);
    CHECK(check_well_formed(out.machine, 1e-9).pass);
}

TEST_CASE("embedding the parity machine is faithful on every word up to length 8") {
    const MultiHeadDfa parity = make_parity_dfa();
    const ReversibilityReport evidence =
        check_reversibility(parity, ReversibilityMode::Syntactic);
    REQUIRE(evidence.pass);
    const EmbeddingResult embedded = reversible_to_quantum(parity, evidence);
    CHECK(check_well_formed(embedded.machine, 1e-9).pass);
    CHECK(embedded.machine.rho.is_identity());
    CHECK(embedded.machine.upper_heads == 1);
    CHECK(embedded.machine.lower_heads == 1);

    for (const Word& w : all_words(2, 8)) {
        const bool classical = run_1dfa_k(parity, w).accepted;
        const RunOutcome quantum = run(embedded.machine, w, w);
        if (classical) {
            CHECK(std::abs(quantum.p_acc - 1.0) < 1e-9);
        } else {
            CHECK(quantum.p_acc < 1e-9);
            CHECK(quantum.p_rej + quantum.p_residual > 1.0 - 1e-9);
        }
    }
}

TEST_CASE("embedding the a^n b^n machine is faithful on every word up to length 8") {
    const MultiHeadDfa anbn = make_anbn_dfa();
    const ReversibilityReport evidence = check_reversibility(anbn, ReversibilityMode::Syntactic);
    REQUIRE(evidence.pass);
    const EmbeddingResult embedded = reversible_to_quantum(anbn, evidence);
    CHECK(check_well_formed(embedded.machine, 1e-9).pass);
    CHECK(embedded.machine.upper_heads == 2);
    CHECK(embedded.machine.lower_heads == 1);

    for (const Word& w : all_words(2, 8)) {
        const bool classical = run_1dfa_k(anbn, w).accepted;
        const RunOutcome quantum = run(embedded.machine, w, w);
        if (classical) {
            CHECK(std::abs(quantum.p_acc - 1.0) < 1e-9);
        } else {
            CHECK(quantum.p_acc < 1e-9);
            CHECK(quantum.p_rej + quantum.p_residual > 1.0 - 1e-9);
        }
    }
}

TEST_CASE("an embedded run keeps exactly one unit-amplitude configuration live") {
    const MultiHeadDfa anbn = make_anbn_dfa();
    const EmbeddingResult embedded =
        reversible_to_quantum(anbn, check_reversibility(anbn, ReversibilityMode::Syntactic));
    const Word w = make_word(anbn.alphabet, "aabb");
    const DoubleTape tape = make_wk_tape(embedded.machine.rho, w, w);
    Superposition s = initial_superposition(embedded.machine);
    while (!s.amplitudes.empty()) {
        CHECK(s.amplitudes.size() == 1);
        CHECK(std::abs(std::abs(s.amplitudes.begin()->second) - 1.0) < 1e-12);
        s = evolve_step(embedded.machine, tape, s);
    }
    CHECK(s.p_acc == doctest::Approx(1.0));
}

TEST_CASE("a transition-free machine with an accepting start accepts everything") {
    MultiHeadDfa d;
    d.alphabet = Alphabet({"a"});
    d.state_names = {"q0"};
    d.accepting = {true};
    d.initial_state = 0;
    d.heads = 1;
    d.validate();
    const EmbeddingResult embedded =
        reversible_to_quantum(d, check_reversibility(d, ReversibilityMode::Syntactic));
    for (const Word& w : all_words(1, 3)) {
        const RunOutcome out = run(embedded.machine, w, w);
        CHECK(out.p_acc == doctest::Approx(1.0));
        CHECK(out.steps == 1);
    }
}

TEST_CASE("failing evidence refuses to embed") {
    MultiHeadDfa d;
    d.alphabet = Alphabet({"a"});
    d.state_names = {"s0", "s1", "sink"};
    d.accepting = {false, false, false};
    d.initial_state = 0;
    d.heads = 1;
    const GammaSymbol a = 0, hash = d.alphabet.left_marker();
    d.transitions = {
        {0, {hash}, 0, {1}},
        {0, {a}, 2, {1}},
        {1, {a}, 2, {1}},
    };
    const ReversibilityReport evidence = check_reversibility(d, ReversibilityMode::Syntactic);
    REQUIRE_FALSE(evidence.pass);
    CHECK_THROWS_AS(reversible_to_quantum(d, evidence), ValidationError);

    // Forged passing evidence: the per-tuple collision is still caught.
    ReversibilityReport forged = evidence;
    forged.pass = true;
    forged.condition2.clear();
    CHECK_THROWS_AS(reversible_to_quantum(d, forged), EmbeddingError);
}

TEST_CASE("forged evidence with conflicting move vectors is caught") {
    MultiHeadDfa d;
    d.alphabet = Alphabet({"a"});
    d.state_names = {"t0", "t1"};
    d.accepting = {false, false};
    d.initial_state = 0;
    d.heads = 2;
    const GammaSymbol a = 0, hash = d.alphabet.left_marker();
    d.transitions = {
        {0, {hash, hash}, 1, {1, 0}},
        {1, {a, a}, 1, {0, 1}},
    };
    ReversibilityReport forged;
    forged.pass = true;
    CHECK_THROWS_AS(reversible_to_quantum(d, forged), EmbeddingError);
}
