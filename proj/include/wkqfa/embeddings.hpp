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

// Constructive machine translations: completing partially-authored operator
// tables to unitary ones via per-state reject sinks, and embedding a
// reversible multi-head DFA into a strongly (identity-relation) multi-head
// Watson-Crick quantum automaton that imitates its transitions and acceptance.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wkqfa/classical.hpp"
#include "wkqfa/quantum.hpp"

namespace wkqfa {

// A machine whose operators are authored column-by-column: for each stored
// tuple, a map from source state to its image vector over the draft's states.
// States without an authored image on some stored tuple get routed to a fresh
// per-state reject sink by complete_to_unitary.
struct MachineDraft {
    Alphabet alphabet;
    ComplementarityRelation rho;
    std::vector<std::string> state_names;
    std::vector<StateKind> state_kinds;
    uint32_t initial_state = 0;
    uint32_t upper_heads = 1;
    uint32_t lower_heads = 1;
    std::vector<MoveVector> moves;
    // tuple -> source state -> image column (length = state_names.size())
    std::map<SymbolTuple, std::map<uint32_t, std::vector<Amplitude>>> authored;
};

inline constexpr uint32_t kNoSink = UINT32_MAX;

struct CompletionOutcome {
    Mwkqfa machine;
    size_t sinks_added = 0;
    std::vector<uint32_t> reject_sink_of;  // draft state index -> sink index or kNoSink
};

// For every stored tuple: authored columns are kept verbatim (they must be
// orthonormal within the tolerance), every unauthored draft state maps to its
// reject sink's basis vector, and the sinks' own columns are filled with
// deterministic completion vectors so each matrix is unitary. Sinks join the
// rejecting states and carry all-zero move vectors. When the authored columns
// are basis vectors the completion picks fresh basis vectors and the result
// is exactly a permutation matrix.
CompletionOutcome complete_to_unitary(const MachineDraft& draft,
                                      double orthonormal_tolerance = 1e-6);

struct EmbeddingResult {
    Mwkqfa machine;
    ReversibilityReport evidence;                 // echoed from the caller
    std::map<uint32_t, uint32_t> accept_sink_of;  // classical state -> accept sink
};

// Builds a strongly multi-head WK quantum automaton from a reversible k-head
// DFA: k1 = k upper heads plus one permanently stationary lower head whose
// read symbol is ignored (every tuple is replicated for each lower symbol).
// Each classical transition becomes an amplitude-1 edge with D(target) =
// (classical move | 0); classically-undefined slots route accepting states to
// per-state accept sinks and everything else to the reject completion, so
// halting acceptance carries over exactly. Requires passing reversibility
// evidence; per-tuple target collisions (possible when the evidence was only
// bounded) abort with an EmbeddingError naming the collision.
EmbeddingResult reversible_to_quantum(const MultiHeadDfa& a,
                                      const ReversibilityReport& evidence);

}  // namespace wkqfa
