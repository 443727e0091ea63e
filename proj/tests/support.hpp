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

// Test-only helpers. The oracles here are deliberately independent of the
// engine code paths they check: plain 2x2 arrays for the rotation oracle,
// set enumeration for the language re-implementations, randomized machine
// generation with fixed seeds.

#pragma once

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wkqfa/quantum.hpp"

namespace wkqfa::testing {

// --- independent analytic oracle for the unary rotor ---
//
// Multiplies plain 2x2 rotation matrices n times and squares the first
// component of the resulting column. No engine types involved.
inline double rotor_power_oracle(double theta, size_t n) {
    const std::array<std::array<double, 2>, 2> r = {{{std::cos(theta), -std::sin(theta)},
                                                     {std::sin(theta), std::cos(theta)}}};
    std::array<double, 2> v = {1.0, 0.0};
    for (size_t i = 0; i < n; ++i) {
        v = {r[0][0] * v[0] + r[0][1] * v[1], r[1][0] * v[0] + r[1][1] * v[1]};
    }
    return v[0] * v[0];
}

// --- independent language re-implementations (generate-and-match) ---

// Membership via enumeration of { uu : |u| <= max_half } over a binary
// alphabet, not via the split-and-compare predicate.
class WwSet {
   public:
    explicit WwSet(size_t max_half) {
        for (const Word& u : all_words(2, max_half)) {
            Word uu = u;
            uu.insert(uu.end(), u.begin(), u.end());
            members_.insert(uu);
        }
        max_len_ = 2 * max_half;
    }
    bool contains(const Word& w) const { return w.size() <= max_len_ && members_.count(w) != 0; }

   private:
    std::set<Word> members_;
    size_t max_len_;
};

// Groups block suffixes by block prefix; membership iff some group holds two
// distinct suffixes. Blocks are re-parsed with an index scanner rather than
// the streaming parser.
inline bool yao_rivest_regroup(const Word& w) {
    constexpr Symbol kStar = 2, kBar = 3;
    std::vector<std::pair<Word, Word>> blocks;
    size_t start = 0;
    if (!w.empty()) {
        for (size_t i = 0; i <= w.size(); ++i) {
            if (i != w.size() && w[i] != kBar) {
                continue;
            }
            size_t star = i;
            size_t stars = 0;
            for (size_t k = start; k < i; ++k) {
                if (w[k] == kStar) {
                    star = k;
                    ++stars;
                }
            }
            if (stars != 1) {
                return false;
            }
            blocks.emplace_back(Word(w.begin() + start, w.begin() + star),
                                Word(w.begin() + star + 1, w.begin() + i));
            start = i + 1;
        }
    }
    std::map<Word, std::set<Word>> groups;
    for (auto& [prefix, suffix] : blocks) {
        groups[prefix].insert(suffix);
    }
    for (const auto& [prefix, suffixes] : groups) {
        if (suffixes.size() >= 2) {
            return true;
        }
    }
    return false;
}

// --- randomized well-formed machine generation ---

// Gamma tuples for a (1,1)-head machine over the given alphabet size.
std::vector<SymbolTuple> one_one_tuples(size_t alphabet_size);

enum class MoveStyle {
    // One move vector shared by every state. All live configurations then
    // read the same symbol tuple at every step, the regime in which
    // per-tuple unitarity implies global norm preservation.
    SharedVector,
    // Independent per-state move vectors. Branches diverge and can
    // recombine at the clamped '$' boundary, where conservation is not
    // guaranteed by the model (the engine reports the drift instead).
    PerState,
};

struct RandomMachineOptions {
    size_t min_states = 2;
    size_t max_states = 5;
    size_t alphabet_size = 2;
    bool ensure_halting_state = true;
    MoveStyle move_style = MoveStyle::SharedVector;
};

// (1,1)-head machine over an identity relation whose per-tuple operators are
// random permutations or random two-basis-state rotations, so every stored
// operator is unitary to machine precision.
Mwkqfa random_well_formed_machine(std::mt19937& rng, const RandomMachineOptions& options = {});

inline Word make_word(const Alphabet& alphabet, const std::string& text) {
    return alphabet.parse_word(text);
}

}  // namespace wkqfa::testing
