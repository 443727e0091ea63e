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

#include "support.hpp"

#include <algorithm>

namespace wkqfa::testing {

std::vector<SymbolTuple> one_one_tuples(size_t alphabet_size) {
    std::vector<SymbolTuple> tuples;
    const size_t gamma = alphabet_size + 2;
    for (GammaSymbol upper = 0; upper < gamma; ++upper) {
        for (GammaSymbol lower = 0; lower < gamma; ++lower) {
            tuples.push_back({upper, lower});
        }
    }
    return tuples;
}

Mwkqfa random_well_formed_machine(std::mt19937& rng, const RandomMachineOptions& options) {
    std::uniform_int_distribution<size_t> state_count_dist(options.min_states, options.max_states);
    const size_t n = state_count_dist(rng);

    Mwkqfa m;
    std::vector<std::string> letters;
    for (size_t i = 0; i < options.alphabet_size; ++i) {
        letters.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    m.alphabet = Alphabet(letters);
    m.rho = ComplementarityRelation::identity(options.alphabet_size);
    for (size_t i = 0; i < n; ++i) {
        m.state_names.push_back("q" + std::to_string(i));
    }

    std::uniform_int_distribution<int> kind_dist(0, 3);
    m.state_kinds.assign(n, StateKind::NonHalting);
    for (size_t i = 1; i < n; ++i) {
        switch (kind_dist(rng)) {
            case 0:
                m.state_kinds[i] = StateKind::Accepting;
                break;
            case 1:
                m.state_kinds[i] = StateKind::Rejecting;
                break;
            default:
                break;
        }
    }
    if (options.ensure_halting_state && n > 1) {
        bool any_halting = false;
        for (StateKind k : m.state_kinds) {
            any_halting |= k != StateKind::NonHalting;
        }
        if (!any_halting) {
            m.state_kinds[n - 1] = StateKind::Rejecting;
        }
    }
    m.initial_state = 0;

    std::uniform_int_distribution<int> bit(0, 1);
    if (options.move_style == MoveStyle::SharedVector) {
        const MoveVector shared = {static_cast<uint8_t>(bit(rng)),
                                   static_cast<uint8_t>(bit(rng))};
        m.moves.assign(n, shared);
    } else {
        for (size_t i = 0; i < n; ++i) {
            m.moves.push_back({static_cast<uint8_t>(bit(rng)), static_cast<uint8_t>(bit(rng))});
        }
    }

    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
    std::uniform_int_distribution<size_t> state_dist(0, n - 1);
    for (const SymbolTuple& tuple : one_one_tuples(options.alphabet_size)) {
        ComplexMatrix op(n, n);
        if (bit(rng) == 0) {
            // random permutation
            std::vector<size_t> perm(n);
            for (size_t i = 0; i < n; ++i) {
                perm[i] = i;
            }
            std::shuffle(perm.begin(), perm.end(), rng);
            for (size_t c = 0; c < n; ++c) {
                op.at(perm[c], c) = 1.0;
            }
        } else {
            // rotation acting on a two-state block, identity elsewhere
            op = ComplexMatrix::identity(n);
            if (n >= 2) {
                size_t i = state_dist(rng), j = state_dist(rng);
                while (j == i) {
                    j = state_dist(rng);
                }
                if (i > j) {
                    std::swap(i, j);
                }
                const double t = angle(rng);
                op.at(i, i) = std::cos(t);
                op.at(i, j) = -std::sin(t);
                op.at(j, i) = std::sin(t);
                op.at(j, j) = std::cos(t);
            }
        }
        m.operators.emplace(tuple, std::move(op));
    }
    m.validate();
    return m;
}

}  // namespace wkqfa::testing
