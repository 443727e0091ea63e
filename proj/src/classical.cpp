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

#include "wkqfa/classical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace wkqfa {

namespace {

uint32_t index_of_state(const std::vector<std::string>& names, const std::string& name) {
    for (uint32_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
            return i;
        }
    }
    throw DomainError("state '" + name + "' is not declared");
}

void check_state_names(const std::vector<std::string>& names) {
    if (names.empty()) {
        throw ValidationError("machine has no states");
    }
    for (size_t i = 0; i < names.size(); ++i) {
        for (size_t j = i + 1; j < names.size(); ++j) {
            if (names[i] == names[j]) {
                throw ValidationError("duplicate state name '" + names[i] + "'");
            }
        }
    }
}

// The word with end markers attached, as gamma codes.
std::vector<GammaSymbol> marked(const Alphabet& alphabet, const Word& w) {
    std::vector<GammaSymbol> cells;
    cells.reserve(w.size() + 2);
    cells.push_back(alphabet.left_marker());
    for (Symbol s : w) {
        if (s >= alphabet.size()) {
            throw DomainError("word symbol index out of range");
        }
        cells.push_back(s);
    }
    cells.push_back(alphabet.right_marker());
    return cells;
}

}  // namespace

uint32_t MultiHeadDfa::state_index(const std::string& name) const {
    return index_of_state(state_names, name);
}

void MultiHeadDfa::validate() const {
    check_state_names(state_names);
    if (accepting.size() != state_names.size()) {
        throw ValidationError("accepting flags do not match the state list");
    }
    if (initial_state >= state_names.size()) {
        throw ValidationError("initial state index out of range");
    }
    if (heads < 1) {
        throw ValidationError("head count must be at least 1");
    }
    const GammaSymbol dollar = alphabet.right_marker();
    std::set<std::pair<uint32_t, SymbolTuple>> seen;
    for (size_t i = 0; i < transitions.size(); ++i) {
        const ClassicalTransition& t = transitions[i];
        if (t.from >= state_names.size() || t.to >= state_names.size()) {
            throw ValidationError("transition " + std::to_string(i) +
                                  " references an undeclared state");
        }
        if (t.read.size() != heads || t.move.size() != heads) {
            throw ValidationError("transition " + std::to_string(i) + " has the wrong arity");
        }
        for (size_t h = 0; h < heads; ++h) {
            if (t.read[h] >= alphabet.gamma_size()) {
                throw ValidationError("transition " + std::to_string(i) +
                                      " reads a symbol outside the working alphabet");
            }
            if (t.move[h] > 1) {
                throw ValidationError("transition " + std::to_string(i) +
                                      " has a move entry outside {0,1}");
            }
            if (t.read[h] == dollar && t.move[h] != 0) {
                throw ValidationError("transition " + std::to_string(i) + " moves head " +
                                      std::to_string(h + 1) + " past '$'");
            }
        }
        if (!seen.emplace(t.from, t.read).second) {
            throw ValidationError("duplicate transition for state '" + state_names[t.from] +
                                  "' on tuple " + alphabet.format_tuple(t.read, heads));
        }
    }
}

const ClassicalTransition* MultiHeadDfa::find_transition(uint32_t state,
                                                         const SymbolTuple& read) const {
    for (const ClassicalTransition& t : transitions) {
        if (t.from == state && t.read == read) {
            return &t;
        }
    }
    return nullptr;
}

ClassicalRun run_1dfa_k(const MultiHeadDfa& a, const Word& w, uint64_t step_cap) {
    a.validate();
    const std::vector<GammaSymbol> cells = marked(a.alphabet, w);

    std::map<std::pair<uint32_t, SymbolTuple>, const ClassicalTransition*> lookup;
    for (const ClassicalTransition& t : a.transitions) {
        lookup.emplace(std::make_pair(t.from, t.read), &t);
    }

    ClassicalRun result;
    ClassicalConfiguration c;
    c.state = a.initial_state;
    c.positions.assign(a.heads, 0);
    result.trace.push_back(c);

    for (uint64_t step = 0; step < step_cap; ++step) {
        SymbolTuple read;
        read.reserve(a.heads);
        for (uint32_t pos : c.positions) {
            read.push_back(cells[pos]);
        }
        auto it = lookup.find(std::make_pair(c.state, read));
        if (it == lookup.end()) {
            result.halted = true;
            result.accepted = a.accepting[c.state];
            return result;
        }
        const ClassicalTransition& t = *it->second;
        c.state = t.to;
        for (size_t h = 0; h < a.heads; ++h) {
            c.positions[h] += t.move[h];
        }
        result.trace.push_back(c);
    }
    // Step cap reached: some cycle never leaves the transition map, which is
    // only possible when every move on the cycle is zero.
    result.halted = false;
    result.accepted = false;
    return result;
}

std::string_view to_string(ReversibilityMode mode) {
    return mode == ReversibilityMode::Bounded ? "bounded" : "syntactic";
}

namespace {

std::string describe_transition(const MultiHeadDfa& a, size_t index) {
    const ClassicalTransition& t = a.transitions[index];
    std::ostringstream out;
    out << "#" << index << " " << a.state_names[t.from] << " "
        << a.alphabet.format_tuple(t.read, a.heads) << " -> " << a.state_names[t.to] << " (";
    for (size_t h = 0; h < t.move.size(); ++h) {
        out << (h ? "," : "") << int(t.move[h]);
    }
    out << ")";
    return out.str();
}

// Indices of transitions that could have produced the configuration: target
// matches, every head fits on the tape after backing up by the transition's
// move, and the backed-up cells read the transition's tuple.
std::vector<size_t> admissible_predecessors(const MultiHeadDfa& a,
                                            const std::vector<GammaSymbol>& cells,
                                            const ClassicalConfiguration& c) {
    std::vector<size_t> matches;
    for (size_t i = 0; i < a.transitions.size(); ++i) {
        const ClassicalTransition& t = a.transitions[i];
        if (t.to != c.state) {
            continue;
        }
        bool fits = true;
        for (size_t h = 0; h < a.heads && fits; ++h) {
            if (c.positions[h] < t.move[h]) {
                fits = false;
                break;
            }
            fits = cells[c.positions[h] - t.move[h]] == t.read[h];
        }
        if (fits) {
            matches.push_back(i);
        }
    }
    return matches;
}

}  // namespace

ReversibilityReport check_reversibility(const MultiHeadDfa& a, ReversibilityMode mode,
                                        uint32_t max_len) {
    a.validate();
    ReversibilityReport report;
    report.mode = mode;
    report.max_len = max_len;

    // Condition (1): transitions entering the same state share one move
    // vector. Exact and word-independent.
    for (size_t i = 0; i < a.transitions.size(); ++i) {
        for (size_t j = i + 1; j < a.transitions.size(); ++j) {
            const ClassicalTransition& ti = a.transitions[i];
            const ClassicalTransition& tj = a.transitions[j];
            if (ti.to == tj.to && ti.move != tj.move) {
                ReversibilityViolation v;
                v.detail = "transitions " + describe_transition(a, i) + " and " +
                           describe_transition(a, j) + " enter '" + a.state_names[ti.to] +
                           "' with different move vectors";
                v.transitions = {i, j};
                report.condition1.push_back(std::move(v));
            }
        }
    }

    if (mode == ReversibilityMode::Syntactic) {
        // Two transitions into the same state can both match a configuration
        // unless some head they read at the same offset sees different
        // symbols. Sufficient for every word, so a pass certifies condition
        // (2) unconditionally.
        for (size_t i = 0; i < a.transitions.size(); ++i) {
            for (size_t j = i + 1; j < a.transitions.size(); ++j) {
                const ClassicalTransition& ti = a.transitions[i];
                const ClassicalTransition& tj = a.transitions[j];
                if (ti.to != tj.to) {
                    continue;
                }
                bool contradictory = false;
                for (size_t h = 0; h < a.heads; ++h) {
                    if (ti.move[h] == tj.move[h] && ti.read[h] != tj.read[h]) {
                        contradictory = true;
                        break;
                    }
                }
                if (!contradictory) {
                    ReversibilityViolation v;
                    v.detail = "transitions " + describe_transition(a, i) + " and " +
                               describe_transition(a, j) +
                               " into '" + a.state_names[ti.to] +
                               "' are simultaneously matchable";
                    v.transitions = {i, j};
                    report.condition2.push_back(std::move(v));
                }
            }
        }
    } else {
        // Enumerate the configurations reachable from initial configurations
        // of every word up to the bound; each must admit at most one
        // predecessor transition. Each (state, transition set) pair is
        // reported once, with the first witness found.
        std::set<std::pair<uint32_t, std::vector<size_t>>> reported;
        for (const Word& w : all_words(a.alphabet.size(), max_len)) {
            const std::vector<GammaSymbol> cells = marked(a.alphabet, w);
            // A trace longer than the configuration count has cycled and
            // cannot reach anything new.
            uint64_t cap = a.state_count();
            for (uint32_t h = 0; h < a.heads && cap < (uint64_t{1} << 40); ++h) {
                cap *= w.size() + 2;
            }
            const ClassicalRun r = run_1dfa_k(a, w, cap + 1);
            std::set<ClassicalConfiguration> seen;
            for (const ClassicalConfiguration& c : r.trace) {
                if (!seen.insert(c).second) {
                    continue;
                }
                std::vector<size_t> matches = admissible_predecessors(a, cells, c);
                if (matches.size() < 2) {
                    continue;
                }
                if (!reported.emplace(c.state, matches).second) {
                    continue;
                }
                ReversibilityViolation v;
                std::ostringstream detail;
                detail << "configuration (" << a.state_names[c.state] << ", (";
                for (size_t h = 0; h < c.positions.size(); ++h) {
                    detail << (h ? "," : "") << c.positions[h];
                }
                detail << ")) of word '" << a.alphabet.format_word(w)
                       << "' admits " << matches.size() << " predecessor transitions";
                v.detail = detail.str();
                v.transitions = matches;
                v.witness = w;
                v.configuration = c;
                report.condition2.push_back(std::move(v));
            }
        }
    }

    report.pass = report.condition1.empty() && report.condition2.empty();
    return report;
}

uint32_t ClassicalWkAutomaton::state_index(const std::string& name) const {
    return index_of_state(state_names, name);
}

void ClassicalWkAutomaton::validate() const {
    check_state_names(state_names);
    if (final_states.size() != state_names.size()) {
        throw ValidationError("final flags do not match the state list");
    }
    if (initial_state >= state_names.size()) {
        throw ValidationError("initial state index out of range");
    }
    for (size_t i = 0; i < rules.size(); ++i) {
        const WkRule& r = rules[i];
        if (r.from >= state_names.size() || r.to >= state_names.size()) {
            throw ValidationError("rule " + std::to_string(i) + " references an undeclared state");
        }
        for (Symbol s : r.upper) {
            if (s >= alphabet.size()) {
                throw ValidationError("rule " + std::to_string(i) +
                                      " reads a symbol outside the alphabet");
            }
        }
        for (Symbol s : r.lower) {
            if (s >= alphabet.size()) {
                throw ValidationError("rule " + std::to_string(i) +
                                      " reads a symbol outside the alphabet");
            }
        }
    }
}

namespace {

bool matches_at(const Word& haystack, size_t offset, const Word& chunk) {
    if (offset + chunk.size() > haystack.size()) {
        return false;
    }
    return std::equal(chunk.begin(), chunk.end(), haystack.begin() + offset);
}

}  // namespace

bool run_wk_classical(const ClassicalWkAutomaton& a, const Word& w1, uint64_t complement_guard) {
    a.validate();
    for (Symbol s : w1) {
        if (s >= a.alphabet.size()) {
            throw DomainError("word symbol index out of range");
        }
    }
    for (const Word& w2 : complement_strands(a.rho, w1, complement_guard)) {
        struct Node {
            uint32_t state;
            size_t upper, lower;
            auto operator<=>(const Node&) const = default;
        };
        std::set<Node> visited;
        std::deque<Node> frontier;
        frontier.push_back({a.initial_state, 0, 0});
        visited.insert(frontier.front());
        while (!frontier.empty()) {
            Node node = frontier.front();
            frontier.pop_front();
            if (node.upper == w1.size() && node.lower == w2.size() &&
                a.final_states[node.state]) {
                return true;
            }
            for (const WkRule& r : a.rules) {
                if (r.from != node.state) {
                    continue;
                }
                if (!matches_at(w1, node.upper, r.upper) || !matches_at(w2, node.lower, r.lower)) {
                    continue;
                }
                Node next{r.to, node.upper + r.upper.size(), node.lower + r.lower.size()};
                if (visited.insert(next).second) {
                    frontier.push_back(next);
                }
            }
        }
    }
    return false;
}

}  // namespace wkqfa
