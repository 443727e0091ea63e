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

#include "wkqfa/harness.hpp"

#include <algorithm>
#include <cmath>

#include "wkqfa/embeddings.hpp"

namespace wkqfa {

bool oracle_ww(const Word& w) {
    if (w.size() % 2 != 0) {
        return false;
    }
    const size_t half = w.size() / 2;
    return std::equal(w.begin(), w.begin() + half, w.begin() + half);
}

bool oracle_yao_rivest(const Word& w) {
    constexpr Symbol kStar = 2, kBar = 3;
    // Split on '|' into blocks; each block must be w '*' x with w, x over
    // {a, b}. Anything else (including a trailing separator) is malformed.
    struct Block {
        Word prefix, suffix;
    };
    std::vector<Block> blocks;
    if (!w.empty()) {
        Block current;
        bool seen_star = false;
        auto finish = [&]() {
            if (!seen_star) {
                return false;
            }
            blocks.push_back(std::move(current));
            current = Block{};
            seen_star = false;
            return true;
        };
        for (Symbol s : w) {
            if (s == kBar) {
                if (!finish()) {
                    return false;
                }
            } else if (s == kStar) {
                if (seen_star) {
                    return false;
                }
                seen_star = true;
            } else {
                (seen_star ? current.suffix : current.prefix).push_back(s);
            }
        }
        if (!finish()) {
            return false;
        }
    }
    for (size_t i = 0; i < blocks.size(); ++i) {
        for (size_t j = i + 1; j < blocks.size(); ++j) {
            if (blocks[i].prefix == blocks[j].prefix && blocks[i].suffix != blocks[j].suffix) {
                return true;
            }
        }
    }
    return false;
}

bool oracle_regular(const MultiHeadDfa& d, const Word& w) {
    if (d.heads != 1) {
        throw ValidationError("oracle_regular requires a single-head machine");
    }
    return run_1dfa_k(d, w).accepted;
}

bool is_total_dfa(const MultiHeadDfa& d) {
    if (d.heads != 1) {
        return false;
    }
    for (uint32_t q = 0; q < d.state_count(); ++q) {
        for (GammaSymbol g = 0; g <= d.alphabet.left_marker(); ++g) {
            if (d.find_transition(q, {g}) == nullptr) {
                return false;
            }
        }
    }
    return true;
}

const std::vector<LanguageOracle>& builtin_oracles() {
    static const std::vector<LanguageOracle> oracles = [] {
        std::vector<LanguageOracle> v;
        v.push_back({"ww", Alphabet({"a", "b"}),
                     "{ ww : w over {a,b} } -- even length, first half equals second half",
                     oracle_ww});
        v.push_back({"yao-rivest", Alphabet({"a", "b", "*", "|"}),
                     "blocks w*x separated by '|', w and x over {a,b}; member iff two blocks "
                     "share w but differ in x ('|' is this tool's block separator; malformed "
                     "structure is non-membership)",
                     oracle_yao_rivest});
        v.push_back({"parity", Alphabet({"a", "b"}),
                     "words over {a,b} with an even number of a's",
                     [](const Word& w) {
                         size_t count = std::count(w.begin(), w.end(), Symbol{0});
                         return count % 2 == 0;
                     }});
        v.push_back({"anbn", Alphabet({"a", "b"}),
                     "{ a^n b^n : n >= 0 }",
                     [](const Word& w) {
                         if (w.size() % 2 != 0) {
                             return false;
                         }
                         const size_t half = w.size() / 2;
                         return std::all_of(w.begin(), w.begin() + half,
                                            [](Symbol s) { return s == 0; }) &&
                                std::all_of(w.begin() + half, w.end(),
                                            [](Symbol s) { return s == 1; });
                     }});
        return v;
    }();
    return oracles;
}

const LanguageOracle* find_oracle(std::string_view name) {
    for (const LanguageOracle& o : builtin_oracles()) {
        if (o.name == name) {
            return &o;
        }
    }
    return nullptr;
}

namespace {

void require_same_alphabet(const Alphabet& machine, const Alphabet& oracle) {
    if (!(machine == oracle)) {
        throw ValidationError("machine and oracle alphabets differ");
    }
}

}  // namespace

ComparisonReport exhaustive_compare(const Mwkqfa& m, const LanguageOracle& oracle,
                                    uint64_t max_len, double cutpoint, const RunParams& params,
                                    uint64_t work_guard) {
    require_same_alphabet(m.alphabet, oracle.alphabet);
    ComparisonReport report;
    report.cutpoint = cutpoint;
    report.max_len = max_len;
    report.run_params = params;
    uint64_t work = 0;
    for (const Word& w : all_words(m.alphabet.size(), max_len)) {
        work += std::max<uint64_t>(1, complement_count(m.rho, w));
        if (work > work_guard) {
            throw CapacityError("comparison sweep exceeds the work guard of " +
                                std::to_string(work_guard) + " runs");
        }
        const AcceptanceProfile profile = acceptance_profile(m, w, params);
        for (const ProfileEntry& e : profile.entries) {
            report.max_residual = std::max(report.max_residual, e.outcome.p_residual);
        }
        ++report.words_tested;
        const bool machine_accepts = profile.best_p_acc > cutpoint;
        const bool oracle_accepts = oracle.decide(w);
        if (machine_accepts != oracle_accepts) {
            report.disagreements.push_back({w, oracle_accepts, profile.best_p_acc});
        }
    }
    return report;
}

ComparisonReport exhaustive_compare_classical(const MultiHeadDfa& d, const LanguageOracle& oracle,
                                              uint64_t max_len) {
    require_same_alphabet(d.alphabet, oracle.alphabet);
    ComparisonReport report;
    report.cutpoint = 0.5;
    report.max_len = max_len;
    for (const Word& w : all_words(d.alphabet.size(), max_len)) {
        ++report.words_tested;
        const bool machine_accepts = run_1dfa_k(d, w).accepted;
        const bool oracle_accepts = oracle.decide(w);
        if (machine_accepts != oracle_accepts) {
            report.disagreements.push_back({w, oracle_accepts, machine_accepts ? 1.0 : 0.0});
        }
    }
    return report;
}

ComparisonReport exhaustive_compare_wk(const ClassicalWkAutomaton& a,
                                       const LanguageOracle& oracle, uint64_t max_len,
                                       uint64_t complement_guard) {
    require_same_alphabet(a.alphabet, oracle.alphabet);
    ComparisonReport report;
    report.cutpoint = 0.5;
    report.max_len = max_len;
    for (const Word& w : all_words(a.alphabet.size(), max_len)) {
        ++report.words_tested;
        const bool machine_accepts = run_wk_classical(a, w, complement_guard);
        const bool oracle_accepts = oracle.decide(w);
        if (machine_accepts != oracle_accepts) {
            report.disagreements.push_back({w, oracle_accepts, machine_accepts ? 1.0 : 0.0});
        }
    }
    return report;
}

Mwkqfa make_rotor(double theta) {
    Mwkqfa m;
    m.alphabet = Alphabet({"a"});
    m.rho = ComplementarityRelation::identity(1);
    m.state_names = {"q0", "q1", "q_acc", "q_rej"};
    m.state_kinds = {StateKind::NonHalting, StateKind::NonHalting, StateKind::Accepting,
                     StateKind::Rejecting};
    m.initial_state = 0;
    m.upper_heads = 1;
    m.lower_heads = 1;
    m.moves = {{1, 1}, {1, 1}, {0, 0}, {0, 0}};

    const GammaSymbol a = 0, hash = m.alphabet.left_marker(), dollar = m.alphabet.right_marker();

    m.operators.emplace(SymbolTuple{hash, hash}, ComplexMatrix::identity(4));

    ComplexMatrix rotate = ComplexMatrix::identity(4);
    rotate.at(0, 0) = std::cos(theta);
    rotate.at(0, 1) = -std::sin(theta);
    rotate.at(1, 0) = std::sin(theta);
    rotate.at(1, 1) = std::cos(theta);
    m.operators.emplace(SymbolTuple{a, a}, std::move(rotate));

    // q0 -> accept, q1 -> reject; swapped back for unitarity.
    ComplexMatrix finish(4, 4);
    finish.at(2, 0) = 1.0;
    finish.at(3, 1) = 1.0;
    finish.at(0, 2) = 1.0;
    finish.at(1, 3) = 1.0;
    m.operators.emplace(SymbolTuple{dollar, dollar}, std::move(finish));

    m.validate();
    return m;
}

Mwkqfa make_interference_sample() {
    const double r = 1.0 / std::sqrt(2.0);
    Mwkqfa m;
    m.alphabet = Alphabet({"a"});
    m.rho = ComplementarityRelation::identity(1);
    m.state_names = {"q0", "q_up", "q_down", "q_acc", "q_rej"};
    m.state_kinds = {StateKind::NonHalting, StateKind::NonHalting, StateKind::NonHalting,
                     StateKind::Accepting, StateKind::Rejecting};
    m.initial_state = 0;
    m.upper_heads = 1;
    m.lower_heads = 1;
    m.moves = {{0, 0}, {1, 1}, {1, 1}, {0, 0}, {0, 0}};

    const GammaSymbol a = 0, hash = m.alphabet.left_marker();

    // Split: |q0> -> r|q_up> + r|q_down>.
    ComplexMatrix split(5, 5);
    split.at(1, 0) = r;
    split.at(2, 0) = r;
    split.at(0, 1) = 1.0;
    split.at(1, 2) = r;
    split.at(2, 2) = -r;
    split.at(3, 3) = 1.0;
    split.at(4, 4) = 1.0;
    m.operators.emplace(SymbolTuple{hash, hash}, std::move(split));

    // Merge: both branches hit q_acc, with opposite signs.
    ComplexMatrix merge(5, 5);
    merge.at(0, 0) = 1.0;
    merge.at(3, 1) = r;
    merge.at(4, 1) = r;
    merge.at(3, 2) = -r;
    merge.at(4, 2) = r;
    merge.at(1, 3) = 1.0;
    merge.at(2, 4) = 1.0;
    m.operators.emplace(SymbolTuple{a, a}, std::move(merge));

    m.validate();
    return m;
}

MultiHeadDfa make_parity_dfa() {
    MultiHeadDfa d;
    d.alphabet = Alphabet({"a", "b"});
    d.state_names = {"even", "odd"};
    d.accepting = {true, false};
    d.initial_state = 0;
    d.heads = 1;
    const GammaSymbol a = 0, b = 1, hash = d.alphabet.left_marker();
    d.transitions = {
        {0, {hash}, 0, {1}},
        {0, {a}, 1, {1}},
        {0, {b}, 0, {1}},
        {1, {hash}, 1, {1}},
        {1, {a}, 0, {1}},
        {1, {b}, 1, {1}},
    };
    d.validate();
    return d;
}

MultiHeadDfa make_anbn_dfa() {
    MultiHeadDfa d;
    d.alphabet = Alphabet({"a", "b"});
    d.state_names = {"s0", "scan", "match", "flush", "edge", "acc"};
    d.accepting = {false, false, false, false, false, true};
    d.initial_state = 0;
    d.heads = 2;
    const GammaSymbol a = 0, b = 1;
    const GammaSymbol hash = d.alphabet.left_marker(), dollar = d.alphabet.right_marker();
    // Head 1 walks the a-block alone; the first b starts head 2 from '#', so
    // the matched loop is entered on a tuple it never reads again. Acceptance
    // needs head 2 to sit exactly one cell past the last a when head 1 is on
    // '$', which the extra 'flush' step verifies.
    d.transitions = {
        {d.state_index("s0"), {hash, hash}, d.state_index("scan"), {1, 0}},
        {d.state_index("scan"), {a, hash}, d.state_index("scan"), {1, 0}},
        {d.state_index("scan"), {b, hash}, d.state_index("match"), {1, 1}},
        {d.state_index("match"), {b, a}, d.state_index("match"), {1, 1}},
        {d.state_index("match"), {dollar, a}, d.state_index("flush"), {0, 1}},
        {d.state_index("flush"), {dollar, b}, d.state_index("acc"), {0, 0}},
        {d.state_index("scan"), {dollar, hash}, d.state_index("edge"), {0, 1}},
        {d.state_index("edge"), {dollar, dollar}, d.state_index("acc"), {0, 0}},
    };
    d.validate();
    return d;
}

ClassicalWkAutomaton make_anbn_wk() {
    ClassicalWkAutomaton a;
    a.alphabet = Alphabet({"a", "b"});
    a.rho = ComplementarityRelation::identity(2);
    a.state_names = {"q0", "q1", "q2"};
    a.final_states = {false, false, true};
    a.initial_state = 0;
    const Word A = {0}, B = {1}, none = {};
    a.rules = {
        {0, A, none, 0},  // upper head eats the a-block
        {0, none, none, 1},
        {1, B, A, 1},     // matched pair: b on top, a below
        {1, none, none, 2},
        {2, none, B, 2},  // lower head flushes the b-block
    };
    a.validate();
    return a;
}

std::vector<Sample> sample_library() {
    std::vector<Sample> samples;

    auto rotor_expected = [](double theta) {
        return [theta](const Word& w) {
            const double c = std::cos(static_cast<double>(w.size()) * theta);
            return c * c;
        };
    };
    const double pi = std::acos(-1.0);
    samples.push_back({"rotor_0", "unary rotation by 0: accepts every a^n with probability 1",
                       make_rotor(0.0), rotor_expected(0.0)});
    samples.push_back({"rotor_pi_6", "unary rotation by pi/6: p_acc(a^n) = cos^2(n pi/6)",
                       make_rotor(pi / 6.0), rotor_expected(pi / 6.0)});
    samples.push_back({"rotor_pi_4", "unary rotation by pi/4: p_acc(a^n) = cos^2(n pi/4)",
                       make_rotor(pi / 4.0), rotor_expected(pi / 4.0)});
    samples.push_back({"rotor_pi_2", "unary rotation by pi/2: p_acc(a^n) = cos^2(n pi/2)",
                       make_rotor(pi / 2.0), rotor_expected(pi / 2.0)});

    const LanguageOracle* parity = find_oracle("parity");
    samples.push_back({"parity_embedded",
                       "two-head quantum embedding of the reversible even-a's automaton",
                       reversible_to_quantum(make_parity_dfa(),
                                             check_reversibility(make_parity_dfa(),
                                                                 ReversibilityMode::Syntactic))
                           .machine,
                       [parity](const Word& w) { return parity->decide(w) ? 1.0 : 0.0; }});

    const LanguageOracle* anbn = find_oracle("anbn");
    samples.push_back({"anbn_embedded",
                       "three-head quantum embedding of the reversible a^n b^n automaton",
                       reversible_to_quantum(make_anbn_dfa(),
                                             check_reversibility(make_anbn_dfa(),
                                                                 ReversibilityMode::Syntactic))
                           .machine,
                       [anbn](const Word& w) { return anbn->decide(w) ? 1.0 : 0.0; }});

    samples.push_back({"interference",
                       "splits into two branches that both reach the accepting state on 'a', "
                       "with amplitudes 1/sqrt(2) and -1/sqrt(2): p_acc = 0 by cancellation "
                       "where an OR over classical paths would accept",
                       make_interference_sample(), [](const Word&) { return 0.0; }});

    return samples;
}

}  // namespace wkqfa
