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

#include "wkqfa/symbols.hpp"

#include <algorithm>
#include <sstream>

namespace wkqfa {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    for (size_t i = 0; i < symbols_.size(); ++i) {
        const std::string& s = symbols_[i];
        if (s.empty()) {
            throw ValidationError("alphabet symbol " + std::to_string(i) + " is empty");
        }
        if (s == "#" || s == "$") {
            throw ValidationError("'" + s + "' is a reserved end marker and cannot be an alphabet symbol");
        }
        if (!index_.emplace(s, static_cast<Symbol>(i)).second) {
            throw ValidationError("duplicate alphabet symbol '" + s + "'");
        }
    }
}

std::optional<Symbol> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Symbol Alphabet::symbol(const std::string& name) const {
    auto s = find(name);
    if (!s) {
        throw DomainError("symbol '" + name + "' is not in the alphabet");
    }
    return *s;
}

const std::string& Alphabet::name(Symbol s) const {
    if (s >= symbols_.size()) {
        throw DomainError("symbol index " + std::to_string(s) + " is out of range");
    }
    return symbols_[s];
}

std::string Alphabet::gamma_name(GammaSymbol g) const {
    if (g < symbols_.size()) {
        return symbols_[g];
    }
    if (g == left_marker()) {
        return "#";
    }
    if (g == right_marker()) {
        return "$";
    }
    throw DomainError("working-alphabet code " + std::to_string(g) + " is out of range");
}

Word Alphabet::parse_word(const std::string& text) const {
    Word w;
    if (text.empty()) {
        return w;
    }
    bool single_char = std::all_of(symbols_.begin(), symbols_.end(),
                                   [](const std::string& s) { return s.size() == 1; });
    if (single_char) {
        w.reserve(text.size());
        for (char c : text) {
            w.push_back(symbol(std::string(1, c)));
        }
        return w;
    }
    std::stringstream in{text};
    std::string token;
    while (std::getline(in, token, ',')) {
        w.push_back(symbol(token));
    }
    return w;
}

std::string Alphabet::format_word(const Word& w) const {
    bool single_char = std::all_of(symbols_.begin(), symbols_.end(),
                                   [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!single_char && i > 0) {
            out += ',';
        }
        out += name(w[i]);
    }
    return out;
}

std::string Alphabet::format_tuple(const SymbolTuple& t, size_t upper_arity) const {
    std::string out = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i == upper_arity && upper_arity < t.size()) {
            out += " | ";
        } else if (i > 0) {
            out += ",";
        }
        out += gamma_name(t[i]);
    }
    out += ")";
    return out;
}

ComplementarityRelation::ComplementarityRelation(size_t alphabet_size,
                                                 std::vector<std::pair<Symbol, Symbol>> pairs)
    : alphabet_size_(alphabet_size), complements_(alphabet_size) {
    for (const auto& [a, b] : pairs) {
        if (a >= alphabet_size_ || b >= alphabet_size_) {
            throw DomainError("complementarity pair (" + std::to_string(a) + "," +
                              std::to_string(b) + ") uses a symbol outside the alphabet");
        }
        complements_[a].push_back(b);
    }
    for (auto& c : complements_) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
}

ComplementarityRelation ComplementarityRelation::identity(size_t alphabet_size) {
    std::vector<std::pair<Symbol, Symbol>> pairs;
    pairs.reserve(alphabet_size);
    for (Symbol s = 0; s < alphabet_size; ++s) {
        pairs.emplace_back(s, s);
    }
    return ComplementarityRelation(alphabet_size, std::move(pairs));
}

bool ComplementarityRelation::related(Symbol a, Symbol b) const {
    if (a >= alphabet_size_ || b >= alphabet_size_) {
        throw DomainError("symbol outside the relation's alphabet");
    }
    const auto& c = complements_[a];
    return std::binary_search(c.begin(), c.end(), b);
}

std::span<const Symbol> ComplementarityRelation::complements_of(Symbol a) const {
    if (a >= alphabet_size_) {
        throw DomainError("symbol outside the relation's alphabet");
    }
    return complements_[a];
}

bool ComplementarityRelation::is_identity() const {
    for (Symbol s = 0; s < alphabet_size_; ++s) {
        if (complements_[s].size() != 1 || complements_[s][0] != s) {
            return false;
        }
    }
    return true;
}

std::vector<Symbol> ComplementarityRelation::symbols_without_complement() const {
    std::vector<Symbol> out;
    for (Symbol s = 0; s < alphabet_size_; ++s) {
        if (complements_[s].empty()) {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<std::pair<Symbol, Symbol>> ComplementarityRelation::pairs() const {
    std::vector<std::pair<Symbol, Symbol>> out;
    for (Symbol s = 0; s < alphabet_size_; ++s) {
        for (Symbol b : complements_[s]) {
            out.emplace_back(s, b);
        }
    }
    return out;
}

bool is_wk_pair(const ComplementarityRelation& rho, const Word& w1, const Word& w2) {
    if (w1.size() != w2.size()) {
        return false;
    }
    for (size_t i = 0; i < w1.size(); ++i) {
        if (!rho.related(w1[i], w2[i])) {
            return false;
        }
    }
    return true;
}

uint64_t complement_count(const ComplementarityRelation& rho, const Word& w1) {
    uint64_t count = 1;
    for (Symbol s : w1) {
        uint64_t choices = rho.complements_of(s).size();
        if (choices == 0) {
            return 0;
        }
        if (count > UINT64_MAX / choices) {
            return UINT64_MAX;
        }
        count *= choices;
    }
    return count;
}

std::vector<Word> complement_strands(const ComplementarityRelation& rho, const Word& w1,
                                     uint64_t max_results) {
    uint64_t count = complement_count(rho, w1);
    if (count > max_results) {
        throw CapacityError("complement enumeration would produce " + std::to_string(count) +
                            " strands, above the guard of " + std::to_string(max_results));
    }
    if (count == 0) {
        return {};
    }
    std::vector<Word> out;
    out.reserve(count);
    std::vector<size_t> odometer(w1.size(), 0);
    for (uint64_t n = 0; n < count; ++n) {
        Word w2;
        w2.reserve(w1.size());
        for (size_t i = 0; i < w1.size(); ++i) {
            w2.push_back(rho.complements_of(w1[i])[odometer[i]]);
        }
        out.push_back(std::move(w2));
        for (size_t i = w1.size(); i-- > 0;) {
            if (++odometer[i] < rho.complements_of(w1[i]).size()) {
                break;
            }
            odometer[i] = 0;
        }
    }
    return out;
}

DoubleTape make_wk_tape(const ComplementarityRelation& rho, const Word& w1, const Word& w2) {
    if (w1.size() != w2.size()) {
        throw ValidationError("strand lengths differ (" + std::to_string(w1.size()) + " vs " +
                              std::to_string(w2.size()) + ")");
    }
    for (size_t i = 0; i < w1.size(); ++i) {
        if (!rho.related(w1[i], w2[i])) {
            throw ValidationError("strands are not complementary at position " + std::to_string(i));
        }
    }
    const GammaSymbol left = static_cast<GammaSymbol>(rho.alphabet_size());
    const GammaSymbol right = left + 1;
    DoubleTape tape;
    tape.upper_.reserve(w1.size() + 2);
    tape.upper_.push_back(left);
    tape.upper_.insert(tape.upper_.end(), w1.begin(), w1.end());
    tape.upper_.push_back(right);
    tape.lower_.reserve(w2.size() + 2);
    tape.lower_.push_back(left);
    tape.lower_.insert(tape.lower_.end(), w2.begin(), w2.end());
    tape.lower_.push_back(right);
    return tape;
}

std::vector<Word> all_words(size_t alphabet_size, size_t max_len) {
    std::vector<Word> out;
    out.emplace_back();  // the empty word
    if (alphabet_size == 0) {
        return out;
    }
    for (size_t len = 1; len <= max_len; ++len) {
        Word w(len, 0);
        while (true) {
            out.push_back(w);
            size_t i = len;
            while (i-- > 0) {
                if (++w[i] < alphabet_size) {
                    break;
                }
                w[i] = 0;
                if (i == 0) {
                    goto next_length;
                }
            }
        }
    next_length:;
    }
    return out;
}

}  // namespace wkqfa
