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

// Alphabets, complementarity relations and double-stranded end-marked tapes.
//
// A word is a sequence of opaque symbol tokens; a symbol is an index into its
// alphabet's fixed order. The working alphabet extends the input alphabet with
// the two end markers '#' and '$', which are never alphabet members. Gamma
// codes give the working alphabet a canonical indexing: letters keep their
// alphabet index, '#' is size() and '$' is size()+1.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wkqfa/errors.hpp"

namespace wkqfa {

using Symbol = uint32_t;       // index into an Alphabet
using Word = std::vector<Symbol>;
using GammaSymbol = uint32_t;  // alphabet index, or the '#'/'$' codes
using SymbolTuple = std::vector<GammaSymbol>;

inline constexpr uint64_t kDefaultComplementGuard = 1'000'000;

// Ordered finite set of distinct symbols. '#' and '$' are reserved markers and
// are rejected as members. The fixed order is used for canonical indexing of
// operator tables and for deterministic enumeration.
class Alphabet {
   public:
    Alphabet() = default;  // the empty alphabet
    explicit Alphabet(std::vector<std::string> symbols);

    size_t size() const { return symbols_.size(); }
    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    std::optional<Symbol> find(const std::string& name) const;
    Symbol symbol(const std::string& name) const;  // throws DomainError
    const std::string& name(Symbol s) const;

    // Working alphabet Gamma = V + {'#', '$'}.
    size_t gamma_size() const { return symbols_.size() + 2; }
    GammaSymbol left_marker() const { return static_cast<GammaSymbol>(symbols_.size()); }
    GammaSymbol right_marker() const { return static_cast<GammaSymbol>(symbols_.size() + 1); }
    std::string gamma_name(GammaSymbol g) const;

    // Words are parsed per character when every symbol name is a single
    // character, otherwise as comma-separated tokens. The empty string is the
    // empty word.
    Word parse_word(const std::string& text) const;
    std::string format_word(const Word& w) const;
    std::string format_tuple(const SymbolTuple& t, size_t upper_arity) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

   private:
    std::vector<std::string> symbols_;
    std::map<std::string, Symbol> index_;
};

// Finite set of ordered symbol pairs over one alphabet. Symbols with no
// complement are permitted (flagged via symbols_without_complement, not
// forbidden); whether the relation is the identity is derived, not stored.
class ComplementarityRelation {
   public:
    ComplementarityRelation() = default;  // over the empty alphabet
    ComplementarityRelation(size_t alphabet_size, std::vector<std::pair<Symbol, Symbol>> pairs);
    static ComplementarityRelation identity(size_t alphabet_size);

    size_t alphabet_size() const { return alphabet_size_; }
    bool related(Symbol a, Symbol b) const;
    std::span<const Symbol> complements_of(Symbol a) const;
    bool is_identity() const;
    std::vector<Symbol> symbols_without_complement() const;
    std::vector<std::pair<Symbol, Symbol>> pairs() const;  // sorted

   private:
    size_t alphabet_size_ = 0;
    std::vector<std::vector<Symbol>> complements_;  // per first symbol, sorted
};

// Two end-marked strands. Positions run from 0 ('#') to word length + 1 ('$').
// Construct via make_wk_tape so the complementarity invariant holds.
class DoubleTape {
   public:
    size_t upper_word_length() const { return upper_.size() - 2; }
    size_t lower_word_length() const { return lower_.size() - 2; }
    GammaSymbol upper_at(size_t pos) const { return upper_[pos]; }
    GammaSymbol lower_at(size_t pos) const { return lower_[pos]; }
    size_t upper_dollar() const { return upper_.size() - 1; }
    size_t lower_dollar() const { return lower_.size() - 1; }

   private:
    friend DoubleTape make_wk_tape(const ComplementarityRelation&, const Word&, const Word&);
    std::vector<GammaSymbol> upper_, lower_;  // markers included
};

// True iff |w1| = |w2| and every aligned pair is related.
bool is_wk_pair(const ComplementarityRelation& rho, const Word& w1, const Word& w2);

// Exactly the set {w2 : is_wk_pair(rho, w1, w2)}, enumerated in lexicographic
// order of the alphabet's fixed symbol order. A symbol with no complement
// yields the empty set; exceeding max_results raises CapacityError.
std::vector<Word> complement_strands(const ComplementarityRelation& rho, const Word& w1,
                                     uint64_t max_results = kDefaultComplementGuard);

// Product over positions of the per-symbol complement count, saturating at
// UINT64_MAX. The exact cardinality of complement_strands.
uint64_t complement_count(const ComplementarityRelation& rho, const Word& w1);

// Attaches markers; requires is_wk_pair and names the first offending
// position otherwise.
DoubleTape make_wk_tape(const ComplementarityRelation& rho, const Word& w1, const Word& w2);

// All words over an alphabet of the given size, lengths 0..max_len, in
// length-then-lexicographic order.
std::vector<Word> all_words(size_t alphabet_size, size_t max_len);

}  // namespace wkqfa
