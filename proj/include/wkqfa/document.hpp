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

// Automaton document format: a JSON text document, format_version "1", with
// kinds "mwkqfa", "multihead-dfa" and "classical-wk". Complex numbers are
// [real, imaginary] decimal arrays. Serialization is canonical (fixed key
// order, states in declaration order, operators sorted by tuple), so
// parse -> serialize -> parse is the identity on the canonical form.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "wkqfa/classical.hpp"
#include "wkqfa/quantum.hpp"

namespace wkqfa {

enum class DocumentKind : uint8_t { Mwkqfa, MultiHeadDfa, ClassicalWk };
std::string_view to_string(DocumentKind kind);

struct ReversibilityEvidenceNote {
    std::string mode;  // "bounded" or "syntactic"
    std::optional<uint32_t> max_len;
    bool pass = false;
};

struct DocumentMetadata {
    std::string name;
    std::string provenance;
    std::optional<ReversibilityEvidenceNote> reversibility;

    bool empty() const { return name.empty() && provenance.empty() && !reversibility; }
};

struct AutomatonDocument {
    DocumentMetadata metadata;
    std::variant<Mwkqfa, MultiHeadDfa, ClassicalWkAutomaton> machine;

    DocumentKind kind() const { return static_cast<DocumentKind>(machine.index()); }
    const Alphabet& alphabet() const;
    const ComplementarityRelation& rho() const;
};

// Parse diagnostic with a stable code and the offending field path.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::string code, std::string path, const std::string& message);
    const std::string& code() const { return code_; }
    const std::string& path() const { return path_; }

   private:
    std::string code_;
    std::string path_;
};

AutomatonDocument parse_document(std::string_view text);
std::string serialize_document(const AutomatonDocument& doc);

AutomatonDocument load_document_file(const std::string& path);
void write_document_file(const std::string& path, const AutomatonDocument& doc);

}  // namespace wkqfa
