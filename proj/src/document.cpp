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

#include "wkqfa/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wkqfa {

using ojson = nlohmann::ordered_json;

std::string_view to_string(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::Mwkqfa:
            return "mwkqfa";
        case DocumentKind::MultiHeadDfa:
            return "multihead-dfa";
        case DocumentKind::ClassicalWk:
            return "classical-wk";
    }
    return "unknown";
}

const Alphabet& AutomatonDocument::alphabet() const {
    return std::visit([](const auto& m) -> const Alphabet& { return m.alphabet; }, machine);
}

const ComplementarityRelation& AutomatonDocument::rho() const {
    if (const Mwkqfa* m = std::get_if<Mwkqfa>(&machine)) {
        return m->rho;
    }
    if (const ClassicalWkAutomaton* m = std::get_if<ClassicalWkAutomaton>(&machine)) {
        return m->rho;
    }
    throw ValidationError("a multihead-dfa document has no complementarity relation");
}

ParseError::ParseError(std::string code, std::string path, const std::string& message)
    : std::runtime_error(path.empty() ? "[" + code + "] " + message
                                      : "[" + code + "] " + path + ": " + message),
      code_(std::move(code)),
      path_(std::move(path)) {}

namespace {

[[noreturn]] void fail(const std::string& code, const std::string& path,
                       const std::string& message) {
    throw ParseError(code, path, message);
}

const ojson& require(const ojson& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail("missing-field", path.empty() ? key : path + "." + key, "field is required");
    }
    return *it;
}

std::string child(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, size_t index) {
    return path + "[" + std::to_string(index) + "]";
}

std::string get_string(const ojson& j, const std::string& path) {
    if (!j.is_string()) {
        fail("bad-type", path, "expected a string");
    }
    return j.get<std::string>();
}

bool get_bool(const ojson& j, const std::string& path) {
    if (!j.is_boolean()) {
        fail("bad-type", path, "expected a boolean");
    }
    return j.get<bool>();
}

uint64_t get_uint(const ojson& j, const std::string& path) {
    if (!j.is_number_unsigned()) {
        fail("bad-type", path, "expected a non-negative integer");
    }
    return j.get<uint64_t>();
}

const ojson& get_array(const ojson& j, const std::string& path) {
    if (!j.is_array()) {
        fail("bad-type", path, "expected an array");
    }
    return j;
}

const ojson& get_object(const ojson& j, const std::string& path) {
    if (!j.is_object()) {
        fail("bad-type", path, "expected an object");
    }
    return j;
}

Amplitude parse_complex(const ojson& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail("bad-complex", path, "expected a [real, imaginary] pair of decimal numbers");
    }
    return Amplitude{j[0].get<double>(), j[1].get<double>()};
}

Alphabet parse_alphabet(const ojson& j, const std::string& path) {
    const ojson& arr = get_array(j, path);
    std::set<std::string> seen;
    std::vector<std::string> symbols;
    for (size_t i = 0; i < arr.size(); ++i) {
        std::string s = get_string(arr[i], at(path, i));
        if (s == "#" || s == "$") {
            fail("reserved-symbol", at(path, i), "'" + s + "' is a reserved end marker");
        }
        if (s.empty()) {
            fail("bad-type", at(path, i), "symbol names must be non-empty");
        }
        if (!seen.insert(s).second) {
            fail("duplicate-symbol", at(path, i), "'" + s + "' appears twice");
        }
        symbols.push_back(std::move(s));
    }
    return Alphabet(std::move(symbols));
}

ComplementarityRelation parse_rho(const ojson& j, const Alphabet& alphabet,
                                  const std::string& path) {
    if (j.is_string()) {
        if (j.get<std::string>() != "identity") {
            fail("bad-rho", path, "the only named relation is \"identity\"");
        }
        return ComplementarityRelation::identity(alphabet.size());
    }
    const ojson& arr = get_array(j, path);
    std::vector<std::pair<Symbol, Symbol>> pairs;
    for (size_t i = 0; i < arr.size(); ++i) {
        const ojson& pair = arr[i];
        if (!pair.is_array() || pair.size() != 2) {
            fail("bad-rho", at(path, i), "expected a [upper, lower] symbol pair");
        }
        auto resolve = [&](const ojson& e, const std::string& p) {
            auto s = alphabet.find(get_string(e, p));
            if (!s) {
                fail("undeclared-symbol", p, "'" + e.get<std::string>() + "' is not in the alphabet");
            }
            return *s;
        };
        pairs.emplace_back(resolve(pair[0], at(path, i) + "[0]"),
                           resolve(pair[1], at(path, i) + "[1]"));
    }
    return ComplementarityRelation(alphabet.size(), std::move(pairs));
}

GammaSymbol parse_gamma(const ojson& j, const Alphabet& alphabet, const std::string& path) {
    const std::string name = get_string(j, path);
    if (name == "#") {
        return alphabet.left_marker();
    }
    if (name == "$") {
        return alphabet.right_marker();
    }
    auto s = alphabet.find(name);
    if (!s) {
        fail("undeclared-symbol", path, "'" + name + "' is not in the working alphabet");
    }
    return *s;
}

struct StateFlags {
    std::vector<std::string> names;
    uint32_t initial = 0;
    std::vector<bool> accept, reject, final_flags;
};

StateFlags parse_states(const ojson& j, DocumentKind kind, const std::string& path) {
    const ojson& arr = get_array(j, path);
    if (arr.empty()) {
        fail("bad-type", path, "at least one state is required");
    }
    StateFlags out;
    std::set<std::string> seen;
    std::optional<uint32_t> initial;
    for (size_t i = 0; i < arr.size(); ++i) {
        const ojson& state = get_object(arr[i], at(path, i));
        std::string name = get_string(require(state, "name", at(path, i)), child(at(path, i), "name"));
        if (!seen.insert(name).second) {
            fail("duplicate-state", child(at(path, i), "name"), "'" + name + "' appears twice");
        }
        bool is_initial = false, is_accept = false, is_reject = false, is_final = false;
        for (const auto& [key, value] : state.items()) {
            const std::string field_path = child(at(path, i), key);
            if (key == "name") {
                continue;
            }
            if (key == "initial") {
                is_initial = get_bool(value, field_path);
            } else if (key == "accept" && kind == DocumentKind::Mwkqfa) {
                is_accept = get_bool(value, field_path);
            } else if (key == "reject" && kind == DocumentKind::Mwkqfa) {
                is_reject = get_bool(value, field_path);
            } else if (key == "final" && kind != DocumentKind::Mwkqfa) {
                is_final = get_bool(value, field_path);
            } else {
                fail("bad-state-flags", field_path,
                     "flag is not applicable to a " + std::string(to_string(kind)) + " document");
            }
        }
        if (is_accept && is_reject) {
            fail("bad-state-flags", at(path, i), "'" + name + "' cannot accept and reject");
        }
        if (is_initial) {
            if (initial) {
                fail("multiple-initial", at(path, i), "'" + name + "' is a second initial state");
            }
            initial = static_cast<uint32_t>(i);
        }
        out.names.push_back(std::move(name));
        out.accept.push_back(is_accept);
        out.reject.push_back(is_reject);
        out.final_flags.push_back(is_final);
    }
    if (!initial) {
        fail("missing-initial", path, "exactly one state must be marked initial");
    }
    out.initial = *initial;
    return out;
}

uint32_t resolve_state(const StateFlags& states, const ojson& j, const std::string& path) {
    const std::string name = get_string(j, path);
    for (uint32_t i = 0; i < states.names.size(); ++i) {
        if (states.names[i] == name) {
            return i;
        }
    }
    fail("undeclared-state", path, "'" + name + "' is not declared");
}

MoveVector parse_move(const ojson& j, size_t arity, const std::string& path) {
    const ojson& arr = get_array(j, path);
    if (arr.size() != arity) {
        fail("bad-move", path, "expected " + std::to_string(arity) + " entries");
    }
    MoveVector move;
    for (size_t i = 0; i < arr.size(); ++i) {
        const uint64_t d = get_uint(arr[i], at(path, i));
        if (d > 1) {
            fail("bad-move", at(path, i), "move entries are 0 or 1");
        }
        move.push_back(static_cast<uint8_t>(d));
    }
    return move;
}

Mwkqfa parse_mwkqfa(const ojson& j, Alphabet alphabet, const StateFlags& states) {
    Mwkqfa m;
    m.alphabet = std::move(alphabet);
    m.rho = parse_rho(require(j, "rho", ""), m.alphabet, "rho");
    m.state_names = states.names;
    m.initial_state = states.initial;
    for (size_t i = 0; i < states.names.size(); ++i) {
        m.state_kinds.push_back(states.accept[i]   ? StateKind::Accepting
                                : states.reject[i] ? StateKind::Rejecting
                                                   : StateKind::NonHalting);
    }

    const ojson& heads = get_object(require(j, "heads", ""), "heads");
    m.upper_heads = static_cast<uint32_t>(get_uint(require(heads, "upper", "heads"), "heads.upper"));
    m.lower_heads = static_cast<uint32_t>(get_uint(require(heads, "lower", "heads"), "heads.lower"));
    if (m.upper_heads < 1 || m.lower_heads < 1) {
        fail("bad-heads", "heads", "head counts must be at least 1");
    }

    const ojson& moves = get_object(require(j, "moves", ""), "moves");
    m.moves.resize(m.state_count());
    std::vector<bool> have_move(m.state_count(), false);
    for (const auto& [name, value] : moves.items()) {
        const std::string path = child("moves", name);
        uint32_t state = m.state_count();
        for (uint32_t i = 0; i < states.names.size(); ++i) {
            if (states.names[i] == name) {
                state = i;
                break;
            }
        }
        if (state == m.state_count()) {
            fail("undeclared-state", path, "'" + name + "' is not declared");
        }
        m.moves[state] = parse_move(value, m.head_count(), path);
        have_move[state] = true;
    }
    for (size_t i = 0; i < have_move.size(); ++i) {
        if (!have_move[i]) {
            fail("bad-move", "moves", "no move vector for state '" + states.names[i] + "'");
        }
    }

    const ojson& operators = get_array(require(j, "operators", ""), "operators");
    const size_t n = m.state_count();
    for (size_t i = 0; i < operators.size(); ++i) {
        const std::string op_path = at("operators", i);
        const ojson& op = get_object(operators[i], op_path);
        const ojson& tuple_json = get_array(require(op, "tuple", op_path), child(op_path, "tuple"));
        if (tuple_json.size() != m.head_count()) {
            fail("bad-tuple", child(op_path, "tuple"),
                 "expected " + std::to_string(m.head_count()) + " symbols");
        }
        SymbolTuple tuple;
        for (size_t k = 0; k < tuple_json.size(); ++k) {
            tuple.push_back(parse_gamma(tuple_json[k], m.alphabet, at(child(op_path, "tuple"), k)));
        }
        const std::string matrix_path = child(op_path, "matrix");
        const ojson& matrix_json = get_array(require(op, "matrix", op_path), matrix_path);
        if (matrix_json.size() != n) {
            fail("matrix-shape", matrix_path,
                 "expected " + std::to_string(n) + " rows, found " +
                     std::to_string(matrix_json.size()));
        }
        ComplexMatrix matrix(n, n);
        for (size_t r = 0; r < n; ++r) {
            const ojson& row = get_array(matrix_json[r], at(matrix_path, r));
            if (row.size() != n) {
                fail("matrix-shape", at(matrix_path, r),
                     "expected " + std::to_string(n) + " columns, found " +
                         std::to_string(row.size()));
            }
            for (size_t c = 0; c < n; ++c) {
                matrix.at(r, c) = parse_complex(row[c], at(at(matrix_path, r), c));
            }
        }
        if (!m.operators.emplace(std::move(tuple), std::move(matrix)).second) {
            fail("duplicate-tuple", child(op_path, "tuple"), "operator tuple appears twice");
        }
    }
    return m;
}

MultiHeadDfa parse_dfa(const ojson& j, Alphabet alphabet, const StateFlags& states) {
    MultiHeadDfa d;
    d.alphabet = std::move(alphabet);
    d.state_names = states.names;
    d.accepting = states.final_flags;
    d.initial_state = states.initial;
    const ojson& heads = require(j, "heads", "");
    d.heads = static_cast<uint32_t>(get_uint(heads, "heads"));
    if (d.heads < 1) {
        fail("bad-heads", "heads", "head count must be at least 1");
    }

    const ojson& transitions = get_array(require(j, "transitions", ""), "transitions");
    std::set<std::pair<uint32_t, SymbolTuple>> seen;
    for (size_t i = 0; i < transitions.size(); ++i) {
        const std::string t_path = at("transitions", i);
        const ojson& t_json = get_object(transitions[i], t_path);
        ClassicalTransition t;
        t.from = resolve_state(states, require(t_json, "from", t_path), child(t_path, "from"));
        t.to = resolve_state(states, require(t_json, "to", t_path), child(t_path, "to"));
        const std::string read_path = child(t_path, "read");
        const ojson& read = get_array(require(t_json, "read", t_path), read_path);
        if (read.size() != d.heads) {
            fail("bad-tuple", read_path, "expected " + std::to_string(d.heads) + " symbols");
        }
        for (size_t k = 0; k < read.size(); ++k) {
            t.read.push_back(parse_gamma(read[k], d.alphabet, at(read_path, k)));
        }
        t.move = parse_move(require(t_json, "move", t_path), d.heads, child(t_path, "move"));
        for (size_t h = 0; h < d.heads; ++h) {
            if (t.read[h] == d.alphabet.right_marker() && t.move[h] != 0) {
                fail("dollar-move", child(t_path, "move"),
                     "head " + std::to_string(h + 1) + " reads '$' and must stay");
            }
        }
        if (!seen.emplace(t.from, t.read).second) {
            fail("duplicate-transition", t_path, "a transition for this state and tuple exists");
        }
        d.transitions.push_back(std::move(t));
    }
    return d;
}

ClassicalWkAutomaton parse_wk(const ojson& j, Alphabet alphabet, const StateFlags& states) {
    ClassicalWkAutomaton a;
    a.alphabet = std::move(alphabet);
    a.rho = parse_rho(require(j, "rho", ""), a.alphabet, "rho");
    a.state_names = states.names;
    a.final_states = states.final_flags;
    a.initial_state = states.initial;
    const ojson& rules = get_array(require(j, "rules", ""), "rules");
    for (size_t i = 0; i < rules.size(); ++i) {
        const std::string r_path = at("rules", i);
        const ojson& r_json = get_object(rules[i], r_path);
        WkRule r;
        r.from = resolve_state(states, require(r_json, "from", r_path), child(r_path, "from"));
        r.to = resolve_state(states, require(r_json, "to", r_path), child(r_path, "to"));
        auto parse_chunk = [&](const char* key) {
            const std::string path = child(r_path, key);
            try {
                return a.alphabet.parse_word(get_string(require(r_json, key, r_path), path));
            } catch (const DomainError& e) {
                fail("undeclared-symbol", path, e.what());
            }
        };
        r.upper = parse_chunk("upper");
        r.lower = parse_chunk("lower");
        a.rules.push_back(std::move(r));
    }
    return a;
}

DocumentMetadata parse_metadata(const ojson& j) {
    DocumentMetadata meta;
    auto it = j.find("metadata");
    if (it == j.end()) {
        return meta;
    }
    const ojson& m = get_object(*it, "metadata");
    if (auto f = m.find("name"); f != m.end()) {
        meta.name = get_string(*f, "metadata.name");
    }
    if (auto f = m.find("provenance"); f != m.end()) {
        meta.provenance = get_string(*f, "metadata.provenance");
    }
    if (auto f = m.find("reversibility"); f != m.end()) {
        const ojson& r = get_object(*f, "metadata.reversibility");
        ReversibilityEvidenceNote note;
        note.mode = get_string(require(r, "mode", "metadata.reversibility"),
                               "metadata.reversibility.mode");
        if (auto ml = r.find("max_len"); ml != r.end()) {
            note.max_len = static_cast<uint32_t>(get_uint(*ml, "metadata.reversibility.max_len"));
        }
        note.pass = get_bool(require(r, "pass", "metadata.reversibility"),
                             "metadata.reversibility.pass");
        meta.reversibility = std::move(note);
    }
    return meta;
}

}  // namespace

AutomatonDocument parse_document(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail("invalid-json", "", e.what());
    }
    if (!j.is_object()) {
        fail("bad-type", "", "the document must be a JSON object");
    }
    const std::string version = get_string(require(j, "format_version", ""), "format_version");
    if (version != "1") {
        fail("bad-version", "format_version", "unsupported format version '" + version + "'");
    }
    const std::string kind_name = get_string(require(j, "kind", ""), "kind");
    DocumentKind kind;
    if (kind_name == "mwkqfa") {
        kind = DocumentKind::Mwkqfa;
    } else if (kind_name == "multihead-dfa") {
        kind = DocumentKind::MultiHeadDfa;
    } else if (kind_name == "classical-wk") {
        kind = DocumentKind::ClassicalWk;
    } else {
        fail("unknown-kind", "kind", "'" + kind_name + "' is not a known document kind");
    }

    AutomatonDocument doc;
    doc.metadata = parse_metadata(j);
    Alphabet alphabet = parse_alphabet(require(j, "alphabet", ""), "alphabet");
    StateFlags states = parse_states(require(j, "states", ""), kind, "states");

    try {
        switch (kind) {
            case DocumentKind::Mwkqfa: {
                Mwkqfa m = parse_mwkqfa(j, std::move(alphabet), states);
                m.validate();
                doc.machine = std::move(m);
                break;
            }
            case DocumentKind::MultiHeadDfa: {
                MultiHeadDfa d = parse_dfa(j, std::move(alphabet), states);
                d.validate();
                doc.machine = std::move(d);
                break;
            }
            case DocumentKind::ClassicalWk: {
                ClassicalWkAutomaton a = parse_wk(j, std::move(alphabet), states);
                a.validate();
                doc.machine = std::move(a);
                break;
            }
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::runtime_error& e) {
        // Backstop: machine-level validation that the field checks missed.
        fail("machine-invalid", "", e.what());
    }
    return doc;
}

namespace {

ojson complex_json(const Amplitude& z) {
    return ojson::array({z.real(), z.imag()});
}

ojson states_json(const std::vector<std::string>& names, uint32_t initial,
                  const std::function<ojson(size_t, ojson&&)>& decorate) {
    ojson arr = ojson::array();
    for (size_t i = 0; i < names.size(); ++i) {
        ojson state;
        state["name"] = names[i];
        if (i == initial) {
            state["initial"] = true;
        }
        arr.push_back(decorate(i, std::move(state)));
    }
    return arr;
}

ojson rho_json(const Alphabet& alphabet, const ComplementarityRelation& rho) {
    ojson arr = ojson::array();
    for (const auto& [a, b] : rho.pairs()) {
        arr.push_back(ojson::array({alphabet.name(a), alphabet.name(b)}));
    }
    return arr;
}

ojson tuple_json(const Alphabet& alphabet, const SymbolTuple& tuple) {
    ojson arr = ojson::array();
    for (GammaSymbol g : tuple) {
        arr.push_back(alphabet.gamma_name(g));
    }
    return arr;
}

ojson move_json(const MoveVector& move) {
    ojson arr = ojson::array();
    for (uint8_t d : move) {
        arr.push_back(static_cast<int>(d));
    }
    return arr;
}

void append_metadata(ojson& j, const DocumentMetadata& meta) {
    if (meta.empty()) {
        return;
    }
    ojson m;
    if (!meta.name.empty()) {
        m["name"] = meta.name;
    }
    if (!meta.provenance.empty()) {
        m["provenance"] = meta.provenance;
    }
    if (meta.reversibility) {
        ojson r;
        r["mode"] = meta.reversibility->mode;
        if (meta.reversibility->max_len) {
            r["max_len"] = *meta.reversibility->max_len;
        }
        r["pass"] = meta.reversibility->pass;
        m["reversibility"] = std::move(r);
    }
    j["metadata"] = std::move(m);
}

}  // namespace

std::string serialize_document(const AutomatonDocument& doc) {
    ojson j;
    j["format_version"] = "1";
    j["kind"] = std::string(to_string(doc.kind()));
    append_metadata(j, doc.metadata);

    const Alphabet& alphabet = doc.alphabet();
    ojson alphabet_json = ojson::array();
    for (Symbol s = 0; s < alphabet.size(); ++s) {
        alphabet_json.push_back(alphabet.name(s));
    }
    j["alphabet"] = std::move(alphabet_json);

    if (const Mwkqfa* m = std::get_if<Mwkqfa>(&doc.machine)) {
        j["rho"] = rho_json(alphabet, m->rho);
        j["states"] = states_json(m->state_names, m->initial_state, [&](size_t i, ojson&& s) {
            if (m->state_kinds[i] == StateKind::Accepting) {
                s["accept"] = true;
            } else if (m->state_kinds[i] == StateKind::Rejecting) {
                s["reject"] = true;
            }
            return std::move(s);
        });
        j["heads"] = ojson{{"upper", m->upper_heads}, {"lower", m->lower_heads}};
        ojson moves;
        for (size_t i = 0; i < m->state_count(); ++i) {
            moves[m->state_names[i]] = move_json(m->moves[i]);
        }
        j["moves"] = std::move(moves);
        ojson operators = ojson::array();
        for (const auto& [tuple, matrix] : m->operators) {
            ojson rows = ojson::array();
            for (size_t r = 0; r < matrix.rows(); ++r) {
                ojson row = ojson::array();
                for (size_t c = 0; c < matrix.cols(); ++c) {
                    row.push_back(complex_json(matrix.at(r, c)));
                }
                rows.push_back(std::move(row));
            }
            operators.push_back(ojson{{"tuple", tuple_json(alphabet, tuple)},
                                      {"matrix", std::move(rows)}});
        }
        j["operators"] = std::move(operators);
    } else if (const MultiHeadDfa* d = std::get_if<MultiHeadDfa>(&doc.machine)) {
        j["states"] = states_json(d->state_names, d->initial_state, [&](size_t i, ojson&& s) {
            if (d->accepting[i]) {
                s["final"] = true;
            }
            return std::move(s);
        });
        j["heads"] = d->heads;
        ojson transitions = ojson::array();
        for (const ClassicalTransition& t : d->transitions) {
            transitions.push_back(ojson{{"from", d->state_names[t.from]},
                                        {"read", tuple_json(alphabet, t.read)},
                                        {"to", d->state_names[t.to]},
                                        {"move", move_json(t.move)}});
        }
        j["transitions"] = std::move(transitions);
    } else {
        const ClassicalWkAutomaton& a = std::get<ClassicalWkAutomaton>(doc.machine);
        j["rho"] = rho_json(alphabet, a.rho);
        j["states"] = states_json(a.state_names, a.initial_state, [&](size_t i, ojson&& s) {
            if (a.final_states[i]) {
                s["final"] = true;
            }
            return std::move(s);
        });
        ojson rules = ojson::array();
        for (const WkRule& r : a.rules) {
            rules.push_back(ojson{{"from", a.state_names[r.from]},
                                  {"upper", alphabet.format_word(r.upper)},
                                  {"lower", alphabet.format_word(r.lower)},
                                  {"to", a.state_names[r.to]}});
        }
        j["rules"] = std::move(rules);
    }
    return j.dump(2) + "\n";
}

AutomatonDocument load_document_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail("io-error", path, "cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

void write_document_file(const std::string& path, const AutomatonDocument& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail("io-error", path, "cannot open file for writing");
    }
    out << serialize_document(doc);
    if (!out) {
        fail("io-error", path, "write failed");
    }
}

}  // namespace wkqfa
