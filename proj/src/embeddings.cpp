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

#include "wkqfa/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wkqfa {

namespace {

Amplitude inner(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
    Amplitude sum{};
    for (size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double norm2(const std::vector<Amplitude>& v) {
    double sum = 0.0;
    for (const Amplitude& x : v) {
        sum += std::norm(x);
    }
    return sum;
}

void project_out(std::vector<Amplitude>& v, const std::vector<std::vector<Amplitude>>& basis) {
    for (const auto& u : basis) {
        const Amplitude coeff = inner(u, v);
        if (coeff == Amplitude{}) {
            continue;
        }
        for (size_t i = 0; i < v.size(); ++i) {
            v[i] -= coeff * u[i];
        }
    }
}

// Deterministic completion vector orthonormal to the assigned columns: take
// the candidate basis vector with the largest residual (smallest index on
// ties). When the assigned columns are themselves basis vectors this returns
// an unused basis vector exactly.
std::vector<Amplitude> completion_vector(const std::vector<std::vector<Amplitude>>& assigned,
                                         size_t dim) {
    size_t best = dim;
    double best_norm = -1.0;
    std::vector<Amplitude> best_residual;
    for (size_t cand = 0; cand < dim; ++cand) {
        std::vector<Amplitude> v(dim);
        v[cand] = 1.0;
        project_out(v, assigned);
        const double n = norm2(v);
        if (n > best_norm + 1e-12) {
            best = cand;
            best_norm = n;
            best_residual = std::move(v);
        }
    }
    if (best == dim || best_norm <= 1e-12) {
        throw StructuralError("no orthogonal completion vector exists");
    }
    project_out(best_residual, assigned);  // second pass for numerical hygiene
    const double scale = 1.0 / std::sqrt(norm2(best_residual));
    for (Amplitude& x : best_residual) {
        x *= scale;
    }
    return best_residual;
}

std::string fresh_name(const std::set<std::string>& taken, std::string base) {
    std::string name = base;
    int suffix = 2;
    while (taken.count(name) != 0) {
        name = base + "_" + std::to_string(suffix++);
    }
    return name;
}

}  // namespace

CompletionOutcome complete_to_unitary(const MachineDraft& draft, double orthonormal_tolerance) {
    const size_t n = draft.state_names.size();
    const uint32_t arity = draft.upper_heads + draft.lower_heads;
    if (n == 0) {
        throw ValidationError("draft has no states");
    }

    // Validate authored columns and check per-tuple orthonormality.
    for (const auto& [tuple, columns] : draft.authored) {
        if (tuple.size() != arity) {
            throw StructuralError("authored tuple has the wrong arity");
        }
        std::vector<std::pair<uint32_t, const std::vector<Amplitude>*>> cols;
        for (const auto& [source, column] : columns) {
            if (source >= n) {
                throw ValidationError("authored column references an undeclared state");
            }
            if (column.size() != n) {
                throw StructuralError("authored column for state '" + draft.state_names[source] +
                                      "' has length " + std::to_string(column.size()) +
                                      ", expected " + std::to_string(n));
            }
            cols.emplace_back(source, &column);
        }
        for (size_t i = 0; i < cols.size(); ++i) {
            if (std::abs(norm2(*cols[i].second) - 1.0) > orthonormal_tolerance) {
                throw ValidationError(
                    "cannot complete tuple " +
                    draft.alphabet.format_tuple(tuple, draft.upper_heads) + ": column of '" +
                    draft.state_names[cols[i].first] + "' is not a unit vector");
            }
            for (size_t j = i + 1; j < cols.size(); ++j) {
                if (std::abs(inner(*cols[i].second, *cols[j].second)) > orthonormal_tolerance) {
                    throw ValidationError(
                        "cannot complete tuple " +
                        draft.alphabet.format_tuple(tuple, draft.upper_heads) + ": columns of '" +
                        draft.state_names[cols[i].first] + "' and '" +
                        draft.state_names[cols[j].first] + "' are not orthonormal");
                }
            }
        }
    }

    // A state needs a reject sink iff some stored tuple leaves it unauthored.
    CompletionOutcome out;
    out.reject_sink_of.assign(n, kNoSink);
    std::vector<bool> needs_sink(n, false);
    for (const auto& [tuple, columns] : draft.authored) {
        for (uint32_t q = 0; q < n; ++q) {
            if (columns.find(q) == columns.end()) {
                needs_sink[q] = true;
            }
        }
    }

    Mwkqfa& m = out.machine;
    m.alphabet = draft.alphabet;
    m.rho = draft.rho;
    m.state_names = draft.state_names;
    m.state_kinds = draft.state_kinds;
    m.initial_state = draft.initial_state;
    m.upper_heads = draft.upper_heads;
    m.lower_heads = draft.lower_heads;
    m.moves = draft.moves;

    std::set<std::string> taken(m.state_names.begin(), m.state_names.end());
    for (uint32_t q = 0; q < n; ++q) {
        if (!needs_sink[q]) {
            continue;
        }
        const std::string name = fresh_name(taken, "q_rej_" + draft.state_names[q]);
        taken.insert(name);
        out.reject_sink_of[q] = static_cast<uint32_t>(m.state_names.size());
        m.state_names.push_back(name);
        m.state_kinds.push_back(StateKind::Rejecting);
        m.moves.emplace_back(arity, 0);
        ++out.sinks_added;
    }
    const size_t dim = m.state_names.size();

    for (const auto& [tuple, columns] : draft.authored) {
        ComplexMatrix matrix(dim, dim);
        std::vector<std::vector<Amplitude>> assigned;
        assigned.reserve(dim);
        for (uint32_t q = 0; q < n; ++q) {
            std::vector<Amplitude> column(dim);
            auto it = columns.find(q);
            if (it != columns.end()) {
                std::copy(it->second.begin(), it->second.end(), column.begin());
            } else {
                column[out.reject_sink_of[q]] = 1.0;
            }
            for (size_t r = 0; r < dim; ++r) {
                matrix.at(r, q) = column[r];
            }
            assigned.push_back(std::move(column));
        }
        for (size_t q = n; q < dim; ++q) {
            std::vector<Amplitude> column = completion_vector(assigned, dim);
            for (size_t r = 0; r < dim; ++r) {
                matrix.at(r, q) = column[r];
            }
            assigned.push_back(std::move(column));
        }
        m.operators.emplace(tuple, std::move(matrix));
    }

    m.validate();
    return out;
}

namespace {

// Every tuple the k upper heads could read, lexicographic by gamma code.
std::vector<SymbolTuple> all_tuples(size_t gamma_size, uint32_t arity) {
    std::vector<SymbolTuple> out;
    SymbolTuple t(arity, 0);
    while (true) {
        out.push_back(t);
        size_t i = arity;
        while (i-- > 0) {
            if (++t[i] < gamma_size) {
                break;
            }
            t[i] = 0;
            if (i == 0) {
                return out;
            }
        }
    }
}

}  // namespace

EmbeddingResult reversible_to_quantum(const MultiHeadDfa& a, const ReversibilityReport& evidence) {
    a.validate();
    if (!evidence.pass) {
        throw ValidationError("reversibility evidence does not pass; refusing to embed");
    }

    // D is well-defined per target state by condition (1); re-check while
    // collecting in case the evidence was forged or stale.
    std::vector<std::optional<MoveVector>> move_into(a.state_count());
    for (const ClassicalTransition& t : a.transitions) {
        if (move_into[t.to] && *move_into[t.to] != t.move) {
            throw EmbeddingError("transitions into '" + a.state_names[t.to] +
                                 "' disagree on the move vector; evidence was insufficient");
        }
        move_into[t.to] = t.move;
    }

    EmbeddingResult result;
    result.evidence = evidence;

    MachineDraft draft;
    draft.alphabet = a.alphabet;
    draft.rho = ComplementarityRelation::identity(a.alphabet.size());
    draft.state_names = a.state_names;
    draft.state_kinds.assign(a.state_count(), StateKind::NonHalting);
    draft.initial_state = a.initial_state;
    draft.upper_heads = a.heads;
    draft.lower_heads = 1;  // permanently stationary; its read symbol is ignored

    const uint32_t arity = a.heads + 1;
    for (uint32_t q = 0; q < a.state_count(); ++q) {
        MoveVector d(arity, 0);
        if (move_into[q]) {
            std::copy(move_into[q]->begin(), move_into[q]->end(), d.begin());
        }
        draft.moves.push_back(std::move(d));
    }

    // One accept sink per accepting state that can halt classically.
    std::set<std::string> taken(draft.state_names.begin(), draft.state_names.end());
    auto accept_sink = [&](uint32_t q) {
        auto it = result.accept_sink_of.find(q);
        if (it != result.accept_sink_of.end()) {
            return it->second;
        }
        const std::string name = fresh_name(taken, "q_acc_" + a.state_names[q]);
        taken.insert(name);
        const uint32_t index = static_cast<uint32_t>(draft.state_names.size());
        draft.state_names.push_back(name);
        draft.state_kinds.push_back(StateKind::Accepting);
        draft.moves.emplace_back(arity, 0);
        result.accept_sink_of.emplace(q, index);
        return index;
    };

    // Author the columns tuple by tuple. The classical tuple is replicated
    // for every possible lower-strand symbol.
    struct Authored {
        uint32_t source;
        uint32_t target;
    };
    std::vector<std::pair<SymbolTuple, std::vector<Authored>>> authored_tuples;
    for (const SymbolTuple& upper : all_tuples(a.alphabet.gamma_size(), a.heads)) {
        std::vector<Authored> columns;
        for (uint32_t q = 0; q < a.state_count(); ++q) {
            const ClassicalTransition* t = a.find_transition(q, upper);
            if (t != nullptr) {
                for (const Authored& prev : columns) {
                    if (prev.target == t->to) {
                        throw EmbeddingError(
                            "tuple " + a.alphabet.format_tuple(upper, a.heads) + ": states '" +
                            a.state_names[prev.source] + "' and '" + a.state_names[q] +
                            "' both map to '" + a.state_names[t->to] +
                            "'; evidence was insufficient");
                    }
                }
                columns.push_back({q, t->to});
            } else if (a.accepting[q]) {
                columns.push_back({q, accept_sink(q)});
            }
        }
        authored_tuples.emplace_back(upper, std::move(columns));
    }

    const size_t draft_size = draft.state_names.size();
    for (const auto& [upper, columns] : authored_tuples) {
        for (GammaSymbol lower = 0; lower < a.alphabet.gamma_size(); ++lower) {
            SymbolTuple full = upper;
            full.push_back(lower);
            auto& slot = draft.authored[std::move(full)];
            for (const Authored& col : columns) {
                std::vector<Amplitude> image(draft_size);
                image[col.target] = 1.0;
                slot.emplace(col.source, std::move(image));
            }
        }
    }

    CompletionOutcome completed = complete_to_unitary(draft, 1e-9);
    result.machine = std::move(completed.machine);
    return result;
}

}  // namespace wkqfa
