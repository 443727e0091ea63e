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

// Command-line front end. Exit codes: 0 success/pass, 1 semantic failure
// (well-formedness or reversibility fail, comparison disagreement,
// irreversible convert input), 2 usage or structural error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wkqfa/document.hpp"
#include "wkqfa/embeddings.hpp"
#include "wkqfa/harness.hpp"

namespace {

using nlohmann::ordered_json;
using namespace wkqfa;

std::string prob(double p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", p);
    return buf;
}

std::string sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6e", x);
    return buf;
}

void emit(const std::string& format, const ordered_json& j, const std::string& text) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

ordered_json word_json(const Alphabet& alphabet, const Word& w) {
    return alphabet.format_word(w);
}

struct CommonRunFlags {
    uint64_t budget = 0;
    double epsilon = 1e-12;
    uint64_t guard = kDefaultComplementGuard;
    double cutpoint = 0.5;

    RunParams params() const { return RunParams{budget, epsilon, guard}; }
};

// Symbols the relation gives no complement: legal, but upper strands using
// them have no lower strand at all, which is worth a note in check reports.
std::string no_complement_note(const Alphabet& alphabet, const ComplementarityRelation& rho,
                               ordered_json& j) {
    ordered_json list = ordered_json::array();
    std::string text;
    for (Symbol s : rho.symbols_without_complement()) {
        list.push_back(alphabet.name(s));
        text += "note: symbol '" + alphabet.name(s) + "' has no complement under rho\n";
    }
    if (!list.empty()) {
        j["symbols_without_complement"] = std::move(list);
    }
    return text;
}

int cmd_check(const std::string& file, const std::string& format, double tolerance,
              const std::string& mode_name, uint32_t max_len) {
    const AutomatonDocument doc = load_document_file(file);
    ordered_json j;
    j["command"] = "check";
    j["kind"] = std::string(to_string(doc.kind()));

    if (const Mwkqfa* m = std::get_if<Mwkqfa>(&doc.machine)) {
        const WellFormednessReport report = check_well_formed(*m, tolerance);
        std::string text;
        text += "kind: mwkqfa\n";
        text += "operators checked: " + std::to_string(report.tuples.size()) + "\n";
        text += "max deviation: " + sci(report.max_deviation()) + "\n";
        text += "tolerance: " + sci(report.tolerance) + "\n";
        ordered_json tuples = ordered_json::array();
        for (const TupleCheck& t : report.tuples) {
            tuples.push_back(ordered_json{
                {"tuple", m->alphabet.format_tuple(t.tuple, m->upper_heads)},
                {"deviation", t.deviation}});
        }
        for (const SymbolTuple& t : report.failing) {
            text += "failing tuple: " + m->alphabet.format_tuple(t, m->upper_heads) + "\n";
        }
        text += no_complement_note(m->alphabet, m->rho, j);
        text += std::string("result: ") + (report.pass ? "PASS" : "FAIL") + "\n";
        j["tolerance"] = report.tolerance;
        j["max_deviation"] = report.max_deviation();
        j["tuples"] = std::move(tuples);
        j["pass"] = report.pass;
        emit(format, j, text);
        return report.pass ? 0 : 1;
    }

    if (const MultiHeadDfa* d = std::get_if<MultiHeadDfa>(&doc.machine)) {
        const ReversibilityMode mode = mode_name == "syntactic" ? ReversibilityMode::Syntactic
                                                                : ReversibilityMode::Bounded;
        const ReversibilityReport report = check_reversibility(*d, mode, max_len);
        std::string text;
        text += "kind: multihead-dfa\n";
        text += "mode: " + std::string(to_string(report.mode)) + "\n";
        if (report.mode == ReversibilityMode::Bounded) {
            text += "max word length checked: " + std::to_string(report.max_len) + "\n";
        }
        ordered_json c1 = ordered_json::array(), c2 = ordered_json::array();
        for (const ReversibilityViolation& v : report.condition1) {
            text += "condition-1 violation: " + v.detail + "\n";
            c1.push_back(v.detail);
        }
        for (const ReversibilityViolation& v : report.condition2) {
            text += "condition-2 violation: " + v.detail + "\n";
            c2.push_back(v.detail);
        }
        text += std::string("result: ") + (report.pass ? "REVERSIBLE" : "NOT-REVERSIBLE") + "\n";
        j["mode"] = std::string(to_string(report.mode));
        j["max_len"] = report.max_len;
        j["condition1_violations"] = std::move(c1);
        j["condition2_violations"] = std::move(c2);
        j["pass"] = report.pass;
        emit(format, j, text);
        return report.pass ? 0 : 1;
    }

    // classical-wk: the parse already validated the structure; there is no
    // well-formedness or reversibility notion to check for this kind.
    const ClassicalWkAutomaton& a = std::get<ClassicalWkAutomaton>(doc.machine);
    std::string text = "kind: classical-wk\n";
    text += no_complement_note(a.alphabet, a.rho, j);
    text += "result: STRUCTURALLY-VALID\n";
    j["pass"] = true;
    emit(format, j, text);
    return 0;
}

int cmd_run(const std::string& file, const std::string& format, const std::string& word_text,
            const std::string* lower_text, const CommonRunFlags& flags) {
    const AutomatonDocument doc = load_document_file(file);
    const Alphabet& alphabet = doc.alphabet();
    const Word word = alphabet.parse_word(word_text);
    ordered_json j;
    j["command"] = "run";
    j["kind"] = std::string(to_string(doc.kind()));
    j["word"] = word_text;

    if (const Mwkqfa* m = std::get_if<Mwkqfa>(&doc.machine)) {
        const RunParams params = flags.params();
        std::string text = "word: " + word_text + "\n";
        ordered_json entries = ordered_json::array();
        double best = 0.0;
        auto add_entry = [&](const Word& lower, const RunOutcome& o) {
            text += "  lower=\"" + alphabet.format_word(lower) + "\"  p_acc=" + prob(o.p_acc) +
                    "  p_rej=" + prob(o.p_rej) + "  p_residual=" + prob(o.p_residual) +
                    "  steps=" + std::to_string(o.steps) + "  halt=" +
                    std::string(to_string(o.halt_reason)) + "\n";
            entries.push_back(ordered_json{{"lower", word_json(alphabet, lower)},
                                           {"p_acc", o.p_acc},
                                           {"p_rej", o.p_rej},
                                           {"p_residual", o.p_residual},
                                           {"steps", o.steps},
                                           {"halt_reason", std::string(to_string(o.halt_reason))},
                                           {"conservation_drift", o.conservation_drift}});
        };
        if (lower_text != nullptr) {
            const Word lower = alphabet.parse_word(*lower_text);
            const RunOutcome o = run(*m, word, lower, params);
            text += "complements: explicit lower strand\n";
            add_entry(lower, o);
            best = o.p_acc;
        } else {
            const AcceptanceProfile profile = acceptance_profile(*m, word, params);
            text += "complements: " + std::to_string(profile.entries.size()) + "\n";
            for (const ProfileEntry& e : profile.entries) {
                add_entry(e.lower, e.outcome);
            }
            best = profile.best_p_acc;
        }
        const bool accepted = best > flags.cutpoint;
        text += "best_p_acc: " + prob(best) + "\n";
        text += "cutpoint: " + prob(flags.cutpoint) + "\n";
        text += std::string("verdict: ") + (accepted ? "accept" : "reject") + "\n";
        j["entries"] = std::move(entries);
        j["best_p_acc"] = best;
        j["cutpoint"] = flags.cutpoint;
        j["verdict"] = accepted ? "accept" : "reject";
        emit(format, j, text);
        return 0;
    }

    if (const MultiHeadDfa* d = std::get_if<MultiHeadDfa>(&doc.machine)) {
        const ClassicalRun r = run_1dfa_k(*d, word);
        std::string text = "word: " + word_text + "\n";
        text += std::string("accepted: ") + (r.accepted ? "yes" : "no") + "\n";
        text += std::string("halted: ") + (r.halted ? "yes" : "no") + "\n";
        text += "steps: " + std::to_string(r.trace.size() - 1) + "\n";
        j["accepted"] = r.accepted;
        j["halted"] = r.halted;
        j["steps"] = r.trace.size() - 1;
        emit(format, j, text);
        return 0;
    }

    const ClassicalWkAutomaton& a = std::get<ClassicalWkAutomaton>(doc.machine);
    const bool accepted = run_wk_classical(a, word, flags.guard);
    std::string text = "word: " + word_text + "\n";
    text += std::string("accepted: ") + (accepted ? "yes" : "no") + "\n";
    j["accepted"] = accepted;
    emit(format, j, text);
    return 0;
}

int cmd_compare(const std::string& file, const std::string& format, const std::string& oracle_name,
                uint64_t max_len, uint64_t work_guard, const CommonRunFlags& flags) {
    const LanguageOracle* oracle = find_oracle(oracle_name);
    if (oracle == nullptr) {
        std::string known;
        for (const LanguageOracle& o : builtin_oracles()) {
            known += known.empty() ? o.name : ", " + o.name;
        }
        throw ValidationError("unknown oracle '" + oracle_name + "' (known: " + known + ")");
    }
    const AutomatonDocument doc = load_document_file(file);

    ComparisonReport report;
    if (const Mwkqfa* m = std::get_if<Mwkqfa>(&doc.machine)) {
        report = exhaustive_compare(*m, *oracle, max_len, flags.cutpoint, flags.params(),
                                    work_guard);
    } else if (const MultiHeadDfa* d = std::get_if<MultiHeadDfa>(&doc.machine)) {
        report = exhaustive_compare_classical(*d, *oracle, max_len);
    } else {
        report = exhaustive_compare_wk(std::get<ClassicalWkAutomaton>(doc.machine), *oracle,
                                       max_len, flags.guard);
    }

    const Alphabet& alphabet = oracle->alphabet;
    std::string text;
    text += "oracle: " + oracle->name + " -- " + oracle->definition + "\n";
    text += "words tested: " + std::to_string(report.words_tested) + "\n";
    text += "max residual: " + prob(report.max_residual) + "\n";
    text += "disagreements: " + std::to_string(report.disagreements.size()) + "\n";
    ordered_json disagreements = ordered_json::array();
    for (const Disagreement& d : report.disagreements) {
        text += "  word=\"" + alphabet.format_word(d.word) + "\"  oracle=" +
                (d.oracle_accepts ? "accept" : "reject") +
                "  best_p_acc=" + prob(d.best_p_acc) + "\n";
        disagreements.push_back(ordered_json{{"word", word_json(alphabet, d.word)},
                                             {"oracle_accepts", d.oracle_accepts},
                                             {"best_p_acc", d.best_p_acc}});
    }
    text += std::string("result: ") + (report.agree() ? "AGREE" : "DISAGREE") + "\n";

    ordered_json j;
    j["command"] = "compare";
    j["kind"] = std::string(to_string(doc.kind()));
    j["oracle"] = oracle->name;
    j["definition"] = oracle->definition;
    j["max_len"] = report.max_len;
    j["cutpoint"] = report.cutpoint;
    j["words_tested"] = report.words_tested;
    j["max_residual"] = report.max_residual;
    j["disagreements"] = std::move(disagreements);
    j["agree"] = report.agree();
    emit(format, j, text);
    return report.agree() ? 0 : 1;
}

int cmd_convert(const std::string& file, const std::string& format, const std::string& out_path,
                const std::string& mode_name, uint32_t max_len) {
    const AutomatonDocument doc = load_document_file(file);
    const MultiHeadDfa* d = std::get_if<MultiHeadDfa>(&doc.machine);
    if (d == nullptr) {
        throw ValidationError("kind mismatch: convert expects a multihead-dfa document, found " +
                              std::string(to_string(doc.kind())));
    }
    const ReversibilityMode mode = mode_name == "bounded" ? ReversibilityMode::Bounded
                                                          : ReversibilityMode::Syntactic;
    const ReversibilityReport report = check_reversibility(*d, mode, max_len);
    ordered_json j;
    j["command"] = "convert";
    j["mode"] = std::string(to_string(mode));
    if (!report.pass) {
        std::string text = "reversibility: FAIL (mode " + std::string(to_string(mode)) + ")\n";
        ordered_json violations = ordered_json::array();
        for (const ReversibilityViolation& v : report.condition1) {
            text += "condition-1 violation: " + v.detail + "\n";
            violations.push_back(v.detail);
        }
        for (const ReversibilityViolation& v : report.condition2) {
            text += "condition-2 violation: " + v.detail + "\n";
            violations.push_back(v.detail);
        }
        j["pass"] = false;
        j["violations"] = std::move(violations);
        emit(format, j, text);
        return 1;
    }

    const EmbeddingResult embedded = reversible_to_quantum(*d, report);
    AutomatonDocument out_doc;
    out_doc.metadata.name =
        doc.metadata.name.empty() ? "embedded" : doc.metadata.name + "-embedded";
    out_doc.metadata.provenance = "converted from multihead-dfa" +
                                  (doc.metadata.name.empty() ? std::string{}
                                                             : " '" + doc.metadata.name + "'");
    ReversibilityEvidenceNote note;
    note.mode = std::string(to_string(mode));
    if (mode == ReversibilityMode::Bounded) {
        note.max_len = max_len;
    }
    note.pass = true;
    out_doc.metadata.reversibility = note;
    out_doc.machine = embedded.machine;
    write_document_file(out_path, out_doc);

    const WellFormednessReport wf = check_well_formed(embedded.machine, 1e-9);
    std::string text;
    text += "reversibility: PASS (mode " + std::string(to_string(mode)) + ")\n";
    text += "states: " + std::to_string(d->state_count()) + " -> " +
            std::to_string(embedded.machine.state_count()) + "\n";
    text += "operators: " + std::to_string(embedded.machine.operators.size()) + "\n";
    text += std::string("well-formedness at 1e-09: ") + (wf.pass ? "PASS" : "FAIL") + "\n";
    text += "wrote: " + out_path + "\n";
    j["pass"] = true;
    j["states_before"] = d->state_count();
    j["states_after"] = embedded.machine.state_count();
    j["operators"] = embedded.machine.operators.size();
    j["well_formed"] = wf.pass;
    j["out"] = out_path;
    emit(format, j, text);
    return wf.pass ? 0 : 1;
}

int cmd_complements(const std::string& file, const std::string& format,
                    const std::string& word_text, uint64_t guard) {
    const AutomatonDocument doc = load_document_file(file);
    const Alphabet& alphabet = doc.alphabet();
    const Word word = alphabet.parse_word(word_text);
    const std::vector<Word> strands = complement_strands(doc.rho(), word, guard);
    std::string text;
    ordered_json list = ordered_json::array();
    for (const Word& w2 : strands) {
        text += alphabet.format_word(w2) + "\n";
        list.push_back(word_json(alphabet, w2));
    }
    ordered_json j;
    j["command"] = "complements";
    j["word"] = word_text;
    j["complements"] = std::move(list);
    emit(format, j, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator and verifier for multi-head Watson-Crick quantum finite automata "
                 "and their classical baselines"};
    app.require_subcommand(1);

    std::string format = "text";
    double tolerance = 1e-9;
    uint64_t seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tolerance", tolerance, "Well-formedness tolerance (check)");
    app.add_option("--seed", seed, "Reserved; randomness lives only in the test harnesses");
    // global flags may appear after the subcommand name
    app.fallthrough();

    std::string check_file, check_mode = "bounded";
    uint32_t check_max_len = 8;
    CLI::App* check = app.add_subcommand("check",
                                         "Verify well-formedness (mwkqfa) or reversibility "
                                         "(multihead-dfa)");
    check->add_option("file", check_file, "Automaton document")->required();
    check->add_option("--mode", check_mode, "Reversibility mode")
        ->check(CLI::IsMember({"bounded", "syntactic"}));
    check->add_option("--max-len", check_max_len, "Bounded-mode word length");

    std::string run_file, run_word, run_lower;
    bool run_has_lower = false;
    CommonRunFlags run_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "Run a machine on a word");
    run_cmd->add_option("file", run_file, "Automaton document")->required();
    run_cmd->add_option("--word", run_word, "Upper-strand word")->required();
    CLI::Option* lower_opt = run_cmd->add_option("--lower", run_lower,
                                                 "Explicit lower strand (otherwise all "
                                                 "complements are profiled)");
    run_cmd->add_option("--budget", run_flags.budget, "Step budget (0 = automatic)");
    run_cmd->add_option("--epsilon", run_flags.epsilon, "Mass epsilon");
    run_cmd->add_option("--cutpoint", run_flags.cutpoint, "Acceptance cutpoint");
    run_cmd->add_option("--guard", run_flags.guard, "Complement enumeration guard");

    std::string compare_file, compare_oracle;
    uint64_t compare_max_len = 6, compare_work_guard = 1'000'000;
    CommonRunFlags compare_flags;
    CLI::App* compare = app.add_subcommand("compare",
                                           "Sweep a machine against a language oracle");
    compare->add_option("file", compare_file, "Automaton document")->required();
    compare->add_option("--oracle", compare_oracle, "Oracle name")->required();
    compare->add_option("--max-len", compare_max_len, "Sweep length bound");
    compare->add_option("--cutpoint", compare_flags.cutpoint, "Acceptance cutpoint");
    compare->add_option("--budget", compare_flags.budget, "Step budget (0 = automatic)");
    compare->add_option("--epsilon", compare_flags.epsilon, "Mass epsilon");
    compare->add_option("--guard", compare_flags.guard, "Complement enumeration guard");
    compare->add_option("--work-guard", compare_work_guard, "Total run guard");

    std::string convert_file, convert_out, convert_mode = "syntactic";
    uint32_t convert_max_len = 8;
    CLI::App* convert = app.add_subcommand("convert",
                                           "Embed a reversible multihead-dfa into an mwkqfa");
    convert->add_option("file", convert_file, "Automaton document")->required();
    convert->add_option("--out", convert_out, "Output path")->required();
    convert->add_option("--mode", convert_mode, "Reversibility mode")
        ->check(CLI::IsMember({"bounded", "syntactic"}));
    convert->add_option("--max-len", convert_max_len, "Bounded-mode word length");

    std::string compl_file, compl_word;
    uint64_t compl_guard = wkqfa::kDefaultComplementGuard;
    CLI::App* compl_cmd = app.add_subcommand("complements",
                                             "Enumerate the complement strands of a word");
    compl_cmd->add_option("file", compl_file, "Automaton document")->required();
    compl_cmd->add_option("--word", compl_word, "Upper-strand word")->required();
    compl_cmd->add_option("--guard", compl_guard, "Enumeration guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    run_has_lower = lower_opt->count() > 0;
    try {
        if (app.got_subcommand(check)) {
            return cmd_check(check_file, format, tolerance, check_mode, check_max_len);
        }
        if (app.got_subcommand(run_cmd)) {
            return cmd_run(run_file, format, run_word, run_has_lower ? &run_lower : nullptr,
                           run_flags);
        }
        if (app.got_subcommand(compare)) {
            return cmd_compare(compare_file, format, compare_oracle, compare_max_len,
                               compare_work_guard, compare_flags);
        }
        if (app.got_subcommand(convert)) {
            return cmd_convert(convert_file, format, convert_out, convert_mode, convert_max_len);
        }
        if (app.got_subcommand(compl_cmd)) {
            return cmd_complements(compl_file, format, compl_word, compl_guard);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
