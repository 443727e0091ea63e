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

// Regenerates the golden automaton documents under a given directory. The
// committed golden/ files are this program's byte-exact output; the test
// suite re-runs it and compares.

#include <iostream>
#include <string>

#include "wkqfa/document.hpp"
#include "wkqfa/embeddings.hpp"
#include "wkqfa/harness.hpp"

using namespace wkqfa;

namespace {

void write(const std::string& dir, const std::string& name, AutomatonDocument doc) {
    const std::string path = dir + "/" + name + ".json";
    write_document_file(path, doc);
    std::cout << path << "\n";
}

AutomatonDocument quantum_doc(const std::string& name, const std::string& provenance,
                              Mwkqfa machine) {
    AutomatonDocument doc;
    doc.metadata.name = name;
    doc.metadata.provenance = provenance;
    doc.machine = std::move(machine);
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " <output-dir>\n";
        return 2;
    }
    const std::string dir = argv[1];

    for (const Sample& sample : sample_library()) {
        if (sample.name == "parity_embedded" || sample.name == "anbn_embedded") {
            continue;  // emitted below with their reversibility evidence
        }
        write(dir, sample.name, quantum_doc(sample.name, sample.description, sample.machine));
    }

    {
        AutomatonDocument doc;
        doc.metadata.name = "parity_dfa";
        doc.metadata.provenance = "single-head automaton for words with an even number of a's";
        doc.machine = make_parity_dfa();
        write(dir, "parity_dfa", doc);
    }
    {
        AutomatonDocument doc;
        doc.metadata.name = "anbn_dfa";
        doc.metadata.provenance = "two-head automaton for { a^n b^n }";
        doc.machine = make_anbn_dfa();
        write(dir, "anbn_dfa", doc);
    }
    {
        AutomatonDocument doc;
        doc.metadata.name = "anbn_wk";
        doc.metadata.provenance = "chunk-reading classical WK automaton for { a^n b^n }";
        doc.machine = make_anbn_wk();
        write(dir, "anbn_wk", doc);
    }

    const auto embed = [&](const MultiHeadDfa& d, const std::string& name,
                           const std::string& provenance) {
        const ReversibilityReport evidence =
            check_reversibility(d, ReversibilityMode::Syntactic);
        AutomatonDocument doc;
        doc.metadata.name = name;
        doc.metadata.provenance = provenance;
        ReversibilityEvidenceNote note;
        note.mode = std::string(to_string(ReversibilityMode::Syntactic));
        note.pass = evidence.pass;
        doc.metadata.reversibility = note;
        doc.machine = reversible_to_quantum(d, evidence).machine;
        write(dir, name, doc);
    };
    embed(make_parity_dfa(), "parity_embedded",
          "quantum embedding of the reversible parity automaton");
    embed(make_anbn_dfa(), "anbn_embedded",
          "quantum embedding of the reversible a^n b^n automaton");

    return 0;
}
