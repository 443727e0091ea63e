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

// End-to-end checks of the command-line tool: exit-code contract, report
// contents, golden regeneration.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wkqfa/document.hpp"
#include "wkqfa/harness.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(WKQFA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        output.append(buffer, n);
    }
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    return {WEXITSTATUS(status), output};
}

std::string golden(const std::string& name) {
    return std::string(WKQFA_GOLDEN_DIR) + "/" + name;
}

fs::path scratch_dir() {
    const fs::path dir = fs::path(WKQFA_SCRATCH_DIR);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("check: golden quantum files pass, a perturbed copy fails, junk is structural") {
    CHECK(run_cli("check " + golden("rotor_pi_4.json")).exit_code == 0);
    CHECK(run_cli("check " + golden("parity_embedded.json")).exit_code == 0);

    // +1e-3 on one matrix entry must be detected
    const fs::path perturbed = scratch_dir() / "perturbed.json";
    {
        nlohmann::ordered_json j =
            nlohmann::ordered_json::parse(slurp(golden("rotor_pi_4.json")));
        auto& entry = j["operators"][0]["matrix"][0][0][0];
        entry = entry.get<double>() + 1e-3;
        std::ofstream out(perturbed);
        out << j.dump(2) << "\n";
    }
    const CliResult fail = run_cli("check " + perturbed.string());
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("FAIL") != std::string::npos);

    const fs::path truncated = scratch_dir() / "truncated.json";
    {
        std::ofstream out(truncated);
        out << slurp(golden("rotor_pi_4.json")).substr(0, 50);
    }
    CHECK(run_cli("check " + truncated.string()).exit_code == 2);
}

TEST_CASE("check: reversibility dispatch for classical documents") {
    CHECK(run_cli("check " + golden("parity_dfa.json") + " --mode syntactic").exit_code == 0);
    CHECK(run_cli("check " + golden("anbn_dfa.json") + " --mode bounded --max-len 6").exit_code ==
          0);
    CHECK(run_cli("check " + golden("anbn_wk.json")).exit_code == 0);

    // an irreversible machine: two sources merge into one sink on 'a'
    const fs::path irreversible = scratch_dir() / "irreversible.json";
    {
        std::ofstream out(irreversible);
        out << R"({
  "format_version": "1",
  "kind": "multihead-dfa",
  "alphabet": ["a"],
  "states": [
    {"name": "s0", "initial": true},
    {"name": "s1"},
    {"name": "sink"}
  ],
  "heads": 1,
  "transitions": [
    {"from": "s0", "read": ["#"], "to": "s0", "move": [1]},
    {"from": "s0", "read": ["a"], "to": "sink", "move": [1]},
    {"from": "s1", "read": ["a"], "to": "sink", "move": [1]}
  ]
}
)";
    }
    const CliResult fail = run_cli("check " + irreversible.string() + " --mode syntactic");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("condition-2") != std::string::npos);
}

TEST_CASE("run: probabilities, verdicts, and precondition errors") {
    const CliResult ok = run_cli("run " + golden("rotor_pi_2.json") + " --word aa");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("best_p_acc: 1.000000000") != std::string::npos);
    CHECK(ok.output.find("verdict: accept") != std::string::npos);

    const CliResult rejected = run_cli("run " + golden("rotor_pi_2.json") + " --word a");
    CHECK(rejected.exit_code == 0);
    CHECK(rejected.output.find("verdict: reject") != std::string::npos);

    // identity relation: an explicit non-complementary lower strand is a
    // usage error
    const CliResult bad_pair =
        run_cli("run " + golden("anbn_embedded.json") + " --word ab --lower ba");
    CHECK(bad_pair.exit_code == 2);

    const CliResult classical = run_cli("run " + golden("anbn_dfa.json") + " --word aabb");
    CHECK(classical.exit_code == 0);
    CHECK(classical.output.find("accepted: yes") != std::string::npos);

    const CliResult wk = run_cli("run " + golden("anbn_wk.json") + " --word aab");
    CHECK(wk.exit_code == 0);
    CHECK(wk.output.find("accepted: no") != std::string::npos);

    // a stationary loop runs out of budget with all mass still live
    const fs::path stationary = scratch_dir() / "stationary.json";
    {
        std::ofstream out(stationary);
        out << R"({
  "format_version": "1",
  "kind": "mwkqfa",
  "alphabet": ["a"],
  "rho": "identity",
  "states": [
    {"name": "q0", "initial": true}
  ],
  "heads": {"upper": 1, "lower": 1},
  "moves": {"q0": [0, 0]},
  "operators": [
    {"tuple": ["#", "#"], "matrix": [[[1.0, 0.0]]]}
  ]
}
)";
    }
    const CliResult looping = run_cli("run " + stationary.string() + " --word a");
    CHECK(looping.exit_code == 0);
    CHECK(looping.output.find("halt=step-budget") != std::string::npos);
    CHECK(looping.output.find("p_residual=1.000000000") != std::string::npos);
}

TEST_CASE("run: json output mirrors the text report") {
    const CliResult r =
        run_cli("--format json run " + golden("rotor_pi_2.json") + " --word aa");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["command"] == "run");
    CHECK(j["best_p_acc"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(j["verdict"] == "accept");
    CHECK(j["entries"].size() == 1);
    CHECK(j["entries"][0]["halt_reason"] == "no-live-configurations");
}

TEST_CASE("compare: agreement, disagreement, unknown oracle") {
    CHECK(run_cli("compare " + golden("parity_embedded.json") +
                  " --oracle parity --max-len 6")
              .exit_code == 0);
    CHECK(run_cli("compare " + golden("anbn_embedded.json") + " --oracle anbn --max-len 6")
              .exit_code == 0);
    CHECK(run_cli("compare " + golden("anbn_dfa.json") + " --oracle anbn --max-len 8")
              .exit_code == 0);
    CHECK(run_cli("compare " + golden("anbn_wk.json") + " --oracle anbn --max-len 6")
              .exit_code == 0);

    const CliResult disagree =
        run_cli("compare " + golden("anbn_embedded.json") + " --oracle parity --max-len 4");
    CHECK(disagree.exit_code == 1);
    CHECK(disagree.output.find("DISAGREE") != std::string::npos);

    CHECK(run_cli("compare " + golden("parity_embedded.json") + " --oracle foo").exit_code == 2);
}

TEST_CASE("convert: embeds a reversible machine whose output passes check") {
    const fs::path out = scratch_dir() / "parity_converted.json";
    const CliResult converted =
        run_cli("convert " + golden("parity_dfa.json") + " --out " + out.string());
    CHECK(converted.exit_code == 0);
    CHECK(run_cli("check " + out.string() + " --tolerance 1e-9").exit_code == 0);
    CHECK(run_cli("compare " + out.string() + " --oracle parity --max-len 6").exit_code == 0);

    // the emitted document records the reversibility evidence
    const wkqfa::AutomatonDocument doc = wkqfa::load_document_file(out.string());
    REQUIRE(doc.metadata.reversibility.has_value());
    CHECK(doc.metadata.reversibility->mode == "syntactic");
    CHECK(doc.metadata.reversibility->pass);

    const CliResult irreversible =
        run_cli("convert " + (scratch_dir() / "irreversible.json").string() + " --out " +
                (scratch_dir() / "nope.json").string());
    CHECK(irreversible.exit_code == 1);

    const CliResult mismatch = run_cli("convert " + golden("rotor_pi_4.json") + " --out " +
                                       (scratch_dir() / "mismatch.json").string());
    CHECK(mismatch.exit_code == 2);
}

TEST_CASE("complements: enumerates lower strands of a word") {
    const fs::path file = scratch_dir() / "noninjective.json";
    {
        std::ofstream out(file);
        out << R"({
  "format_version": "1",
  "kind": "classical-wk",
  "alphabet": ["a", "b"],
  "rho": [["a", "a"], ["a", "b"], ["b", "b"]],
  "states": [
    {"name": "q0", "initial": true, "final": true}
  ],
  "rules": []
}
)";
    }
    const CliResult r = run_cli("complements " + file.string() + " --word a");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "a\nb\n");

    // a multihead-dfa document has no relation to enumerate from
    CHECK(run_cli("complements " + golden("anbn_dfa.json") + " --word a").exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("run --word a").exit_code == 2);  // missing file
    CHECK(run_cli("check /nonexistent/file.json").exit_code == 2);
}

TEST_CASE("the committed golden files are exactly the generator's output") {
    const fs::path dir = scratch_dir() / "golden_regen";
    fs::create_directories(dir);
    const std::string command =
        std::string(WKQFA_MAKE_GOLDEN_PATH) + " " + dir.string() + " > /dev/null 2>&1";
    REQUIRE(std::system(command.c_str()) == 0);

    size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(WKQFA_GOLDEN_DIR)) {
        if (entry.path().extension() != ".json") {
            continue;
        }
        const fs::path regenerated = dir / entry.path().filename();
        CAPTURE(entry.path().string());
        REQUIRE(fs::exists(regenerated));
        CHECK(slurp(regenerated) == slurp(entry.path()));
        ++compared;
    }
    CHECK(compared >= 6);
}
