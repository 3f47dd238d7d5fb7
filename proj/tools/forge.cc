// Copyright 2026 The forge authors
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

// forge: build, inspect and verify measurement-based resource states.
//
//   forge build plan.json [--out tableau.json] [--graph out.dot]
//   forge corrections tableau.json
//   forge verify tableau.json

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "forge/json_io.h"
#include "forge/oracle.h"
#include "forge/tasks.h"

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << content;
}

forge::GraphFormat graph_format_for(const std::string &path) {
    if (path.ends_with(".dot")) {
        return forge::GraphFormat::dot;
    }
    if (path.ends_with(".graphml")) {
        return forge::GraphFormat::graphml;
    }
    if (path.ends_with(".json")) {
        return forge::GraphFormat::json;
    }
    throw std::runtime_error("graph output wants a .dot, .graphml or .json path: " + path);
}

const char *outcome_name(forge::BellOutcome outcome) {
    if (!outcome.i) {
        return outcome.j ? "psi+" : "phi+";
    }
    return outcome.j ? "psi-" : "phi-";
}

void print_summary(const forge::StabilizerTableau &t) {
    size_t inputs = t.qubits_with_role(forge::QubitRole::input).size();
    size_t outputs = t.qubits_with_role(forge::QubitRole::output).size();
    std::cout << t.n_qubits << " qubits (" << inputs << " in, " << outputs << " out), "
              << t.generators.size() << " generators\n";
    for (const forge::PauliString &g : t.generators) {
        std::cout << "  " << g.str() << "\n";
    }
}

int run_build(const std::string &plan_path, const std::string &out_path,
              const std::string &graph_path) {
    forge::CompositionPlan plan = forge::plan_from_json(read_file(plan_path));
    forge::TaskArtifact artifact = forge::build(plan);
    print_summary(artifact.tableau);
    if (!out_path.empty()) {
        write_file(out_path, forge::tableau_to_json(artifact.tableau));
        std::cout << "tableau -> " << out_path << "\n";
    }
    if (!graph_path.empty()) {
        write_file(graph_path, forge::export_graph(artifact.graph, graph_format_for(graph_path)));
        std::cout << "graph -> " << graph_path << "\n";
    }
    return 0;
}

int run_corrections(const std::string &tableau_path) {
    forge::StabilizerTableau t = forge::tableau_from_json(read_file(tableau_path));
    forge::validate(t);
    std::vector<size_t> inputs = t.qubits_with_role(forge::QubitRole::input);
    std::vector<size_t> outputs = t.qubits_with_role(forge::QubitRole::output);
    if (inputs.size() == 1) {
        forge::AuxOps aux = forge::from_stabilizers(t, inputs[0]);
        std::cout << "encoder read-in corrections (" << aux.m_qubits << " code qubits):\n";
        for (bool i : {false, true}) {
            for (bool j : {false, true}) {
                forge::BellOutcome outcome{i, j};
                std::cout << "  " << outcome_name(outcome) << "  ->  "
                          << forge::encode_correction(outcome, aux).str() << "\n";
            }
        }
        return 0;
    }
    if (outputs.size() == 1) {
        forge::AuxOps aux = forge::from_stabilizers(t, outputs[0]);
        if (aux.m_qubits > 6) {
            throw std::runtime_error("decoder table would have 4^" +
                                     std::to_string(aux.m_qubits) +
                                     " rows; printing stops at 6 code qubits");
        }
        std::cout << "decoder outcome classification (" << aux.m_qubits << " code qubits):\n";
        size_t patterns = size_t(1) << (2 * aux.m_qubits);
        for (size_t code = 0; code < patterns; code++) {
            std::vector<forge::BellOutcome> outcomes(aux.m_qubits);
            for (size_t q = 0; q < aux.m_qubits; q++) {
                outcomes[q].i = (code >> (2 * q)) & 1;
                outcomes[q].j = (code >> (2 * q + 1)) & 1;
            }
            forge::DecodeDecision d = forge::decode_correction(outcomes, aux);
            std::cout << " ";
            for (forge::BellOutcome outcome : outcomes) {
                std::cout << " " << outcome_name(outcome);
            }
            std::cout << "  ->  " << d.correction.str();
            if (d.error_detected) {
                std::cout << "  error " << d.detected_error.str();
            }
            if (d.uncorrectable) {
                std::cout << "  uncorrectable";
            }
            std::cout << "\n";
        }
        return 0;
    }
    throw std::runtime_error(
        "corrections wants a tableau with a single input (encoder) or a single output (decoder)");
}

int run_verify(const std::string &tableau_path) {
    forge::StabilizerTableau t = forge::tableau_from_json(read_file(tableau_path));
    forge::validate(t);
    if (!t.is_full_rank()) {
        throw std::runtime_error("tableau is not a full state description (" +
                                 std::to_string(t.generators.size()) + " generators for " +
                                 std::to_string(t.n_qubits) + " qubits)");
    }
    if (t.n_qubits > forge::kDenseQubitCap) {
        std::cout << "ok: " << t.n_qubits
                  << " qubits, group checks passed (dense check skipped above "
                  << forge::kDenseQubitCap << " qubits)\n";
        return 0;
    }
    forge::DenseState psi = forge::state_of(t);
    for (const forge::PauliString &g : t.generators) {
        forge::DenseState moved = psi;
        forge::apply_pauli(g, moved);
        double fid = forge::fidelity_up_to_phase(psi, moved);
        if (fid < 1.0 - 1e-10) {
            throw std::runtime_error("generator " + g.str() + " does not fix the dense state");
        }
    }
    std::cout << "ok: " << t.n_qubits << " qubits, group checks and dense check passed\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"resource-state forge for composed Clifford tasks"};
    app.require_subcommand(1);

    std::string plan_path;
    std::string out_path;
    std::string graph_path;
    CLI::App *build = app.add_subcommand("build", "evaluate a composition plan");
    build->add_option("plan", plan_path, "plan JSON file")->required();
    build->add_option("--out", out_path, "write the tableau JSON here");
    build->add_option("--graph", graph_path, "write the graph form (.dot/.graphml/.json)");

    std::string corrections_path;
    CLI::App *corrections =
        app.add_subcommand("corrections", "print read-in correction tables for a tableau");
    corrections->add_option("tableau", corrections_path, "tableau JSON file")->required();

    std::string verify_path;
    CLI::App *verify = app.add_subcommand("verify", "validate a tableau (dense check up to 14 qubits)");
    verify->add_option("tableau", verify_path, "tableau JSON file")->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (build->parsed()) {
            return run_build(plan_path, out_path, graph_path);
        }
        if (corrections->parsed()) {
            return run_corrections(corrections_path);
        }
        return run_verify(verify_path);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
