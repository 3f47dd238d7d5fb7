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

#ifndef FORGE_TASKS_H
#define FORGE_TASKS_H

#include <string>
#include <vector>

#include "forge/aux_ops.h"
#include "forge/codes.h"
#include "forge/graph_state.h"
#include "forge/stabilizer.h"

namespace forge {

/// A Bell measurement outcome, named by the state (id tensor sigma_{i,j})|phi+>
/// it projects onto: {0,0} phi+, {0,1} psi+, {1,0} phi-, {1,1} psi-.
using BellOutcome = PauliFactor;

enum class PlanEdgeKind {
    /// The inner node becomes the block inside every leg of the outer node.
    concatenate,
    /// Bell-link the distinguished qubits of two finished trees.
    couple,
};

struct PlanNode {
    std::string name;  ///< unique id referenced by edges
    std::string spec;  ///< code spec text, optionally wrapped encode(...) / decode(...)
    AuxOps ops;        ///< resolved operators
};

struct PlanEdge {
    PlanEdgeKind kind = PlanEdgeKind::concatenate;
    size_t from = 0;  ///< outer node (concatenate) / left partner (couple)
    size_t to = 0;    ///< inner node (concatenate) / right partner (couple)
};

/// A composition recipe. Concatenate edges nest one description inside
/// another's legs (the same block on every leg); since coupling consumes the
/// distinguished qubits, at most one couple edge is allowed and it is the
/// final step.
struct CompositionPlan {
    std::vector<PlanNode> nodes;
    std::vector<PlanEdge> edges;
};

struct TaskArtifact {
    StabilizerTableau tableau;
    GraphState graph;
};

/// Parses {"nodes": [{"id", "spec"}...], "edges": [{"kind", "from", "to"}...]}.
/// Node specs use the code grammar; wrapping in encode(...) or decode(...)
/// forces the input/output side. Throws std::invalid_argument on malformed
/// text, unknown ids, or duplicate ids.
CompositionPlan plan_from_json(const std::string &text);
std::string plan_to_json(const CompositionPlan &plan);

/// Evaluates a plan: concatenate edges fold inner nodes into their outer
/// nodes bottom-up (listed order; sides must match), then the optional couple
/// edge joins the two remaining trees (output-to-input, or output-to-output
/// as an entanglement swap). Without a couple edge, exactly one tree must
/// remain and its resource tableau is returned. The graph form is derived
/// from the tableau.
TaskArtifact build(const CompositionPlan &plan);

// --- Named pipelines ---

/// rounds-fold self-concatenation of the two-to-one purification step:
/// 2^rounds inputs, one output. Zero rounds is the plain wire.
AuxOps dejmps_tower(size_t rounds, Station station = Station::alice);

/// Purification at the logical level: every tower leg reads its qubit in
/// through the code's decoder block, and the purified output is re-encoded.
/// 2^rounds * m inputs, m outputs.
StabilizerTableau logical_epp(const CodeSpec &code, size_t rounds,
                              Station station = Station::alice);

/// Purification of pairs held in the two-qubit decoherence-free subspace: a
/// tower whose legs decode the DFS blocks, output kept as one bare qubit.
/// 2^(rounds+1) inputs, one output.
StabilizerTableau dfs_epp(size_t rounds, Station station = Station::alice);

/// Code switcher: the decoder of from_code coupled to the encoder of to_code.
StabilizerTableau switcher(const CodeSpec &from_code, const CodeSpec &to_code);

/// Syndrome readout resource: a switcher from the code to itself.
StabilizerTableau syndrome_readout(const CodeSpec &code);

/// Entanglement swap of two purification towers; every qubit is an input.
StabilizerTableau repeater(size_t left_rounds, size_t right_rounds,
                           Station station = Station::alice);

// --- Corrections ---

/// Read-in correction for an encoder: phi+ maps to the identity, psi+ to F,
/// phi- to K, psi- to F*K (first representatives; a product is exact up to
/// global phase). Acts on the m code qubits.
PauliString encode_correction(BellOutcome outcome, const AuxOps &aux);

struct DecodeDecision {
    PauliString correction;      ///< on the single decoded qubit
    PauliString detected_error;  ///< identity when no error was inferred
    bool error_detected = false;
    /// Pattern lies outside every correctable coset; correction stays the
    /// default identity.
    bool uncorrectable = false;
};

/// Classifies a decoder outcome pattern, one Bell outcome per code qubit.
/// Patterns whose induced Pauli lies in the operator span are clean logical
/// outcomes and map to the I/X/Y/Z correction of their logical class;
/// patterns one single-qubit error away report that error too (first hit in
/// qubit-major X<Y<Z order); everything else gets the default identity
/// correction with the uncorrectable flag set. Total: never throws on a
/// well-sized pattern.
DecodeDecision decode_correction(const std::vector<BellOutcome> &outcomes, const AuxOps &aux);

struct PurificationDecision {
    bool keep = false;
    PauliString correction;  ///< on the output qubit; identity when discarded
};

/// Success filter for purification read-in: keep exactly the patterns whose
/// induced Pauli lies in the operator span, with the logical correction of
/// their class; every other pattern discards the output.
PurificationDecision purification_decision(const std::vector<BellOutcome> &outcomes,
                                           const AuxOps &aux);

/// Pushes a Pauli byproduct acting on the input qubits through the resource
/// state: returns P_out with (P_in on inputs)|state> = (P_out on outputs)|state>,
/// phase-exact. Solved by GF(2) elimination against the generators' input
/// restrictions. Throws std::invalid_argument when no stabilizer matches the
/// input pattern; such a byproduct is detectable rather than propagable.
PauliString propagate_byproduct(const StabilizerTableau &t, const PauliString &input_pauli);

}  // namespace forge

#endif
