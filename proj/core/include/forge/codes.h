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

#ifndef FORGE_CODES_H
#define FORGE_CODES_H

#include <string>
#include <string_view>

#include "forge/aux_ops.h"

namespace forge {

/// The two ends of a purification link. The resource state at bob's end is
/// the alice state with the |G_0> branch sign flipped.
enum class Station {
    alice,
    bob,
};

enum class CodeKind {
    bitflip,
    phaseflip,
    shor,
    ring5,
    dejmps,
    dfs,
    wire,
};

/// A parsed task-family name plus a concatenation depth.
///
/// Text grammar (round-trips with to_text):
///
///     bitflip:3   phaseflip:3   shor:3x3   ring5   dejmps:alice   dfs   wire
///
/// with an optional depth suffix `@2`. Depth 1 is the family itself, depth 0
/// degenerates to the identity channel (wire).
struct CodeSpec {
    CodeKind kind = CodeKind::wire;
    size_t m1 = 0;  // repetition length; first Shor block size
    size_t m2 = 0;  // second Shor block size
    Station station = Station::alice;
    size_t levels = 1;

    bool operator==(const CodeSpec &other) const = default;
};

CodeSpec parse_code_spec(std::string_view text);
std::string to_text(const CodeSpec &spec);

/// m-qubit bit-flip repetition code: k_set = {Z at qubit q}, f_set = {X on
/// every qubit}. Requires m >= 2; correction guarantees need odd m.
AuxOps bitflip(size_t m);

/// Hadamard dual of bitflip: k_set = {X at qubit q}, f_set = {Z on every
/// qubit}. Requires m >= 2.
AuxOps phaseflip(size_t m);

/// [m1, m2] generalized Shor code on m1*m2 qubits: k_set has X across each
/// block of m2 qubits; f_set holds one Z per block, reduced to the
/// independent ladder subset (base row uses the first qubit of every block,
/// then each block in turn, last block first, walks its Z across the
/// remaining positions). Group-equal to phaseflip(m1) concatenated over
/// bitflip(m2). Requires m1, m2 >= 2.
AuxOps generalized_shor(size_t m1, size_t m2);

/// Five-qubit ring cluster code, entered as its fixed six-generator tableau.
AuxOps cluster_ring();

/// Two-to-one recurrence purification step. The alice sets are
/// k_set = {-YI, -IY}, f_set = {-ZZ}; the bob sets are recovered at runtime
/// by sign-fitting the alice generators against the dense branch-flipped
/// state rather than by hand-picked signs.
AuxOps dejmps(Station station);

/// Two-qubit decoherence-free-subspace encoder with codewords |01> and |10>.
/// The operator signs are recovered by sign-fitting against the dense
/// encoder state.
AuxOps dfs();

/// Identity channel: k_set = {Z}, f_set = {X} on one qubit (a Bell pair as a
/// resource state).
AuxOps wire();

/// `levels`-fold self-concatenation: level 1 is `base`, and each further
/// level places the previous level inside every leg of `base`. Level 0 is
/// wire() with base's side.
AuxOps concat_levels(const AuxOps &base, size_t levels);

/// Constructor dispatch for a parsed spec, concatenation depth applied.
/// Purification families default to the single_output side, everything else
/// to single_input; flip with AuxOps::with_side.
AuxOps make_aux(const CodeSpec &spec);

}  // namespace forge

#endif
