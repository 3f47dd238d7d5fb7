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

#ifndef FORGE_STABILIZER_H
#define FORGE_STABILIZER_H

#include <span>
#include <vector>

#include "forge/pauli.h"

namespace forge {

enum class QubitRole {
    input,
    output,
    virtual_link,
};

/// A list of commuting, independent, Hermitian sign +/-1 Pauli generators,
/// plus a role tag per qubit. A full description of an n-qubit state has n
/// generators; composition code only ever produces full descriptions.
///
/// This is a value type: operations return new tableaus. There is no
/// measurement simulation here, only group-level bookkeeping.
struct StabilizerTableau {
    size_t n_qubits = 0;
    std::vector<PauliString> generators;
    std::vector<QubitRole> roles;

    bool is_full_rank() const {
        return generators.size() == n_qubits;
    }

    std::vector<size_t> qubits_with_role(QubitRole role) const;
};

/// Checks lengths, Hermitian +/-1 signs, pairwise commutation and
/// independence. Throws std::invalid_argument naming the first failure.
void validate(const StabilizerTableau &t);

/// True when the binary (x|z) rows of the generators are linearly
/// independent over GF(2).
bool is_independent(std::span<const PauliString> generators);

/// Unique canonical form of the generated group: Gauss-Jordan elimination on
/// the (x|z) matrix with all x columns before all z columns and lexicographic
/// pivot order. Row operations are phase-exact Pauli multiplications, so the
/// canonical generators carry the group's true signs. Idempotent; two
/// generating sets of the same group canonicalize identically.
StabilizerTableau canonicalize(const StabilizerTableau &t);

/// Whether a and b generate the same group (signs included). Both must be
/// full rank; throws otherwise.
bool group_equal(const StabilizerTableau &a, const StabilizerTableau &b);

/// Graph-state tableau K_a = X_a * prod_{b ~ a} Z_b from a symmetric,
/// zero-diagonal adjacency matrix (row a = neighbors of vertex a). Roles
/// default to output when not given.
StabilizerTableau from_graph(const std::vector<BitVec> &adjacency);
StabilizerTableau from_graph(const std::vector<BitVec> &adjacency, std::vector<QubitRole> roles);

}  // namespace forge

#endif
