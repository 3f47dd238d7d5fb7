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

#ifndef FORGE_AUX_OPS_H
#define FORGE_AUX_OPS_H

#include <vector>

#include "forge/stabilizer.h"

namespace forge {

/// Which role the distinguished qubit of a resource state plays: the sole
/// input of a 1->m task, or the sole output of an m->1 task.
enum class Side {
    single_input,
    single_output,
};

/// Complete description of a resource state |+>|G_0> + |->|G_1> on one
/// distinguished qubit plus m others, through the operators acting on the
/// branch pair:
///
///   K in k_set:  K|G_b> = |G_{1-b}>       (Z tensor K stabilizes the state)
///   F in f_set:  F|G_b> = (-1)^b |G_b>    (X tensor F stabilizes the state)
///
/// A complete description has |k_set| + |f_set| = m + 1. Every K
/// anticommutes with every F; K's commute among themselves, F's too.
struct AuxOps {
    Side side = Side::single_input;
    size_t m_qubits = 0;
    std::vector<PauliString> k_set;
    std::vector<PauliString> f_set;

    size_t total() const {
        return k_set.size() + f_set.size();
    }

    bool is_complete() const {
        return total() == m_qubits + 1;
    }

    /// Same operators reinterpreted with the distinguished qubit on the other
    /// side. Encoding and decoding resources share one description; only the
    /// role flag differs.
    AuxOps with_side(Side s) const {
        AuxOps out = *this;
        out.side = s;
        return out;
    }
};

/// The (m+1)-qubit tableau of the resource state: distinguished qubit first,
/// generators Z tensor K for each K, then X tensor F for each F. Roles follow
/// the side flag. Throws if the induced set fails validate().
StabilizerTableau to_stabilizers(const AuxOps &aux);

/// Splits a full tableau around one distinguished qubit. Deterministic pivot
/// policy: the first generator with an X or Y factor there becomes the
/// X-pivot and clears the x bits of the others; the first remaining generator
/// with a Z factor becomes the Z-pivot and clears the rest (including a Y on
/// the X-pivot); generators left with identity at the qubit are multiplied by
/// the Z-pivot. Afterwards every generator has a bare X or Z at the qubit and
/// splits into f_set/k_set in row order. Throws std::invalid_argument when
/// the qubit is unentangled (no two group members differ there).
///
/// The side is taken from the tableau's role for that qubit (input ->
/// single_input, output -> single_output).
AuxOps from_stabilizers(const StabilizerTableau &t, size_t distinguished);

}  // namespace forge

#endif
