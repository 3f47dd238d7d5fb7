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

#ifndef FORGE_CONCAT_H
#define FORGE_CONCAT_H

/// Composition engine for auxiliary-operator descriptions.
///
/// A description with m legs can be concatenated with an inner description
/// applied to every leg. Each letter sigma_{i,j} of an outer operator is
/// replaced by the inner block F^j * K^i; the replacement phase works out so
/// that the composed operator again satisfies the defining flip/sign relations
/// on the composed state. Repeating the replacement over a deterministic
/// staircase of inner choices yields a full independent description of the
/// composed state.

#include <cstddef>
#include <vector>

#include "forge/aux_ops.h"
#include "forge/pauli.h"
#include "forge/stabilizer.h"

namespace forge {

/// A concatenation problem: `outer` owns the distinguished qubit of the
/// composite; a copy of `inner` is attached to every one of outer's legs.
/// Both descriptions must sit on the same side (an encoder tree composes
/// encoders; a purification tree composes purifiers).
struct RecurrenceInput {
    AuxOps outer;
    AuxOps inner;
};

/// Picks one inner operator per outer leg.
///
/// k_pick[s] indexes inner.k_set and is consulted only where the outer letter
/// has its z-component set; f_pick[r] indexes inner.f_set and is consulted
/// only where the x-component is set. Empty vectors mean "first element
/// everywhere".
struct SlotChoice {
    std::vector<size_t> k_pick;
    std::vector<size_t> f_pick;
};

/// Composes one flip-type (K) outer operator with inner blocks.
///
/// For outer_k = a * tensor_l sigma_{i_l, j_l} the result is
/// c * tensor_l (F_l^{j_l} * K_l^{i_l}) with c = a * prod_l i^{i_l j_l},
/// where F_l, K_l are the chosen inner operators for leg l. Legs where the
/// outer letter is the identity receive the identity block.
///
/// Throws std::invalid_argument when a needed inner set is empty or a pick is
/// out of range.
PauliString extend_k(const PauliString &outer_k, const AuxOps &inner, const SlotChoice &choose = {});

/// Composes one sign-type (F) outer operator. Same replacement and phase rule
/// as extend_k; only the defining relation being preserved differs.
PauliString extend_f(const PauliString &outer_f, const AuxOps &inner, const SlotChoice &choose = {});

/// Builds the complete description of the composed task.
///
/// Enumerates, for every outer operator, the staircase family of inner
/// choices (all-first baseline, then one leg at a time deviating), keeps
/// candidates whose induced stabilizer rows grow the rank, and returns the
/// resulting sets. The result always holds exactly
/// outer.m_qubits * inner.m_qubits + 1 operators; failure to reach that rank
/// indicates a malformed input and throws std::runtime_error.
AuxOps build_next_level(const RecurrenceInput &r);

/// Joins a single-output description to a single-input description through a
/// Bell projection of the two distinguished qubits.
///
/// The stabilizers of the joint state are the pairwise tensor products
/// K_a (x) K_b and F_a (x) F_b; the independent staircase subset has exactly
/// a.m_qubits + b.m_qubits elements. Qubits of `a` come first and keep their
/// input role; qubits of `b` follow as outputs.
///
/// Throws std::invalid_argument on a side mismatch.
StabilizerTableau couple(const AuxOps &a, const AuxOps &b);

/// Joins two single-output descriptions at their distinguished qubits, as an
/// entanglement swap does. Same product construction as couple; all remaining
/// qubits keep their input role.
StabilizerTableau swap_join(const AuxOps &a, const AuxOps &b);

/// Performs one Bell projection of a full construction step: outer qubit
/// `marked` is replaced by the block of inner's non-distinguished qubits,
/// spliced in at the marked position.
///
/// Every generator of `outer` has its letter at `marked` rewritten to
/// F^j * K^i; the staircase over inner choices followed by a rank filter
/// yields exactly outer.n_qubits + inner.m_qubits - 1 generators, the
/// expected M + N - 2 for an M-qubit state joined to an N-qubit state.
StabilizerTableau single_projection(const StabilizerTableau &outer, size_t marked, const AuxOps &inner);

/// Rows of the independent-selection pattern for m slots with n choices each:
/// the all-zero row, then, for one slot at a time from the last to the first,
/// each nonzero choice. Size is n*m - m + 1.
std::vector<std::vector<size_t>> staircase_rows(size_t n_choices, size_t m_slots);

/// Expected number of independent slot assignments: n*m - m + 1.
size_t staircase_count(size_t n_choices, size_t m_slots);

/// Expected operator count after one full composition level:
/// legs * inner_width + 1.
size_t level_count(size_t outer_legs, size_t inner_width);

/// Expected generator count after joining two descriptions: m_a + m_b.
size_t coupling_count(size_t m_a, size_t m_b);

/// Expected generator count after a single Bell projection joining an M-qubit
/// state to an N-qubit state: M + N - 2.
size_t projection_count(size_t m_state_qubits, size_t n_state_qubits);

}  // namespace forge

#endif
