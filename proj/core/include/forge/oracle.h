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

#ifndef FORGE_ORACLE_H
#define FORGE_ORACLE_H

#include <complex>
#include <vector>

#include "forge/pauli.h"
#include "forge/stabilizer.h"

namespace forge {

/// Default qubit cap for dense state vectors. Everything here is brute force
/// on purpose: it is the independent check for the group-level machinery, so
/// it must stay simple rather than fast.
inline constexpr size_t kDenseQubitCap = 14;

using Amplitude = std::complex<double>;

/// A dense 2^n state vector. Basis index bit order matches printing order:
/// qubit 0 is the most significant index bit.
struct DenseState {
    size_t n_qubits = 0;
    std::vector<Amplitude> amps;

    static DenseState zeros(size_t n_qubits, size_t cap = kDenseQubitCap);
    static DenseState basis(size_t n_qubits, size_t index, size_t cap = kDenseQubitCap);

    bool bit(size_t index, size_t q) const {
        return (index >> (n_qubits - 1 - q)) & 1;
    }

    double norm() const;
    DenseState normalized() const;
};

/// In-place P|s>.
void apply_pauli(const PauliString &p, DenseState &s);

/// In-place single qubit gate; u is row major 2x2.
void apply_1q(const Amplitude (&u)[2][2], size_t q, DenseState &s);

/// In-place controlled-Z between two qubits.
void apply_cz(size_t a, size_t b, DenseState &s);

/// In-place CNOT with the given control and target.
void apply_cnot(size_t control, size_t target, DenseState &s);

/// Tensor product, a's qubits first.
DenseState tensor(const DenseState &a, const DenseState &b, size_t cap = kDenseQubitCap);

/// Reorders qubits so that new qubit k is old qubit perm[k].
DenseState permute_qubits(const DenseState &s, const std::vector<size_t> &perm);

/// <a|b| up to global phase: |<a|b>| of the normalized states. 1 for equal
/// rays, 0 for orthogonal ones.
double fidelity_up_to_phase(const DenseState &a, const DenseState &b);

/// The unique state fixed by every generator of a full-rank tableau. The
/// reference basis state is the first computational index with nonzero
/// overlap (found from the canonical form's pure-Z sign constraints, then
/// confirmed by projection). Throws when n_qubits exceeds the cap.
DenseState state_of(const StabilizerTableau &t, size_t cap = kDenseQubitCap);

/// Resource state of a 1->n_in map given as a unitary: (id tensor U) applied
/// to n_in maximally entangled pairs. Qubit order: the n_in reference
/// qubits first (pair order), then the n_in qubits U acted on.
DenseState jamiolkowski(const std::vector<std::vector<Amplitude>> &unitary, size_t n_in,
                        size_t cap = kDenseQubitCap);

/// Resource state of an encoder with the given codewords:
/// (|0>|c0> + |1>|c1>)/sqrt(2), input qubit first.
DenseState jamiolkowski(const DenseState &c0, const DenseState &c1, size_t cap = kDenseQubitCap);

/// Projects qubits (qa, qb) onto the Bell state (id tensor sigma_{i,j})|phi+>
/// and removes them. Returns the unnormalized remainder; its norm is the
/// projection amplitude. Remaining qubits keep their relative order.
DenseState bell_project(const DenseState &s, size_t qa, size_t qb, PauliFactor outcome);

/// Projects qubit q onto |0> or |1> and removes it (unnormalized).
DenseState project_z(const DenseState &s, size_t q, bool one);

/// Projects qubit q onto |+> or |-> and removes it (unnormalized).
DenseState project_x(const DenseState &s, size_t q, bool minus);

/// Connecting amplitude of the branch decomposition: with s the resource
/// state (distinguished qubit 0, branches |G_b> on the rest),
/// alpha(s, b, k) = <phi+|^m (|k^x> |G_b>) = 2^{-m/2} <k^x|G_b>,
/// where k is the X-basis index bit per qubit.
Amplitude alpha(const DenseState &s, bool branch, const std::vector<bool> &k);

}  // namespace forge

#endif
