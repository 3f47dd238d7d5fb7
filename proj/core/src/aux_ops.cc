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

#include "forge/aux_ops.h"

#include <stdexcept>

namespace forge {

StabilizerTableau to_stabilizers(const AuxOps &aux) {
    if (!aux.is_complete()) {
        throw std::invalid_argument(
            "to_stabilizers needs a complete description: " + std::to_string(aux.total()) +
            " operators for " + std::to_string(aux.m_qubits) + " qubits.");
    }
    StabilizerTableau t;
    t.n_qubits = aux.m_qubits + 1;
    QubitRole distinguished = aux.side == Side::single_input ? QubitRole::input : QubitRole::output;
    QubitRole rest = aux.side == Side::single_input ? QubitRole::output : QubitRole::input;
    t.roles.assign(t.n_qubits, rest);
    t.roles[0] = distinguished;
    PauliString z1 = PauliString::single(1, 0, 'Z');
    PauliString x1 = PauliString::single(1, 0, 'X');
    for (const PauliString &k : aux.k_set) {
        t.generators.push_back(tensor(z1, k));
    }
    for (const PauliString &f : aux.f_set) {
        t.generators.push_back(tensor(x1, f));
    }
    validate(t);
    return t;
}

AuxOps from_stabilizers(const StabilizerTableau &t, size_t distinguished) {
    if (distinguished >= t.n_qubits) {
        throw std::invalid_argument("Distinguished qubit index out of range.");
    }
    if (!t.is_full_rank()) {
        throw std::invalid_argument("from_stabilizers needs a full description.");
    }
    std::vector<PauliString> rows = t.generators;

    size_t x_pivot = rows.size();
    for (size_t g = 0; g < rows.size(); g++) {
        if (rows[g].x_bit(distinguished)) {
            x_pivot = g;
            break;
        }
    }
    if (x_pivot == rows.size()) {
        throw std::invalid_argument("Distinguished qubit is unentangled (no X or Y component in the group).");
    }
    for (size_t g = 0; g < rows.size(); g++) {
        if (g != x_pivot && rows[g].x_bit(distinguished)) {
            rows[g] = multiply(rows[g], rows[x_pivot]);
        }
    }

    size_t z_pivot = rows.size();
    for (size_t g = 0; g < rows.size(); g++) {
        if (g != x_pivot && rows[g].z_bit(distinguished)) {
            z_pivot = g;
            break;
        }
    }
    if (z_pivot == rows.size()) {
        throw std::invalid_argument("Distinguished qubit is unentangled (no Z component left in the group).");
    }
    for (size_t g = 0; g < rows.size(); g++) {
        if (g != z_pivot && rows[g].z_bit(distinguished)) {
            rows[g] = multiply(rows[g], rows[z_pivot]);
        }
    }
    // Anything untouched at the distinguished qubit becomes a K by absorbing
    // the Z-pivot: (id x S)(Z x K) = Z x SK still swaps the branches.
    for (size_t g = 0; g < rows.size(); g++) {
        if (g != x_pivot && g != z_pivot && !rows[g].x_bit(distinguished) && !rows[g].z_bit(distinguished)) {
            rows[g] = multiply(rows[g], rows[z_pivot]);
        }
    }

    std::vector<size_t> others;
    for (size_t q = 0; q < t.n_qubits; q++) {
        if (q != distinguished) {
            others.push_back(q);
        }
    }

    AuxOps aux;
    aux.m_qubits = t.n_qubits - 1;
    aux.side = t.roles[distinguished] == QubitRole::input ? Side::single_input : Side::single_output;
    for (const PauliString &row : rows) {
        bool x = row.x_bit(distinguished);
        bool z = row.z_bit(distinguished);
        if (x && !z) {
            aux.f_set.push_back(row.restricted_to(others));
        } else if (z && !x) {
            aux.k_set.push_back(row.restricted_to(others));
        } else {
            throw std::invalid_argument("Splitting left a generator without a bare X or Z at the distinguished qubit.");
        }
    }
    return aux;
}

}  // namespace forge
