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

#include "forge/stabilizer.h"

#include <stdexcept>
#include <string>

namespace forge {

std::vector<size_t> StabilizerTableau::qubits_with_role(QubitRole role) const {
    std::vector<size_t> out;
    for (size_t q = 0; q < roles.size(); q++) {
        if (roles[q] == role) {
            out.push_back(q);
        }
    }
    return out;
}

void validate(const StabilizerTableau &t) {
    if (t.roles.size() != t.n_qubits) {
        throw std::invalid_argument("Tableau role list length differs from qubit count.");
    }
    if (t.generators.size() > t.n_qubits) {
        throw std::invalid_argument("Tableau has more generators than qubits.");
    }
    for (size_t g = 0; g < t.generators.size(); g++) {
        const PauliString &p = t.generators[g];
        if (p.num_qubits() != t.n_qubits) {
            throw std::invalid_argument("Generator " + std::to_string(g) + " has the wrong length.");
        }
        if (!p.is_hermitian()) {
            throw std::invalid_argument("Generator " + std::to_string(g) + " (" + p.str() + ") is not Hermitian.");
        }
        for (size_t h = g + 1; h < t.generators.size(); h++) {
            if (!commutes(p, t.generators[h])) {
                throw std::invalid_argument(
                    "Generators " + std::to_string(g) + " and " + std::to_string(h) + " anticommute.");
            }
        }
    }
    if (!is_independent(t.generators)) {
        throw std::invalid_argument("Tableau generators are linearly dependent.");
    }
}

bool is_independent(std::span<const PauliString> generators) {
    if (generators.empty()) {
        return true;
    }
    size_t n = generators[0].num_qubits();
    // Row reduce copies of the (x|z) bits; x columns first.
    std::vector<BitVec> rows;
    rows.reserve(generators.size());
    for (const PauliString &p : generators) {
        BitVec row(2 * n);
        for (size_t q = 0; q < n; q++) {
            row.set(q, p.x_bit(q));
            row.set(n + q, p.z_bit(q));
        }
        rows.push_back(std::move(row));
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].get(col)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    return rank == rows.size();
}

namespace {

bool tableau_bit(const PauliString &p, size_t col) {
    size_t n = p.num_qubits();
    return col < n ? p.x_bit(col) : p.z_bit(col - n);
}

}  // namespace

StabilizerTableau canonicalize(const StabilizerTableau &t) {
    StabilizerTableau out = t;
    size_t n = t.n_qubits;
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < out.generators.size(); col++) {
        size_t pivot = rank;
        while (pivot < out.generators.size() && !tableau_bit(out.generators[pivot], col)) {
            pivot++;
        }
        if (pivot == out.generators.size()) {
            continue;
        }
        std::swap(out.generators[rank], out.generators[pivot]);
        for (size_t g = 0; g < out.generators.size(); g++) {
            if (g != rank && tableau_bit(out.generators[g], col)) {
                out.generators[g] = multiply(out.generators[g], out.generators[rank]);
            }
        }
        rank++;
    }
    if (rank < out.generators.size()) {
        throw std::invalid_argument("Cannot canonicalize a dependent generating set.");
    }
    return out;
}

bool group_equal(const StabilizerTableau &a, const StabilizerTableau &b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("group_equal needs tableaus on the same qubit count.");
    }
    if (!a.is_full_rank() || !b.is_full_rank()) {
        throw std::invalid_argument("group_equal needs full descriptions (n generators on n qubits).");
    }
    StabilizerTableau ca = canonicalize(a);
    StabilizerTableau cb = canonicalize(b);
    return ca.generators == cb.generators;
}

StabilizerTableau from_graph(const std::vector<BitVec> &adjacency) {
    return from_graph(adjacency, std::vector<QubitRole>(adjacency.size(), QubitRole::output));
}

StabilizerTableau from_graph(const std::vector<BitVec> &adjacency, std::vector<QubitRole> roles) {
    size_t n = adjacency.size();
    for (size_t a = 0; a < n; a++) {
        if (adjacency[a].size() != n) {
            throw std::invalid_argument("Adjacency matrix is not square.");
        }
        if (adjacency[a].get(a)) {
            throw std::invalid_argument("Adjacency matrix has a self loop.");
        }
        for (size_t b = a + 1; b < n; b++) {
            if (adjacency[a].get(b) != adjacency[b].get(a)) {
                throw std::invalid_argument("Adjacency matrix is not symmetric.");
            }
        }
    }
    StabilizerTableau t;
    t.n_qubits = n;
    t.roles = std::move(roles);
    if (t.roles.size() != n) {
        throw std::invalid_argument("Role list length differs from vertex count.");
    }
    for (size_t a = 0; a < n; a++) {
        BitVec x(n);
        x.set(a, true);
        t.generators.push_back(PauliString(std::move(x), adjacency[a], 0));
    }
    return t;
}

}  // namespace forge
