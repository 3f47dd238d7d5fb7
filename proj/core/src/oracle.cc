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

#include "forge/oracle.h"

#include <cmath>
#include <stdexcept>

namespace forge {

namespace {

const Amplitude kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_cap(size_t n, size_t cap) {
    if (n > cap) {
        throw std::invalid_argument(
            "Dense oracle cap exceeded: " + std::to_string(n) + " qubits > " + std::to_string(cap) + ".");
    }
}

size_t index_mask(const BitVec &bits, size_t n) {
    size_t mask = 0;
    for (size_t q = 0; q < n; q++) {
        if (bits.get(q)) {
            mask |= size_t{1} << (n - 1 - q);
        }
    }
    return mask;
}

bool parity(size_t v) {
    return std::popcount(static_cast<uint64_t>(v)) & 1;
}

}  // namespace

DenseState DenseState::zeros(size_t n_qubits, size_t cap) {
    check_cap(n_qubits, cap);
    DenseState s;
    s.n_qubits = n_qubits;
    s.amps.assign(size_t{1} << n_qubits, Amplitude{0, 0});
    return s;
}

DenseState DenseState::basis(size_t n_qubits, size_t index, size_t cap) {
    DenseState s = zeros(n_qubits, cap);
    s.amps[index] = 1;
    return s;
}

double DenseState::norm() const {
    double total = 0;
    for (const Amplitude &a : amps) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

DenseState DenseState::normalized() const {
    double nrm = norm();
    if (nrm == 0) {
        throw std::invalid_argument("Cannot normalize the zero vector.");
    }
    DenseState out = *this;
    for (Amplitude &a : out.amps) {
        a /= nrm;
    }
    return out;
}

void apply_pauli(const PauliString &p, DenseState &s) {
    if (p.num_qubits() != s.n_qubits) {
        throw std::invalid_argument("Pauli length differs from state size.");
    }
    size_t n = s.n_qubits;
    size_t x_mask = index_mask(p.x_bits(), n);
    size_t z_mask = index_mask(p.z_bits(), n);
    Amplitude phase = kPhases[p.phase_exp()];
    std::vector<Amplitude> out(s.amps.size());
    for (size_t b = 0; b < s.amps.size(); b++) {
        Amplitude v = phase * s.amps[b];
        if (parity(b & z_mask)) {
            v = -v;
        }
        out[b ^ x_mask] = v;
    }
    s.amps = std::move(out);
}

void apply_1q(const Amplitude (&u)[2][2], size_t q, DenseState &s) {
    size_t bit = size_t{1} << (s.n_qubits - 1 - q);
    for (size_t b = 0; b < s.amps.size(); b++) {
        if (b & bit) {
            continue;
        }
        Amplitude a0 = s.amps[b];
        Amplitude a1 = s.amps[b | bit];
        s.amps[b] = u[0][0] * a0 + u[0][1] * a1;
        s.amps[b | bit] = u[1][0] * a0 + u[1][1] * a1;
    }
}

void apply_cz(size_t a, size_t b, DenseState &s) {
    size_t mask = (size_t{1} << (s.n_qubits - 1 - a)) | (size_t{1} << (s.n_qubits - 1 - b));
    for (size_t idx = 0; idx < s.amps.size(); idx++) {
        if ((idx & mask) == mask) {
            s.amps[idx] = -s.amps[idx];
        }
    }
}

void apply_cnot(size_t control, size_t target, DenseState &s) {
    size_t c_bit = size_t{1} << (s.n_qubits - 1 - control);
    size_t t_bit = size_t{1} << (s.n_qubits - 1 - target);
    for (size_t idx = 0; idx < s.amps.size(); idx++) {
        if ((idx & c_bit) && !(idx & t_bit)) {
            std::swap(s.amps[idx], s.amps[idx | t_bit]);
        }
    }
}

DenseState tensor(const DenseState &a, const DenseState &b, size_t cap) {
    DenseState out = DenseState::zeros(a.n_qubits + b.n_qubits, cap);
    for (size_t i = 0; i < a.amps.size(); i++) {
        for (size_t j = 0; j < b.amps.size(); j++) {
            out.amps[(i << b.n_qubits) | j] = a.amps[i] * b.amps[j];
        }
    }
    return out;
}

DenseState permute_qubits(const DenseState &s, const std::vector<size_t> &perm) {
    if (perm.size() != s.n_qubits) {
        throw std::invalid_argument("Permutation length differs from qubit count.");
    }
    DenseState out = DenseState::zeros(s.n_qubits, s.n_qubits);
    size_t n = s.n_qubits;
    for (size_t idx = 0; idx < s.amps.size(); idx++) {
        size_t new_idx = 0;
        for (size_t k = 0; k < n; k++) {
            if ((idx >> (n - 1 - perm[k])) & 1) {
                new_idx |= size_t{1} << (n - 1 - k);
            }
        }
        out.amps[new_idx] = s.amps[idx];
    }
    return out;
}

double fidelity_up_to_phase(const DenseState &a, const DenseState &b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("Fidelity needs equal qubit counts.");
    }
    DenseState na = a.normalized();
    DenseState nb = b.normalized();
    Amplitude overlap = 0;
    for (size_t i = 0; i < na.amps.size(); i++) {
        overlap += std::conj(na.amps[i]) * nb.amps[i];
    }
    return std::abs(overlap);
}

DenseState state_of(const StabilizerTableau &t, size_t cap) {
    check_cap(t.n_qubits, cap);
    if (!t.is_full_rank()) {
        throw std::invalid_argument("state_of needs a full description.");
    }
    validate(t);
    StabilizerTableau canon = canonicalize(t);
    size_t n = t.n_qubits;

    // A basis state overlaps the stabilized state exactly when it satisfies
    // the sign constraints of the X-free canonical generators. Scan indices in
    // order, checking those constraints instead of materializing projectors.
    std::vector<std::pair<size_t, bool>> constraints;
    for (const PauliString &g : canon.generators) {
        if (!g.x_bits().any()) {
            constraints.push_back({index_mask(g.z_bits(), n), g.sigma_phase_exp() == 2});
        }
    }
    size_t ref = 0;
    size_t limit = size_t{1} << n;
    for (; ref < limit; ref++) {
        bool ok = true;
        for (const auto &[mask, want] : constraints) {
            if (parity(ref & mask) != want) {
                ok = false;
                break;
            }
        }
        if (ok) {
            break;
        }
    }
    if (ref == limit) {
        throw std::invalid_argument("Stabilizer constraints are unsatisfiable; tableau is inconsistent.");
    }

    DenseState s = DenseState::basis(n, ref, cap);
    for (const PauliString &g : canon.generators) {
        DenseState gs = s;
        apply_pauli(g, gs);
        for (size_t i = 0; i < s.amps.size(); i++) {
            s.amps[i] = 0.5 * (s.amps[i] + gs.amps[i]);
        }
    }
    double nrm = s.norm();
    if (nrm < 1e-9) {
        throw std::invalid_argument("Projector product annihilated the reference state.");
    }
    return s.normalized();
}

DenseState jamiolkowski(const std::vector<std::vector<Amplitude>> &unitary, size_t n_in, size_t cap) {
    size_t dim = size_t{1} << n_in;
    if (unitary.size() != dim) {
        throw std::invalid_argument("Unitary dimension does not match qubit count.");
    }
    DenseState s = DenseState::zeros(2 * n_in, cap);
    double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (size_t b = 0; b < dim; b++) {
        // (id tensor U)|b>|b>: column b of U lands in the low (acted) half.
        for (size_t r = 0; r < dim; r++) {
            s.amps[(b << n_in) | r] += scale * unitary[r][b];
        }
    }
    return s;
}

DenseState jamiolkowski(const DenseState &c0, const DenseState &c1, size_t cap) {
    if (c0.n_qubits != c1.n_qubits) {
        throw std::invalid_argument("Codewords have different sizes.");
    }
    DenseState out = DenseState::zeros(1 + c0.n_qubits, cap);
    double scale = 1.0 / std::sqrt(2.0);
    for (size_t i = 0; i < c0.amps.size(); i++) {
        out.amps[i] = scale * c0.amps[i];
        out.amps[c0.amps.size() + i] = scale * c1.amps[i];
    }
    return out;
}

namespace {

size_t drop_two_bits(size_t idx, size_t n, size_t qa, size_t qb) {
    size_t out = 0;
    for (size_t q = 0; q < n; q++) {
        if (q == qa || q == qb) {
            continue;
        }
        out = (out << 1) | ((idx >> (n - 1 - q)) & 1);
    }
    return out;
}

}  // namespace

DenseState bell_project(const DenseState &s, size_t qa, size_t qb, PauliFactor outcome) {
    if (qa == qb || qa >= s.n_qubits || qb >= s.n_qubits) {
        throw std::invalid_argument("Bell projection needs two distinct qubits in range.");
    }
    size_t n = s.n_qubits;
    DenseState out = DenseState::zeros(n - 2, n);
    double scale = 1.0 / std::sqrt(2.0);
    for (size_t idx = 0; idx < s.amps.size(); idx++) {
        bool a = (idx >> (n - 1 - qa)) & 1;
        bool b = (idx >> (n - 1 - qb)) & 1;
        if (b != (a ^ outcome.j)) {
            continue;
        }
        // (id tensor sigma_{i,j})|phi+> has component i^{ij} (-1)^{ia}/sqrt(2)
        // at |a, a xor j>.
        Amplitude coef = kPhases[(outcome.i & outcome.j) ? 1 : 0] * scale;
        if (outcome.i && a) {
            coef = -coef;
        }
        out.amps[drop_two_bits(idx, n, qa, qb)] += std::conj(coef) * s.amps[idx];
    }
    return out;
}

DenseState project_z(const DenseState &s, size_t q, bool one) {
    size_t n = s.n_qubits;
    DenseState out = DenseState::zeros(n - 1, n);
    for (size_t idx = 0; idx < s.amps.size(); idx++) {
        if (((idx >> (n - 1 - q)) & 1) != one) {
            continue;
        }
        size_t r = 0;
        for (size_t k = 0; k < n; k++) {
            if (k != q) {
                r = (r << 1) | ((idx >> (n - 1 - k)) & 1);
            }
        }
        out.amps[r] = s.amps[idx];
    }
    return out;
}

DenseState project_x(const DenseState &s, size_t q, bool minus) {
    size_t n = s.n_qubits;
    DenseState out = DenseState::zeros(n - 1, n);
    double scale = 1.0 / std::sqrt(2.0);
    for (size_t idx = 0; idx < s.amps.size(); idx++) {
        bool bit = (idx >> (n - 1 - q)) & 1;
        Amplitude coef = (minus && bit) ? -scale : scale;
        size_t r = 0;
        for (size_t k = 0; k < n; k++) {
            if (k != q) {
                r = (r << 1) | ((idx >> (n - 1 - k)) & 1);
            }
        }
        out.amps[r] += coef * s.amps[idx];
    }
    return out;
}

Amplitude alpha(const DenseState &s, bool branch, const std::vector<bool> &k) {
    size_t m = s.n_qubits - 1;
    if (k.size() != m) {
        throw std::invalid_argument("alpha index length must match the non-distinguished qubit count.");
    }
    size_t k_mask = 0;
    for (size_t q = 0; q < m; q++) {
        if (k[q]) {
            k_mask |= size_t{1} << (m - 1 - q);
        }
    }
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Amplitude total = 0;
    double scale = 1.0 / static_cast<double>(size_t{1} << m);
    for (size_t r = 0; r < (size_t{1} << m); r++) {
        Amplitude g = inv_sqrt2 * (s.amps[r] + (branch ? -1.0 : 1.0) * s.amps[(size_t{1} << m) | r]);
        total += (parity(r & k_mask) ? -1.0 : 1.0) * g;
    }
    return scale * total;
}

}  // namespace forge
