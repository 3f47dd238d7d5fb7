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

#include "forge/pauli.h"

#include <stdexcept>

namespace forge {

PauliString::PauliString(BitVec x, BitVec z, uint8_t phase_exp)
    : x_(std::move(x)), z_(std::move(z)), phase_exp_(phase_exp & 3) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("PauliString x/z length mismatch.");
    }
}

PauliString PauliString::identity(size_t num_qubits) {
    return PauliString(BitVec(num_qubits), BitVec(num_qubits), 0);
}

PauliString PauliString::single(size_t num_qubits, size_t q, char letter) {
    PauliString p = identity(num_qubits);
    p.set_letter(q, letter);
    return p;
}

void PauliString::set_letter(size_t q, char letter) {
    // Unset any Y that was there, so the folded phase stays consistent.
    if (x_.get(q) && z_.get(q)) {
        phase_exp_ = (phase_exp_ + 3) & 3;
    }
    switch (letter) {
        case 'I':
            x_.set(q, false);
            z_.set(q, false);
            break;
        case 'X':
            x_.set(q, true);
            z_.set(q, false);
            break;
        case 'Z':
            x_.set(q, false);
            z_.set(q, true);
            break;
        case 'Y':
            x_.set(q, true);
            z_.set(q, true);
            phase_exp_ = (phase_exp_ + 1) & 3;
            break;
        default:
            throw std::invalid_argument("Unknown Pauli letter.");
    }
}

char PauliString::letter(size_t q) const {
    bool x = x_.get(q);
    bool z = z_.get(q);
    if (x && z) {
        return 'Y';
    }
    if (x) {
        return 'X';
    }
    if (z) {
        return 'Z';
    }
    return 'I';
}

uint8_t PauliString::sigma_phase_exp() const {
    size_t ys = x_.and_popcount(z_);
    return static_cast<uint8_t>((phase_exp_ + 4 - (ys & 3)) & 3);
}

bool PauliString::is_hermitian() const {
    return ((phase_exp_ + x_.and_popcount(z_)) & 1) == 0;
}

PauliString PauliString::restricted_to(const std::vector<size_t> &keep) const {
    BitVec x(keep.size());
    BitVec z(keep.size());
    for (size_t k = 0; k < keep.size(); k++) {
        x.set(k, x_.get(keep[k]));
        z.set(k, z_.get(keep[k]));
    }
    return PauliString(std::move(x), std::move(z), phase_exp_);
}

std::string PauliString::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[sigma_phase_exp()];
    for (size_t q = 0; q < num_qubits(); q++) {
        out.push_back(letter(q));
    }
    return out;
}

PauliString PauliString::from_text(std::string_view text) {
    uint8_t sigma_phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        if (text[0] == '-') {
            sigma_phase = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        sigma_phase = (sigma_phase + 1) & 3;
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("Pauli text needs at least one letter.");
    }
    BitVec x(text.size());
    BitVec z(text.size());
    size_t ys = 0;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                x.set(q, true);
                break;
            case 'Z':
                z.set(q, true);
                break;
            case 'Y':
                x.set(q, true);
                z.set(q, true);
                ys++;
                break;
            default:
                throw std::invalid_argument("Pauli text has a character outside +-iIXYZ.");
        }
    }
    return PauliString(std::move(x), std::move(z), static_cast<uint8_t>((sigma_phase + ys) & 3));
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli product length mismatch.");
    }
    // Reordering (X^xa Z^za)(X^xb Z^zb) into X-then-Z form commutes each Z of
    // a past each X of b on the same qubit, at a cost of -1 per crossing.
    uint8_t phase = (a.phase_exp() + b.phase_exp() + 2 * a.z_bits().and_popcount(b.x_bits())) & 3;
    BitVec x = a.x_bits();
    x ^= b.x_bits();
    BitVec z = a.z_bits();
    z ^= b.z_bits();
    return PauliString(std::move(x), std::move(z), phase);
}

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli commutation length mismatch.");
    }
    return (a.x_bits().parity_and(b.z_bits()) ^ a.z_bits().parity_and(b.x_bits())) == 0;
}

PauliString tensor(const PauliString &a, const PauliString &b) {
    size_t n = a.num_qubits() + b.num_qubits();
    BitVec x(n);
    BitVec z(n);
    for (size_t q = 0; q < a.num_qubits(); q++) {
        x.set(q, a.x_bit(q));
        z.set(q, a.z_bit(q));
    }
    for (size_t q = 0; q < b.num_qubits(); q++) {
        x.set(a.num_qubits() + q, b.x_bit(q));
        z.set(a.num_qubits() + q, b.z_bit(q));
    }
    return PauliString(std::move(x), std::move(z), (a.phase_exp() + b.phase_exp()) & 3);
}

FactorDecomposition factor_decompose(const PauliString &p) {
    FactorDecomposition d;
    d.phase_exp = p.sigma_phase_exp();
    d.factors.reserve(p.num_qubits());
    for (size_t q = 0; q < p.num_qubits(); q++) {
        d.factors.push_back(PauliFactor{p.z_bit(q), p.x_bit(q)});
    }
    return d;
}

PauliString recompose(const FactorDecomposition &d) {
    BitVec x(d.factors.size());
    BitVec z(d.factors.size());
    size_t ys = 0;
    for (size_t q = 0; q < d.factors.size(); q++) {
        x.set(q, d.factors[q].j);
        z.set(q, d.factors[q].i);
        ys += d.factors[q].i && d.factors[q].j;
    }
    return PauliString(std::move(x), std::move(z), static_cast<uint8_t>((d.phase_exp + ys) & 3));
}

int bell_transfer_sign(PauliFactor f) {
    return (f.i && f.j) ? -1 : 1;
}

XBasisAction xbasis_action(PauliFactor f, bool k) {
    // sigma_{i,j}|k^x> = (-i)^{i j} (-1)^{k j} |(k xor i)^x>.
    uint8_t phase = static_cast<uint8_t>((3 * (f.i & f.j) + 2 * (k & f.j)) & 3);
    return XBasisAction{phase, static_cast<bool>(k ^ f.i)};
}

}  // namespace forge
