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

#ifndef FORGE_PAULI_H
#define FORGE_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forge/bitvec.h"

namespace forge {

/// A phase-exact Pauli operator on n qubits.
///
/// The stored operator is
///
///     i^phase_exp * prod_q X_q^{x(q)} Z_q^{z(q)}
///
/// with a fixed X-then-Z factor order on every qubit. Under this convention
/// Y = i * X * Z, so the letter Y on qubit q means x(q) = z(q) = 1 plus a +1
/// contribution to the global phase exponent. Qubit 0 is the leftmost tensor
/// factor everywhere (printing, dense indices, JSON).
///
/// The operator is Hermitian exactly when phase_exp + |{q : x(q) = z(q) = 1}|
/// is even. Printing uses the sigma basis (each Y letter carries its own i),
/// so the printed prefix exponent is phase_exp minus the Y count, mod 4.
class PauliString {
   public:
    PauliString() = default;

    /// The identity on num_qubits qubits.
    static PauliString identity(size_t num_qubits);

    /// A single X/Y/Z letter at qubit q, identity elsewhere. Y is Hermitian
    /// (phase folded in as described above).
    static PauliString single(size_t num_qubits, size_t q, char letter);

    /// Parses the text form: optional prefix in {+, -, +i, -i, i} followed by
    /// one letter per qubit from {I, X, Y, Z}. Throws std::invalid_argument
    /// on malformed input. Round-trips bit-exactly with str().
    static PauliString from_text(std::string_view text);

    PauliString(BitVec x, BitVec z, uint8_t phase_exp);

    size_t num_qubits() const {
        return x_.size();
    }
    bool x_bit(size_t q) const {
        return x_.get(q);
    }
    bool z_bit(size_t q) const {
        return z_.get(q);
    }
    const BitVec &x_bits() const {
        return x_;
    }
    const BitVec &z_bits() const {
        return z_;
    }

    /// Exponent of i in the stored X-then-Z form.
    uint8_t phase_exp() const {
        return phase_exp_;
    }

    /// Exponent of i in the sigma basis (what the printed prefix shows).
    uint8_t sigma_phase_exp() const;

    bool is_hermitian() const;

    /// Hermitian with a real +/-1 prefix; what tableau generators must be.
    bool has_real_sign() const {
        return is_hermitian();
    }

    /// True when the printed prefix is "-" or "-i".
    bool is_negative() const {
        return sigma_phase_exp() >= 2;
    }

    bool is_identity() const {
        return !x_.any() && !z_.any();
    }

    /// Multiplies the global phase by i^k.
    PauliString &mul_phase(uint8_t k) {
        phase_exp_ = (phase_exp_ + k) & 3;
        return *this;
    }

    void set_letter(size_t q, char letter);

    /// The letter at qubit q, one of 'I', 'X', 'Y', 'Z'.
    char letter(size_t q) const;

    /// Keeps only the qubits listed in `keep`, in the given order. The global
    /// phase exponent is carried over unchanged.
    PauliString restricted_to(const std::vector<size_t> &keep) const;

    std::string str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    BitVec x_;
    BitVec z_;
    uint8_t phase_exp_ = 0;
};

/// Phase-exact product a * b. Throws std::invalid_argument on length mismatch.
PauliString multiply(const PauliString &a, const PauliString &b);

/// Whether a and b commute (symplectic inner product is zero).
bool commutes(const PauliString &a, const PauliString &b);

/// Tensor product, a's qubits first.
PauliString tensor(const PauliString &a, const PauliString &b);

/// One qubit of a decomposition: sigma_{i,j} where i is the Z component and
/// j is the X component, so sigma_{0,0} = I, sigma_{0,1} = X, sigma_{1,0} = Z,
/// sigma_{1,1} = Y.
struct PauliFactor {
    bool i = false;
    bool j = false;

    bool operator==(const PauliFactor &other) const = default;
};

/// P written as i^{phase_exp} * tensor of bare sigma factors. Every factor is
/// an honest Pauli matrix (Y carries no hidden phase; it moved into
/// phase_exp).
struct FactorDecomposition {
    uint8_t phase_exp = 0;
    std::vector<PauliFactor> factors;
};

FactorDecomposition factor_decompose(const PauliString &p);

/// Inverse of factor_decompose. Exact round trip.
PauliString recompose(const FactorDecomposition &d);

/// Sign picked up when a sigma factor hops across a Bell pair:
/// (sigma_{i,j} x id)|phi+> = sign * (id x sigma_{i,j})|phi+>. Returns +1 or
/// -1, equal to (-1)^{i*j}.
int bell_transfer_sign(PauliFactor f);

/// Action of sigma_{i,j} on the X-basis state |k^x> (k = 0 for |+>, 1 for
/// |->): sigma_{i,j}|k^x> = i^{phase_exp} |k_out^x>.
struct XBasisAction {
    uint8_t phase_exp = 0;
    bool k_out = false;
};

XBasisAction xbasis_action(PauliFactor f, bool k);

}  // namespace forge

#endif
