// Copyright 2026 The forge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "forge/pauli.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/oracle.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace forge {
namespace {

TEST(PauliString, TextRoundTrip) {
    for (const char *text : {"+X", "-Z", "+iXZ", "-iYY", "+XYZ", "-ZZ", "+IIII", "-iI"}) {
        EXPECT_EQ(PauliString::from_text(text).str(), text) << text;
    }
    // Bare and 'i'-prefixed spellings normalize to the signed form.
    EXPECT_EQ(PauliString::from_text("XZ").str(), "+XZ");
    EXPECT_EQ(PauliString::from_text("iXZ").str(), "+iXZ");
}

TEST(PauliString, TextRejectsGarbage) {
    EXPECT_THROW(PauliString::from_text(""), std::invalid_argument);
    EXPECT_THROW(PauliString::from_text("+"), std::invalid_argument);
    EXPECT_THROW(PauliString::from_text("XQ"), std::invalid_argument);
    EXPECT_THROW(PauliString::from_text("++X"), std::invalid_argument);
}

TEST(PauliString, Constructors) {
    EXPECT_EQ(PauliString::identity(3).str(), "+III");
    EXPECT_EQ(PauliString::single(3, 1, 'Y').str(), "+IYI");
    EXPECT_EQ(PauliString::single(2, 0, 'X').str(), "+XI");
    EXPECT_TRUE(PauliString::single(4, 2, 'Y').is_hermitian());
}

TEST(PauliString, LetterAccess) {
    PauliString p = PauliString::from_text("-XYZ");
    EXPECT_EQ(p.letter(0), 'X');
    EXPECT_EQ(p.letter(1), 'Y');
    EXPECT_EQ(p.letter(2), 'Z');
    p.set_letter(1, 'I');
    EXPECT_EQ(p.str(), "-XIZ");
    p.set_letter(2, 'Y');
    EXPECT_EQ(p.str(), "-XIY");
}

TEST(PauliString, FrozenProduct) {
    // The purification family's own algebra: (-Y x I) * (-Z x Z) = i (X x Z).
    PauliString product = multiply(PauliString::from_text("-YI"), PauliString::from_text("-ZZ"));
    EXPECT_EQ(product.str(), "+iXZ");
    EXPECT_FALSE(product.is_hermitian());
}

TEST(PauliString, HermiticityFollowsSigmaPhase) {
    EXPECT_TRUE(PauliString::from_text("+XYZ").is_hermitian());
    EXPECT_TRUE(PauliString::from_text("-ZZ").is_hermitian());
    EXPECT_FALSE(PauliString::from_text("+iXX").is_hermitian());
    EXPECT_FALSE(PauliString::from_text("-iYX").is_hermitian());
}

TEST(PauliString, TensorTracksPhases) {
    PauliString t = tensor(PauliString::from_text("-Y"), PauliString::from_text("+iX"));
    EXPECT_EQ(t.str(), "-iYX");
    EXPECT_EQ(tensor(PauliString::from_text("+XZ"), PauliString::from_text("-I")).str(), "-XZI");
}

TEST(PauliString, RestrictionKeepsStoredPhase) {
    PauliString p = PauliString::from_text("-XYZ");
    EXPECT_EQ(p.restricted_to({0, 2}).str(), "-iXZ");
    EXPECT_EQ(p.restricted_to({1}).str(), "-Y");
}

// Applies each operator to every basis state and compares amplitudes, which
// pins the global phase rather than just the equivalence class.
bool same_operator_dense(const PauliString &a, const std::vector<PauliString> &then_b) {
    size_t n = a.num_qubits();
    for (size_t idx = 0; idx < (size_t{1} << n); idx++) {
        DenseState lhs = DenseState::basis(n, idx);
        apply_pauli(a, lhs);
        DenseState rhs = DenseState::basis(n, idx);
        for (const PauliString &b : then_b) {
            apply_pauli(b, rhs);
        }
        if (test_util::amps_max_abs_diff(lhs, rhs) > 1e-12) {
            return false;
        }
    }
    return true;
}

TEST(PauliString, MultiplyMatchesDenseExhaustively) {
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    for (char a0 : letters) {
        for (char a1 : letters) {
            for (char b0 : letters) {
                for (char b1 : letters) {
                    PauliString a = PauliString::identity(2);
                    a.set_letter(0, a0);
                    a.set_letter(1, a1);
                    PauliString b = PauliString::identity(2);
                    b.set_letter(0, b0);
                    b.set_letter(1, b1);
                    // multiply(a, b) must act as "apply b, then a".
                    EXPECT_TRUE(same_operator_dense(multiply(a, b), {b, a}))
                        << a.str() << " * " << b.str();
                }
            }
        }
    }
}

TEST(PauliString, MultiplyPhaseWrapsWithSignedInputs) {
    std::mt19937 rng(0x5eed);
    for (int trial = 0; trial < 64; trial++) {
        BitVec x(3), z(3);
        for (size_t q = 0; q < 3; q++) {
            x.set(q, rng() & 1);
            z.set(q, rng() & 1);
        }
        PauliString a(x, z, static_cast<uint8_t>(rng() & 3));
        for (size_t q = 0; q < 3; q++) {
            x.set(q, rng() & 1);
            z.set(q, rng() & 1);
        }
        PauliString b(x, z, static_cast<uint8_t>(rng() & 3));
        EXPECT_TRUE(same_operator_dense(multiply(a, b), {b, a})) << a.str() << " * " << b.str();
    }
}

TEST(PauliString, CommutesMatchesDense) {
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    for (char a0 : letters) {
        for (char a1 : letters) {
            for (char b0 : letters) {
                for (char b1 : letters) {
                    PauliString a = PauliString::identity(2);
                    a.set_letter(0, a0);
                    a.set_letter(1, a1);
                    PauliString b = PauliString::identity(2);
                    b.set_letter(0, b0);
                    b.set_letter(1, b1);
                    PauliString ab = multiply(a, b);
                    PauliString ba = multiply(b, a);
                    bool equal = ab == ba;
                    EXPECT_EQ(commutes(a, b), equal) << a.str() << " vs " << b.str();
                }
            }
        }
    }
}

TEST(FactorDecomposition, FrozenExample) {
    FactorDecomposition d = factor_decompose(PauliString::from_text("-YI"));
    EXPECT_EQ(d.phase_exp, 2);
    ASSERT_EQ(d.factors.size(), 2u);
    EXPECT_TRUE(d.factors[0].i);
    EXPECT_TRUE(d.factors[0].j);
    EXPECT_FALSE(d.factors[1].i);
    EXPECT_FALSE(d.factors[1].j);
}

TEST(FactorDecomposition, RoundTripsRandomStrings) {
    std::mt19937 rng(0xfeed);
    for (int trial = 0; trial < 40; trial++) {
        BitVec x(4), z(4);
        for (size_t q = 0; q < 4; q++) {
            x.set(q, rng() & 1);
            z.set(q, rng() & 1);
        }
        PauliString p(x, z, static_cast<uint8_t>(rng() & 3));
        EXPECT_EQ(recompose(factor_decompose(p)), p) << p.str();
    }
}

TEST(BellTransfer, SignMatchesDenseExhaustively) {
    // (sigma x id)|phi+> = sign * (id x sigma)|phi+> for every factor.
    DenseState phi_plus = jamiolkowski(DenseState::basis(1, 0), DenseState::basis(1, 1));
    for (bool i : {false, true}) {
        for (bool j : {false, true}) {
            PauliFactor f{i, j};
            PauliString sigma = recompose(FactorDecomposition{0, {f}});
            DenseState lhs = phi_plus;
            apply_pauli(tensor(sigma, PauliString::identity(1)), lhs);
            DenseState rhs = phi_plus;
            apply_pauli(tensor(PauliString::identity(1), sigma), rhs);
            int sign = bell_transfer_sign(f);
            for (auto &amp : rhs.amps) {
                amp *= static_cast<double>(sign);
            }
            EXPECT_LT(test_util::amps_max_abs_diff(lhs, rhs), 1e-12)
                << "factor (" << i << "," << j << ")";
        }
    }
}

TEST(XBasisAction, MatchesDenseExhaustively) {
    const Amplitude h[2][2] = {{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)},
                               {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}};
    Amplitude unit_i{0.0, 1.0};
    for (bool i : {false, true}) {
        for (bool j : {false, true}) {
            for (bool k : {false, true}) {
                XBasisAction act = xbasis_action(PauliFactor{i, j}, k);
                DenseState lhs = DenseState::basis(1, k ? 1 : 0);
                apply_1q(h, 0, lhs);
                apply_pauli(recompose(FactorDecomposition{0, {PauliFactor{i, j}}}), lhs);
                DenseState rhs = DenseState::basis(1, act.k_out ? 1 : 0);
                apply_1q(h, 0, rhs);
                Amplitude scale = std::pow(unit_i, static_cast<double>(act.phase_exp));
                for (auto &amp : rhs.amps) {
                    amp *= scale;
                }
                EXPECT_LT(test_util::amps_max_abs_diff(lhs, rhs), 1e-12)
                    << "sigma(" << i << "," << j << ") on k=" << k;
            }
        }
    }
}

}  // namespace
}  // namespace forge
