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

#include "forge/stabilizer.h"

#include <stdexcept>
#include <vector>

#include "forge/oracle.h"
#include "forge/pauli.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace forge {
namespace {

StabilizerTableau make_tableau(size_t n, const std::vector<const char *> &rows) {
    StabilizerTableau t;
    t.n_qubits = n;
    for (const char *row : rows) {
        t.generators.push_back(PauliString::from_text(row));
    }
    t.roles.assign(n, QubitRole::output);
    return t;
}

TEST(Validate, AcceptsBellPair) {
    EXPECT_NO_THROW(validate(make_tableau(2, {"+XX", "+ZZ"})));
}

TEST(Validate, RejectsNonHermitianSign) {
    EXPECT_THROW(validate(make_tableau(2, {"+iXX", "+ZZ"})), std::invalid_argument);
}

TEST(Validate, RejectsAnticommutingPair) {
    EXPECT_THROW(validate(make_tableau(2, {"+XX", "+ZI"})), std::invalid_argument);
}

TEST(Validate, RejectsDependentSet) {
    // XX * ZZ = -YY, so the third row is a product of the first two.
    EXPECT_THROW(validate(make_tableau(2, {"+XX", "+ZZ", "-YY"})), std::invalid_argument);
}

TEST(Validate, RejectsWidthMismatch) {
    StabilizerTableau t = make_tableau(2, {"+XX", "+Z"});
    EXPECT_THROW(validate(t), std::invalid_argument);
    t = make_tableau(2, {"+XX", "+ZZ"});
    t.roles.pop_back();
    EXPECT_THROW(validate(t), std::invalid_argument);
}

TEST(IsIndependent, DetectsProducts) {
    std::vector<PauliString> good{PauliString::from_text("+XX"), PauliString::from_text("+ZZ")};
    EXPECT_TRUE(is_independent(good));
    std::vector<PauliString> bad = good;
    bad.push_back(PauliString::from_text("-YY"));
    EXPECT_FALSE(is_independent(bad));
}

TEST(Canonicalize, IsIdempotent) {
    StabilizerTableau t = make_tableau(2, {"+XX", "+ZZ"});
    StabilizerTableau once = canonicalize(t);
    StabilizerTableau twice = canonicalize(once);
    ASSERT_EQ(once.generators.size(), twice.generators.size());
    for (size_t g = 0; g < once.generators.size(); g++) {
        EXPECT_EQ(once.generators[g], twice.generators[g]);
    }
}

TEST(Canonicalize, SameGroupSameRepresentative) {
    StabilizerTableau a = make_tableau(2, {"+XX", "+ZZ"});
    StabilizerTableau b = make_tableau(2, {"-YY", "+ZZ"});
    StabilizerTableau ca = canonicalize(a);
    StabilizerTableau cb = canonicalize(b);
    ASSERT_EQ(ca.generators.size(), cb.generators.size());
    for (size_t g = 0; g < ca.generators.size(); g++) {
        EXPECT_EQ(ca.generators[g], cb.generators[g]) << g;
    }
}

TEST(GroupEqual, SeesThroughGeneratorChoice) {
    EXPECT_TRUE(group_equal(make_tableau(2, {"+XX", "+ZZ"}), make_tableau(2, {"-YY", "+ZZ"})));
    EXPECT_TRUE(group_equal(make_tableau(2, {"+XX", "+ZZ"}), make_tableau(2, {"+ZZ", "+XX"})));
}

TEST(GroupEqual, SignsMatter) {
    EXPECT_FALSE(group_equal(make_tableau(2, {"+XX", "+ZZ"}), make_tableau(2, {"+XX", "-ZZ"})));
}

TEST(FromGraph, PathGraphRows) {
    std::vector<BitVec> adj(3, BitVec(3));
    adj[0].set(1, true);
    adj[1].set(0, true);
    adj[1].set(2, true);
    adj[2].set(1, true);
    StabilizerTableau t = from_graph(adj);
    ASSERT_EQ(t.generators.size(), 3u);
    EXPECT_EQ(t.generators[0].str(), "+XZI");
    EXPECT_EQ(t.generators[1].str(), "+ZXZ");
    EXPECT_EQ(t.generators[2].str(), "+IZX");
    EXPECT_NO_THROW(validate(t));
}

TEST(FromGraph, StateMatchesCzCircuit) {
    // Triangle graph, built independently as CZ gates on |+++>.
    std::vector<BitVec> adj(3, BitVec(3));
    for (size_t a = 0; a < 3; a++) {
        for (size_t b = 0; b < 3; b++) {
            if (a != b) {
                adj[a].set(b, true);
            }
        }
    }
    const Amplitude h[2][2] = {{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)},
                               {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}};
    DenseState circuit = DenseState::basis(3, 0);
    for (size_t q = 0; q < 3; q++) {
        apply_1q(h, q, circuit);
    }
    apply_cz(0, 1, circuit);
    apply_cz(1, 2, circuit);
    apply_cz(0, 2, circuit);
    EXPECT_GT(fidelity_up_to_phase(state_of(from_graph(adj)), circuit), 1.0 - 1e-12);
}

TEST(Roles, Lookup) {
    StabilizerTableau t = make_tableau(2, {"+XX", "+ZZ"});
    t.roles = {QubitRole::input, QubitRole::output};
    EXPECT_EQ(t.qubits_with_role(QubitRole::input), std::vector<size_t>{0});
    EXPECT_EQ(t.qubits_with_role(QubitRole::output), std::vector<size_t>{1});
    EXPECT_TRUE(t.qubits_with_role(QubitRole::virtual_link).empty());
}

}  // namespace
}  // namespace forge
