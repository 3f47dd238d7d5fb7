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

#include "forge/codes.h"

#include <stdexcept>
#include <vector>

#include "forge/concat.h"
#include "forge/graph_state.h"
#include "forge/oracle.h"
#include "forge/stabilizer.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace forge {
namespace {

TEST(ParseCodeSpec, RoundTripsEveryFamily) {
    for (const char *text : {"bitflip:3", "phaseflip:5", "shor:3x3", "shor:2x4", "ring5",
                             "dejmps:alice", "dejmps:bob", "dfs", "wire", "bitflip:3@2",
                             "dejmps:alice@3"}) {
        EXPECT_EQ(to_text(parse_code_spec(text)), text) << text;
    }
}

TEST(ParseCodeSpec, NormalizesDefaults) {
    CodeSpec spec = parse_code_spec("dejmps:alice@1");
    EXPECT_EQ(to_text(spec), "dejmps:alice");
    EXPECT_EQ(parse_code_spec("bitflip:3"), parse_code_spec("bitflip:3@1"));
}

TEST(ParseCodeSpec, RejectsMalformedText) {
    for (const char *text : {"", "bitflip", "bitflip:1", "bitflip:x", "shor:3", "shor:1x3",
                             "dejmps", "dejmps:carol", "ring5:3", "bitflip:3@", "bitflip:3@x",
                             "unknown:3"}) {
        EXPECT_THROW(parse_code_spec(text), std::invalid_argument) << text;
    }
}

TEST(Families, RepetitionOperators) {
    AuxOps bf = bitflip(3);
    ASSERT_EQ(bf.k_set.size(), 3u);
    EXPECT_EQ(bf.k_set[0].str(), "+ZII");
    EXPECT_EQ(bf.k_set[1].str(), "+IZI");
    EXPECT_EQ(bf.k_set[2].str(), "+IIZ");
    ASSERT_EQ(bf.f_set.size(), 1u);
    EXPECT_EQ(bf.f_set[0].str(), "+XXX");
    EXPECT_EQ(bf.side, Side::single_input);

    AuxOps pf = phaseflip(3);
    EXPECT_EQ(pf.k_set[0].str(), "+XII");
    EXPECT_EQ(pf.f_set[0].str(), "+ZZZ");
}

TEST(Families, RepetitionDuality) {
    // The two repetition families are one Hadamard layer apart.
    StabilizerTableau bf = to_stabilizers(bitflip(3));
    std::vector<LocalClifford> layer(4, LocalClifford::h());
    layer[0] = LocalClifford::identity();
    EXPECT_TRUE(group_equal(conjugated(bf, layer), to_stabilizers(phaseflip(3))));
}

TEST(Families, RejectsTooSmallBlocks) {
    EXPECT_THROW(bitflip(1), std::invalid_argument);
    EXPECT_THROW(phaseflip(0), std::invalid_argument);
    EXPECT_THROW(generalized_shor(1, 3), std::invalid_argument);
    EXPECT_THROW(generalized_shor(3, 1), std::invalid_argument);
}

TEST(Families, ShorOperators) {
    AuxOps shor = generalized_shor(2, 2);
    EXPECT_EQ(shor.m_qubits, 4u);
    ASSERT_EQ(shor.k_set.size(), 2u);
    EXPECT_EQ(shor.k_set[0].str(), "+XXII");
    EXPECT_EQ(shor.k_set[1].str(), "+IIXX");
    ASSERT_EQ(shor.f_set.size(), 3u);
    EXPECT_EQ(shor.f_set[0].str(), "+ZIZI");
    EXPECT_EQ(shor.f_set[1].str(), "+ZIIZ");
    EXPECT_EQ(shor.f_set[2].str(), "+IZZI");
    EXPECT_TRUE(shor.is_complete());
}

TEST(Families, ShorEqualsLayeredRepetition) {
    // Blockwise structure: a phase-flip family whose legs each carry a
    // bit-flip block generates the same group.
    for (auto [m1, m2] : std::vector<std::pair<size_t, size_t>>{{2, 2}, {2, 3}, {3, 3}}) {
        StabilizerTableau direct = to_stabilizers(generalized_shor(m1, m2));
        StabilizerTableau layered =
            to_stabilizers(build_next_level({phaseflip(m1), bitflip(m2)}));
        EXPECT_TRUE(group_equal(direct, layered)) << m1 << "x" << m2;
    }
}

TEST(Families, ShorMatchesCodewordOracle) {
    DenseState pipeline = test_util::dense_shor_resource(3, 3);
    DenseState direct = state_of(to_stabilizers(generalized_shor(3, 3)));
    EXPECT_GT(fidelity_up_to_phase(direct, pipeline), 1.0 - 1e-10);
}

TEST(Families, RingMatchesWheelCircuit) {
    AuxOps ring = cluster_ring();
    EXPECT_EQ(ring.m_qubits, 5u);
    EXPECT_EQ(ring.total(), 6u);
    EXPECT_EQ(ring.side, Side::single_input);
    DenseState direct = state_of(to_stabilizers(ring));
    EXPECT_GT(fidelity_up_to_phase(direct, test_util::dense_ring_resource()), 1.0 - 1e-10);
}

TEST(Families, PurificationOperators) {
    AuxOps alice = dejmps(Station::alice);
    ASSERT_EQ(alice.k_set.size(), 2u);
    EXPECT_EQ(alice.k_set[0].str(), "-YI");
    EXPECT_EQ(alice.k_set[1].str(), "-IY");
    ASSERT_EQ(alice.f_set.size(), 1u);
    EXPECT_EQ(alice.f_set[0].str(), "-ZZ");
    EXPECT_EQ(alice.side, Side::single_output);

    AuxOps bob = dejmps(Station::bob);
    EXPECT_EQ(bob.k_set[0].str(), "+YI");
    EXPECT_EQ(bob.k_set[1].str(), "+IY");
    EXPECT_EQ(bob.f_set[0].str(), "-ZZ");
}

TEST(Families, PurificationMatchesAmplitudeTable) {
    DenseState alice = state_of(to_stabilizers(dejmps(Station::alice)));
    EXPECT_GT(fidelity_up_to_phase(alice, test_util::dense_dejmps_resource(Station::alice)),
              1.0 - 1e-10);
    DenseState bob = state_of(to_stabilizers(dejmps(Station::bob)));
    EXPECT_GT(fidelity_up_to_phase(bob, test_util::dense_dejmps_resource(Station::bob)),
              1.0 - 1e-10);
}

TEST(Families, TwoStationsDifferByOneFlip) {
    // The partner station's state is the same resource with the kept qubit
    // flipped, so the two branch labels trade places.
    DenseState alice = state_of(to_stabilizers(dejmps(Station::alice)));
    apply_pauli(PauliString::single(3, 0, 'X'), alice);
    DenseState bob = state_of(to_stabilizers(dejmps(Station::bob)));
    EXPECT_GT(fidelity_up_to_phase(alice, bob), 1.0 - 1e-10);
}

TEST(Families, DfsOperators) {
    AuxOps d = dfs();
    ASSERT_EQ(d.k_set.size(), 2u);
    ASSERT_EQ(d.f_set.size(), 1u);
    EXPECT_EQ(d.side, Side::single_input);
    DenseState direct = state_of(to_stabilizers(d));
    EXPECT_GT(fidelity_up_to_phase(direct, test_util::dense_dfs_resource()), 1.0 - 1e-10);
}

TEST(Families, WireCouplesToBellPair) {
    StabilizerTableau t = couple(wire().with_side(Side::single_output), wire());
    DenseState s = state_of(t);
    DenseState phi = jamiolkowski(DenseState::basis(1, 0), DenseState::basis(1, 1));
    EXPECT_GT(fidelity_up_to_phase(s, phi), 1.0 - 1e-10);
}

TEST(ConcatLevels, DepthZeroIsAWire) {
    AuxOps none = concat_levels(bitflip(3), 0);
    EXPECT_EQ(none.m_qubits, 1u);
    EXPECT_EQ(none.k_set.front().str(), "+Z");
    EXPECT_EQ(none.f_set.front().str(), "+X");
    EXPECT_EQ(none.side, bitflip(3).side);
    AuxOps purify_none = concat_levels(dejmps(Station::alice), 0);
    EXPECT_EQ(purify_none.side, Side::single_output);
}

TEST(ConcatLevels, DepthGrowsGeometrically) {
    AuxOps two = concat_levels(bitflip(3), 2);
    EXPECT_EQ(two.m_qubits, 9u);
    EXPECT_EQ(two.total(), 10u);
    EXPECT_TRUE(group_equal(to_stabilizers(two),
                            to_stabilizers(build_next_level({bitflip(3), bitflip(3)}))));
}

TEST(MakeAux, DispatchesOnKindAndDepth) {
    EXPECT_TRUE(group_equal(to_stabilizers(make_aux(parse_code_spec("shor:2x2"))),
                            to_stabilizers(generalized_shor(2, 2))));
    EXPECT_TRUE(group_equal(to_stabilizers(make_aux(parse_code_spec("bitflip:2@2"))),
                            to_stabilizers(concat_levels(bitflip(2), 2))));
    EXPECT_EQ(make_aux(parse_code_spec("dejmps:bob")).k_set[0].str(), "+YI");
}

}  // namespace
}  // namespace forge
