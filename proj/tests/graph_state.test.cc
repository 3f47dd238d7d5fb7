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

#include "forge/graph_state.h"

#include <algorithm>
#include <set>
#include <vector>

#include "forge/codes.h"
#include "forge/concat.h"
#include "forge/stabilizer.h"
#include "forge/tasks.h"
#include "gtest/gtest.h"

namespace forge {
namespace {

std::vector<LocalClifford> all_local_cliffords() {
    std::vector<LocalClifford> found{LocalClifford::identity()};
    std::vector<LocalClifford> gens{LocalClifford::h(), LocalClifford::s()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t k = 0; k < found.size(); k++) {
            for (const LocalClifford &g : gens) {
                LocalClifford next = compose(g, found[k]);
                if (std::find(found.begin(), found.end(), next) == found.end()) {
                    found.push_back(next);
                    grew = true;
                }
            }
        }
    }
    return found;
}

TEST(LocalClifford, GeneratesTheFullSingleQubitGroup) {
    EXPECT_EQ(all_local_cliffords().size(), 24u);
}

TEST(LocalClifford, InverseRoundTrips) {
    for (const LocalClifford &c : all_local_cliffords()) {
        EXPECT_TRUE(compose(c, inverse(c)).is_identity()) << c.str();
        EXPECT_TRUE(compose(inverse(c), c).is_identity()) << c.str();
    }
}

TEST(LocalClifford, FrozenConjugations) {
    EXPECT_EQ(conjugated(PauliString::from_text("+X"), 0, LocalClifford::h()).str(), "+Z");
    EXPECT_EQ(conjugated(PauliString::from_text("+Z"), 0, LocalClifford::h()).str(), "+X");
    EXPECT_EQ(conjugated(PauliString::from_text("+X"), 0, LocalClifford::s()).str(), "+Y");
    EXPECT_EQ(conjugated(PauliString::from_text("+Z"), 0, LocalClifford::s()).str(), "+Z");
    EXPECT_EQ(conjugated(PauliString::from_text("+X"), 0, LocalClifford::z()).str(), "-X");
}

TEST(LocalClifford, ConjugationRespectsComposition) {
    for (const LocalClifford &a : all_local_cliffords()) {
        for (const PauliString &p : {PauliString::from_text("+X"), PauliString::from_text("+Z")}) {
            PauliString via_images = conjugated(p, 0, a);
            EXPECT_TRUE(via_images.is_hermitian());
        }
        LocalClifford hs = compose(LocalClifford::h(), a);
        PauliString lhs = conjugated(PauliString::from_text("+X"), 0, hs);
        PauliString rhs = conjugated(conjugated(PauliString::from_text("+X"), 0, a), 0,
                                     LocalClifford::h());
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(ToGraph, BellPairIsAnEdge) {
    StabilizerTableau t;
    t.n_qubits = 2;
    t.generators = {PauliString::from_text("+XX"), PauliString::from_text("+ZZ")};
    t.roles.assign(2, QubitRole::output);
    GraphState g = to_graph(t);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_EQ(edges(g).size(), 1u);
}

TEST(ToGraph, ExtractionCertificateHolds) {
    // conjugating the plain graph tableau by the extracted local Cliffords
    // must reproduce the original group exactly, signs included.
    std::vector<StabilizerTableau> cases;
    cases.push_back(to_stabilizers(bitflip(3)));
    cases.push_back(to_stabilizers(dejmps(Station::bob)));
    cases.push_back(to_stabilizers(build_next_level({dejmps(Station::alice), dejmps(Station::alice)})));
    cases.push_back(switcher(parse_code_spec("phaseflip:3"), parse_code_spec("ring5")));
    for (const StabilizerTableau &t : cases) {
        GraphState g = to_graph(t);
        StabilizerTableau rebuilt = conjugated(from_graph(g.adjacency, g.roles), g.local_cliffords);
        EXPECT_TRUE(group_equal(rebuilt, t));
        EXPECT_EQ(g.roles, t.roles);
    }
}

TEST(ToGraph, RepetitionEncoderIsAStar) {
    GraphState g = to_graph(to_stabilizers(bitflip(3)));
    std::multiset<size_t> degrees;
    for (size_t v = 0; v < g.num_vertices(); v++) {
        degrees.insert(g.degree(v));
    }
    EXPECT_EQ(degrees, (std::multiset<size_t>{1, 1, 1, 3}));
    EXPECT_EQ(edges(g).size(), 3u);
}

TEST(DejmpsGraph, HubAndPairs) {
    GraphState g1 = dejmps_graph(1);
    EXPECT_EQ(g1.num_vertices(), 3u);
    EXPECT_EQ(g1.degree(0), 2u);
    GraphState g2 = dejmps_graph(2);
    EXPECT_EQ(g2.num_vertices(), 5u);
    EXPECT_EQ(g2.degree(0), 4u);
}

TEST(DejmpsGraph, MatchesRecurrenceTableau) {
    for (size_t n = 1; n <= 2; n++) {
        StabilizerTableau t = to_stabilizers(dejmps_tower(n));
        GraphState extracted = to_graph(t);
        GraphState direct = dejmps_graph(n);
        ASSERT_EQ(extracted.num_vertices(), direct.num_vertices());
        EXPECT_EQ(extracted.adjacency, direct.adjacency);
        StabilizerTableau via_direct =
            conjugated(from_graph(direct.adjacency, direct.roles), extracted.local_cliffords);
        EXPECT_TRUE(group_equal(via_direct, t));
    }
}

TEST(Bipartite, StarYesTriangleNo) {
    GraphState star = to_graph(to_stabilizers(bitflip(3)));
    EXPECT_TRUE(is_bipartite(star));
    GraphState triangle;
    triangle.adjacency.assign(3, BitVec(3));
    for (size_t a = 0; a < 3; a++) {
        for (size_t b = 0; b < 3; b++) {
            if (a != b) {
                triangle.adjacency[a].set(b, true);
            }
        }
    }
    triangle.local_cliffords.assign(3, LocalClifford::identity());
    triangle.roles.assign(3, QubitRole::output);
    EXPECT_FALSE(is_bipartite(triangle));
}

TEST(GraphExport, JsonRoundTrip) {
    GraphState g = to_graph(to_stabilizers(dejmps(Station::alice)));
    GraphState back = graph_from_json(export_graph(g, GraphFormat::json));
    EXPECT_EQ(back.adjacency, g.adjacency);
    EXPECT_EQ(back.roles, g.roles);
    EXPECT_EQ(back.local_cliffords, g.local_cliffords);
}

TEST(GraphExport, DotAndGraphmlContainStructure) {
    GraphState g = to_graph(to_stabilizers(bitflip(3)));
    std::string dot = export_graph(g, GraphFormat::dot);
    EXPECT_NE(dot.find("graph"), std::string::npos);
    EXPECT_NE(dot.find("--"), std::string::npos);
    std::string graphml = export_graph(g, GraphFormat::graphml);
    EXPECT_NE(graphml.find("<graphml"), std::string::npos);
    EXPECT_NE(graphml.find("<edge"), std::string::npos);
}

}  // namespace
}  // namespace forge
