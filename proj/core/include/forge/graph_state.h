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

#ifndef FORGE_GRAPH_STATE_H
#define FORGE_GRAPH_STATE_H

#include <string>
#include <utility>
#include <vector>

#include "forge/stabilizer.h"

namespace forge {

/// A single-qubit Clifford, stored by its conjugation action on X and Z:
///
///   C X C^dag = (-1)^{x_neg} sigma_{x_img}
///   C Z C^dag = (-1)^{z_neg} sigma_{z_img}
///
/// The images must be distinct non-identity letters; the action on Y follows
/// from Y = i X Z. This fixes C up to an irrelevant global phase, so there
/// are exactly 24 distinct values.
struct LocalClifford {
    PauliFactor x_img{false, true};
    bool x_neg = false;
    PauliFactor z_img{true, false};
    bool z_neg = false;

    static LocalClifford identity();
    static LocalClifford h();
    static LocalClifford s();      // diag(1, i): X -> Y
    static LocalClifford s_dag();  // X -> -Y
    static LocalClifford x();
    static LocalClifford y();
    static LocalClifford z();

    bool is_identity() const;

    /// The image of X (or Z) as a signed one-qubit Pauli.
    PauliString x_image() const;
    PauliString z_image() const;

    /// Shortest product of H and S equal to this Clifford, e.g. "H S", or "I".
    /// Leftmost gate applies last, as in an operator product.
    std::string str() const;

    bool operator==(const LocalClifford &other) const = default;
};

/// Composition outer after inner: conjugating by the result equals
/// conjugating by inner first, then by outer.
LocalClifford compose(const LocalClifford &outer, const LocalClifford &inner);

LocalClifford inverse(const LocalClifford &c);

/// C p C^dag where C acts as `c` on qubit q and as the identity elsewhere.
PauliString conjugated(const PauliString &p, size_t q, const LocalClifford &c);

/// Conjugates every generator by the per-qubit Cliffords.
StabilizerTableau conjugated(const StabilizerTableau &t, const std::vector<LocalClifford> &locals);

/// A stabilizer state in graph form: an adjacency matrix plus the per-qubit
/// Cliffords that map the plain graph state back to the described state.
///
/// Invariant: conjugated(from_graph(adjacency, roles), local_cliffords)
/// generates the same group as the state this value describes.
struct GraphState {
    std::vector<BitVec> adjacency;
    std::vector<LocalClifford> local_cliffords;
    std::vector<QubitRole> roles;

    size_t num_vertices() const {
        return adjacency.size();
    }
    bool has_edge(size_t a, size_t b) const {
        return adjacency[a].get(b);
    }
    size_t degree(size_t v) const {
        return adjacency[v].popcount();
    }
};

/// Edge list (a, b) with a < b, ordered lexicographically.
std::vector<std::pair<size_t, size_t>> edges(const GraphState &g);

/// True when the vertices admit a two-coloring with no monochromatic edge.
bool is_bipartite(const GraphState &g);

/// Converts a full-rank tableau to graph form by local Cliffords and row
/// multiplications: Hadamard-type swaps make the X block invertible, row
/// reduction makes it the identity, phase-type locals clear the Z diagonal,
/// and Z locals clear the signs. Ties broken by lowest qubit index. The
/// result is self-checked against the input group; failure throws.
GraphState to_graph(const StabilizerTableau &t);

/// The purification resource graph for n rounds on 2^n + 1 vertices: vertex 0
/// is the output hub connected to every input; removing it leaves two
/// disjoint isomorphic halves, each recursively a complete join of two copies
/// of the two-rounds-smaller input graph. Throws for n = 0.
GraphState dejmps_graph(size_t n_rounds);

enum class GraphFormat {
    dot,
    graphml,
    json,
};

/// Deterministic text form; vertices ordered by index. DOT colors inputs red
/// and outputs blue. The JSON form round-trips through graph_from_json.
std::string export_graph(const GraphState &g, GraphFormat format);

GraphState graph_from_json(const std::string &text);

}  // namespace forge

#endif
