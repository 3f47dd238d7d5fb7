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

#include "forge/graph_state.h"

#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace forge {

namespace {

PauliString signed_sigma(PauliFactor f, bool neg) {
    BitVec x(1);
    BitVec z(1);
    x.set(0, f.j);
    z.set(0, f.i);
    uint8_t e = ((f.i && f.j) ? 1 : 0) + (neg ? 2 : 0);
    return PauliString(x, z, e & 3);
}

void check_valid(const LocalClifford &c) {
    PauliFactor id{false, false};
    if (c.x_img == id || c.z_img == id || c.x_img == c.z_img) {
        throw std::invalid_argument("Local Clifford images must be distinct non-identity letters.");
    }
}

size_t encode(const LocalClifford &c) {
    return (c.x_img.i ? 1 : 0) | (c.x_img.j ? 2 : 0) | (c.x_neg ? 4 : 0) | (c.z_img.i ? 8 : 0) |
           (c.z_img.j ? 16 : 0) | (c.z_neg ? 32 : 0);
}

std::vector<LocalClifford> all_local_cliffords() {
    std::vector<LocalClifford> out;
    PauliFactor letters[3] = {{false, true}, {true, false}, {true, true}};
    for (PauliFactor xi : letters) {
        for (PauliFactor zi : letters) {
            if (xi == zi) {
                continue;
            }
            for (int xs = 0; xs < 2; xs++) {
                for (int zs = 0; zs < 2; zs++) {
                    out.push_back(LocalClifford{xi, xs != 0, zi, zs != 0});
                }
            }
        }
    }
    return out;
}

std::string role_name(QubitRole r) {
    switch (r) {
        case QubitRole::input:
            return "input";
        case QubitRole::output:
            return "output";
        default:
            return "virtual";
    }
}

QubitRole role_from_name(const std::string &s) {
    if (s == "input") {
        return QubitRole::input;
    }
    if (s == "output") {
        return QubitRole::output;
    }
    if (s == "virtual") {
        return QubitRole::virtual_link;
    }
    throw std::invalid_argument("Unknown qubit role '" + s + "'.");
}

}  // namespace

LocalClifford LocalClifford::identity() {
    return LocalClifford{};
}

LocalClifford LocalClifford::h() {
    return LocalClifford{{true, false}, false, {false, true}, false};
}

LocalClifford LocalClifford::s() {
    return LocalClifford{{true, true}, false, {true, false}, false};
}

LocalClifford LocalClifford::s_dag() {
    return LocalClifford{{true, true}, true, {true, false}, false};
}

LocalClifford LocalClifford::x() {
    return LocalClifford{{false, true}, false, {true, false}, true};
}

LocalClifford LocalClifford::y() {
    return LocalClifford{{false, true}, true, {true, false}, true};
}

LocalClifford LocalClifford::z() {
    return LocalClifford{{false, true}, true, {true, false}, false};
}

bool LocalClifford::is_identity() const {
    return *this == LocalClifford{};
}

PauliString LocalClifford::x_image() const {
    return signed_sigma(x_img, x_neg);
}

PauliString LocalClifford::z_image() const {
    return signed_sigma(z_img, z_neg);
}

PauliString conjugated(const PauliString &p, size_t q, const LocalClifford &c) {
    check_valid(c);
    bool a = p.x_bit(q);
    bool b = p.z_bit(q);
    if (!a && !b) {
        return p;
    }
    // Replace the bare X^a Z^b factor at q by (C X C^dag)^a (C Z C^dag)^b.
    PauliString unit = PauliString::identity(1);
    if (a) {
        unit = c.x_image();
    }
    if (b) {
        unit = a ? multiply(unit, c.z_image()) : c.z_image();
    }
    BitVec x = p.x_bits();
    BitVec z = p.z_bits();
    x.set(q, unit.x_bit(0));
    z.set(q, unit.z_bit(0));
    return PauliString(x, z, (p.phase_exp() + unit.phase_exp()) & 3);
}

LocalClifford compose(const LocalClifford &outer, const LocalClifford &inner) {
    auto push = [&](const PauliString &img, PauliFactor &f, bool &neg) {
        PauliString out = conjugated(img, 0, outer);
        f = PauliFactor{out.z_bit(0), out.x_bit(0)};
        neg = out.sigma_phase_exp() == 2;
    };
    LocalClifford out;
    push(inner.x_image(), out.x_img, out.x_neg);
    push(inner.z_image(), out.z_img, out.z_neg);
    return out;
}

LocalClifford inverse(const LocalClifford &c) {
    check_valid(c);
    for (const LocalClifford &cand : all_local_cliffords()) {
        if (compose(c, cand).is_identity()) {
            return cand;
        }
    }
    throw std::logic_error("Unreachable: every local Clifford has an inverse.");
}

std::string LocalClifford::str() const {
    check_valid(*this);
    static const std::map<size_t, std::string> names = [] {
        std::map<size_t, std::string> table;
        table[encode(LocalClifford::identity())] = "I";
        std::deque<LocalClifford> queue = {LocalClifford::identity()};
        // Breadth-first products of H and S reach all 24 elements; appending
        // a generator on the right keeps names in operator order.
        while (!queue.empty()) {
            LocalClifford cur = queue.front();
            queue.pop_front();
            for (const auto &[gate, gate_name] :
                 {std::pair{LocalClifford::h(), "H"}, std::pair{LocalClifford::s(), "S"}}) {
                LocalClifford next = compose(cur, gate);
                if (table.contains(encode(next))) {
                    continue;
                }
                std::string base = table.at(encode(cur));
                table[encode(next)] = base == "I" ? gate_name : base + " " + gate_name;
                queue.push_back(next);
            }
        }
        return table;
    }();
    return names.at(encode(*this));
}

StabilizerTableau conjugated(const StabilizerTableau &t, const std::vector<LocalClifford> &locals) {
    if (locals.size() != t.n_qubits) {
        throw std::invalid_argument("Need one local Clifford per qubit.");
    }
    StabilizerTableau out = t;
    for (size_t q = 0; q < t.n_qubits; q++) {
        if (locals[q].is_identity()) {
            continue;
        }
        for (PauliString &g : out.generators) {
            g = conjugated(g, q, locals[q]);
        }
    }
    return out;
}

std::vector<std::pair<size_t, size_t>> edges(const GraphState &g) {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t a = 0; a < g.num_vertices(); a++) {
        for (size_t b = a + 1; b < g.num_vertices(); b++) {
            if (g.has_edge(a, b)) {
                out.push_back({a, b});
            }
        }
    }
    return out;
}

bool is_bipartite(const GraphState &g) {
    size_t n = g.num_vertices();
    std::vector<int> color(n, -1);
    for (size_t start = 0; start < n; start++) {
        if (color[start] != -1) {
            continue;
        }
        color[start] = 0;
        std::deque<size_t> queue = {start};
        while (!queue.empty()) {
            size_t v = queue.front();
            queue.pop_front();
            for (size_t u = 0; u < n; u++) {
                if (!g.has_edge(v, u)) {
                    continue;
                }
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

GraphState to_graph(const StabilizerTableau &t) {
    if (!t.is_full_rank()) {
        throw std::invalid_argument("to_graph needs a full-rank tableau.");
    }
    validate(t);
    size_t n = t.n_qubits;
    std::vector<PauliString> rows = t.generators;
    std::vector<LocalClifford> applied(n, LocalClifford::identity());

    auto apply_local = [&](size_t q, const LocalClifford &c) {
        for (PauliString &r : rows) {
            r = conjugated(r, q, c);
        }
        applied[q] = compose(c, applied[q]);
    };

    // Find the X-block pivot columns; Hadamards on the others make the X
    // block invertible (the Z bits of the X-free rows cover those columns).
    std::vector<bool> is_pivot(n, false);
    size_t rank = 0;
    for (size_t col = 0; col < n; col++) {
        size_t sel = n;
        for (size_t r = rank; r < rows.size(); r++) {
            if (rows[r].x_bit(col)) {
                sel = r;
                break;
            }
        }
        if (sel == n) {
            continue;
        }
        std::swap(rows[rank], rows[sel]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r].x_bit(col)) {
                rows[r] = multiply(rows[r], rows[rank]);
            }
        }
        is_pivot[col] = true;
        rank++;
    }
    for (size_t col = 0; col < n; col++) {
        if (!is_pivot[col]) {
            apply_local(col, LocalClifford::h());
        }
    }

    // Row-reduce the now invertible X block to the identity.
    for (size_t col = 0; col < n; col++) {
        size_t sel = n;
        for (size_t r = col; r < rows.size(); r++) {
            if (rows[r].x_bit(col)) {
                sel = r;
                break;
            }
        }
        if (sel == n) {
            throw std::logic_error("Internal error: X block is singular after Hadamard stage.");
        }
        std::swap(rows[col], rows[sel]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != col && rows[r].x_bit(col)) {
                rows[r] = multiply(rows[r], rows[col]);
            }
        }
    }

    // Phase gates clear diagonal Y letters; Z gates clear minus signs.
    for (size_t q = 0; q < n; q++) {
        if (rows[q].z_bit(q)) {
            apply_local(q, LocalClifford::s());
        }
    }
    for (size_t q = 0; q < n; q++) {
        if (rows[q].is_negative()) {
            apply_local(q, LocalClifford::z());
        }
    }

    GraphState g;
    g.adjacency.reserve(n);
    for (size_t q = 0; q < n; q++) {
        if (rows[q].sigma_phase_exp() != 0 || rows[q].z_bit(q)) {
            throw std::logic_error("Internal error: graph reduction left a phase or diagonal entry.");
        }
        g.adjacency.push_back(rows[q].z_bits());
    }
    for (size_t a = 0; a < n; a++) {
        for (size_t b = 0; b < n; b++) {
            if (g.adjacency[a].get(b) != g.adjacency[b].get(a)) {
                throw std::logic_error("Internal error: graph reduction left an asymmetric adjacency.");
            }
        }
    }
    g.roles = t.roles;
    g.local_cliffords.reserve(n);
    for (size_t q = 0; q < n; q++) {
        g.local_cliffords.push_back(inverse(applied[q]));
    }
    if (!group_equal(conjugated(from_graph(g.adjacency, g.roles), g.local_cliffords), t)) {
        throw std::logic_error("Internal error: graph form does not reproduce the input group.");
    }
    return g;
}

namespace {

/// Adjacency of the input-side graph on 2^k vertices: two disjoint copies of
/// the complete join of two copies of the graph for k - 2.
std::vector<BitVec> purification_inputs(size_t k) {
    size_t n = size_t{1} << k;
    std::vector<BitVec> adj(n, BitVec(n));
    if (k <= 1) {
        return adj;
    }
    std::vector<BitVec> half = purification_inputs(k - 2);
    size_t h = half.size();
    for (size_t copy = 0; copy < 2; copy++) {
        size_t base = copy * 2 * h;
        for (size_t blk = 0; blk < 2; blk++) {
            for (size_t a = 0; a < h; a++) {
                for (size_t b = 0; b < h; b++) {
                    if (half[a].get(b)) {
                        adj[base + blk * h + a].set(base + blk * h + b, true);
                    }
                }
            }
        }
        for (size_t a = 0; a < h; a++) {
            for (size_t b = 0; b < h; b++) {
                adj[base + a].set(base + h + b, true);
                adj[base + h + b].set(base + a, true);
            }
        }
    }
    return adj;
}

}  // namespace

GraphState dejmps_graph(size_t n_rounds) {
    if (n_rounds == 0) {
        throw std::invalid_argument("dejmps_graph needs at least one round.");
    }
    std::vector<BitVec> inputs = purification_inputs(n_rounds);
    size_t m = inputs.size();
    GraphState g;
    g.adjacency.assign(m + 1, BitVec(m + 1));
    for (size_t a = 0; a < m; a++) {
        g.adjacency[0].set(1 + a, true);
        g.adjacency[1 + a].set(0, true);
        for (size_t b = 0; b < m; b++) {
            if (inputs[a].get(b)) {
                g.adjacency[1 + a].set(1 + b, true);
            }
        }
    }
    g.local_cliffords.assign(m + 1, LocalClifford::identity());
    g.roles.assign(m + 1, QubitRole::input);
    g.roles[0] = QubitRole::output;
    return g;
}

std::string export_graph(const GraphState &g, GraphFormat format) {
    size_t n = g.num_vertices();
    if (format == GraphFormat::dot) {
        std::ostringstream out;
        out << "graph G {\n  node [style=filled];\n";
        for (size_t v = 0; v < n; v++) {
            const char *color = "gray";
            if (v < g.roles.size()) {
                color = g.roles[v] == QubitRole::input ? "red" : "lightblue";
            }
            out << "  q" << v << " [fillcolor=" << color << "];\n";
        }
        for (const auto &[a, b] : edges(g)) {
            out << "  q" << a << " -- q" << b << ";\n";
        }
        out << "}\n";
        return out.str();
    }
    if (format == GraphFormat::graphml) {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
            << "  <key id=\"role\" for=\"node\" attr.name=\"role\" attr.type=\"string\"/>\n"
            << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
        for (size_t v = 0; v < n; v++) {
            out << "    <node id=\"q" << v << "\"><data key=\"role\">"
                << (v < g.roles.size() ? role_name(g.roles[v]) : "virtual") << "</data></node>\n";
        }
        for (const auto &[a, b] : edges(g)) {
            out << "    <edge source=\"q" << a << "\" target=\"q" << b << "\"/>\n";
        }
        out << "  </graph>\n</graphml>\n";
        return out.str();
    }
    nlohmann::json j;
    j["n"] = n;
    j["edges"] = nlohmann::json::array();
    for (const auto &[a, b] : edges(g)) {
        j["edges"].push_back({a, b});
    }
    j["roles"] = nlohmann::json::array();
    for (QubitRole r : g.roles) {
        j["roles"].push_back(role_name(r));
    }
    j["local_cliffords"] = nlohmann::json::array();
    for (const LocalClifford &c : g.local_cliffords) {
        j["local_cliffords"].push_back({
            {"x_img", {c.x_img.i, c.x_img.j}},
            {"x_neg", c.x_neg},
            {"z_img", {c.z_img.i, c.z_img.j}},
            {"z_neg", c.z_neg},
        });
    }
    return j.dump(2);
}

GraphState graph_from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    size_t n = j.at("n").get<size_t>();
    GraphState g;
    g.adjacency.assign(n, BitVec(n));
    for (const auto &e : j.at("edges")) {
        size_t a = e.at(0).get<size_t>();
        size_t b = e.at(1).get<size_t>();
        if (a >= n || b >= n || a == b) {
            throw std::invalid_argument("Graph JSON has an invalid edge.");
        }
        g.adjacency[a].set(b, true);
        g.adjacency[b].set(a, true);
    }
    for (const auto &r : j.at("roles")) {
        g.roles.push_back(role_from_name(r.get<std::string>()));
    }
    for (const auto &c : j.at("local_cliffords")) {
        LocalClifford lc;
        lc.x_img = PauliFactor{c.at("x_img").at(0).get<bool>(), c.at("x_img").at(1).get<bool>()};
        lc.x_neg = c.at("x_neg").get<bool>();
        lc.z_img = PauliFactor{c.at("z_img").at(0).get<bool>(), c.at("z_img").at(1).get<bool>()};
        lc.z_neg = c.at("z_neg").get<bool>();
        check_valid(lc);
        g.local_cliffords.push_back(lc);
    }
    if (g.roles.size() != n || g.local_cliffords.size() != n) {
        throw std::invalid_argument("Graph JSON field lengths disagree with n.");
    }
    return g;
}

}  // namespace forge
