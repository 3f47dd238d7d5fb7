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

#include "forge/tasks.h"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "forge/concat.h"
#include "json.hpp"

namespace forge {

namespace {

AuxOps aux_from_plan_spec(const std::string &spec) {
    std::string_view s = spec;
    bool force_input = false;
    bool force_output = false;
    auto unwrap = [&](std::string_view prefix) {
        if (s.size() > prefix.size() + 1 && s.substr(0, prefix.size()) == prefix && s.back() == ')') {
            s = s.substr(prefix.size(), s.size() - prefix.size() - 1);
            return true;
        }
        return false;
    };
    if (unwrap("encode(")) {
        force_input = true;
    } else if (unwrap("decode(")) {
        force_output = true;
    }
    AuxOps ops = make_aux(parse_code_spec(s));
    if (force_input) {
        return ops.with_side(Side::single_input);
    }
    if (force_output) {
        return ops.with_side(Side::single_output);
    }
    return ops;
}

}  // namespace

CompositionPlan plan_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("plan: not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array()) {
        throw std::invalid_argument("plan: want an object with a 'nodes' array");
    }
    CompositionPlan plan;
    std::map<std::string, size_t> index_of;
    for (const auto &node : j["nodes"]) {
        if (!node.is_object() || !node.contains("id") || !node.contains("spec")) {
            throw std::invalid_argument("plan: every node wants 'id' and 'spec'");
        }
        PlanNode parsed;
        parsed.name = node["id"].get<std::string>();
        parsed.spec = node["spec"].get<std::string>();
        parsed.ops = aux_from_plan_spec(parsed.spec);
        if (!index_of.emplace(parsed.name, plan.nodes.size()).second) {
            throw std::invalid_argument("plan: duplicate node id '" + parsed.name + "'");
        }
        plan.nodes.push_back(std::move(parsed));
    }
    auto lookup = [&](const nlohmann::json &edge, const char *key) {
        std::string id = edge.at(key).get<std::string>();
        auto it = index_of.find(id);
        if (it == index_of.end()) {
            throw std::invalid_argument("plan: edge references unknown node '" + id + "'");
        }
        return it->second;
    };
    for (const auto &edge : j.value("edges", nlohmann::json::array())) {
        PlanEdge parsed;
        std::string kind = edge.at("kind").get<std::string>();
        if (kind == "concatenate") {
            parsed.kind = PlanEdgeKind::concatenate;
        } else if (kind == "couple") {
            parsed.kind = PlanEdgeKind::couple;
        } else {
            throw std::invalid_argument("plan: unknown edge kind '" + kind + "'");
        }
        parsed.from = lookup(edge, "from");
        parsed.to = lookup(edge, "to");
        plan.edges.push_back(parsed);
    }
    return plan;
}

std::string plan_to_json(const CompositionPlan &plan) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const PlanNode &node : plan.nodes) {
        j["nodes"].push_back({{"id", node.name}, {"spec", node.spec}});
    }
    j["edges"] = nlohmann::json::array();
    for (const PlanEdge &edge : plan.edges) {
        j["edges"].push_back(
            {{"kind", edge.kind == PlanEdgeKind::concatenate ? "concatenate" : "couple"},
             {"from", plan.nodes[edge.from].name},
             {"to", plan.nodes[edge.to].name}});
    }
    return j.dump(2);
}

TaskArtifact build(const CompositionPlan &plan) {
    const size_t n = plan.nodes.size();
    if (n == 0) {
        throw std::invalid_argument("plan: no nodes");
    }
    for (const PlanEdge &edge : plan.edges) {
        if (edge.from >= n || edge.to >= n) {
            throw std::invalid_argument("plan: edge node index out of range");
        }
    }
    // Fold concatenate edges bottom-up. A node's children nest into it in
    // listed edge order; a node may only nest into one parent.
    std::vector<AuxOps> resolved(n);
    std::vector<bool> nested(n, false);
    std::vector<int> state(n, 0);  // 0 untouched, 1 resolving, 2 done
    auto resolve = [&](auto &&self, size_t node) -> const AuxOps & {
        if (state[node] == 1) {
            throw std::invalid_argument("plan: concatenation cycle through '" +
                                        plan.nodes[node].name + "'");
        }
        if (state[node] == 0) {
            state[node] = 1;
            AuxOps acc = plan.nodes[node].ops;
            for (const PlanEdge &edge : plan.edges) {
                if (edge.kind != PlanEdgeKind::concatenate || edge.from != node) {
                    continue;
                }
                if (nested[edge.to]) {
                    throw std::invalid_argument("plan: node '" + plan.nodes[edge.to].name +
                                                "' nests into more than one parent");
                }
                nested[edge.to] = true;
                acc = build_next_level({acc, self(self, edge.to)});
            }
            resolved[node] = std::move(acc);
            state[node] = 2;
        }
        return resolved[node];
    };
    for (size_t node = 0; node < n; node++) {
        resolve(resolve, node);
    }

    std::vector<const PlanEdge *> couples;
    for (const PlanEdge &edge : plan.edges) {
        if (edge.kind == PlanEdgeKind::couple) {
            couples.push_back(&edge);
        }
    }
    if (couples.size() > 1) {
        throw std::invalid_argument(
            "plan: at most one couple edge (coupling consumes the distinguished qubits)");
    }
    auto require_root = [&](size_t node) {
        if (nested[node]) {
            throw std::invalid_argument("plan: node '" + plan.nodes[node].name +
                                        "' is nested and cannot be coupled");
        }
    };
    auto require_all_used = [&](size_t extra_used = size_t(-1)) {
        for (size_t node = 0; node < n; node++) {
            bool used = nested[node] || node == extra_used;
            if (couples.size() == 1) {
                used = used || node == couples[0]->from || node == couples[0]->to;
            }
            if (!used) {
                throw std::invalid_argument("plan: node '" + plan.nodes[node].name +
                                            "' is not connected to the result");
            }
        }
    };

    StabilizerTableau tableau;
    if (couples.empty()) {
        size_t root = size_t(-1);
        for (size_t node = 0; node < n; node++) {
            if (!nested[node]) {
                if (root != size_t(-1)) {
                    throw std::invalid_argument("plan: more than one tree and no couple edge");
                }
                root = node;
            }
        }
        require_all_used(root);
        tableau = to_stabilizers(resolved[root]);
    } else {
        const PlanEdge &edge = *couples[0];
        require_root(edge.from);
        require_root(edge.to);
        require_all_used();
        const AuxOps &a = resolved[edge.from];
        const AuxOps &b = resolved[edge.to];
        if (a.side == Side::single_output && b.side == Side::single_input) {
            tableau = couple(a, b);
        } else if (a.side == Side::single_output && b.side == Side::single_output) {
            tableau = swap_join(a, b);
        } else {
            throw std::invalid_argument(
                "plan: couple wants output-to-input or output-to-output sides");
        }
    }
    GraphState graph = to_graph(tableau);
    return {std::move(tableau), std::move(graph)};
}

AuxOps dejmps_tower(size_t rounds, Station station) {
    return concat_levels(dejmps(station), rounds);
}

StabilizerTableau logical_epp(const CodeSpec &code, size_t rounds, Station station) {
    AuxOps block = make_aux(code);
    AuxOps tower = build_next_level(
        {dejmps_tower(rounds, station), block.with_side(Side::single_output)});
    return couple(tower, block.with_side(Side::single_input));
}

StabilizerTableau dfs_epp(size_t rounds, Station station) {
    AuxOps tower = build_next_level({dejmps_tower(rounds, station), dfs().with_side(Side::single_output)});
    return to_stabilizers(tower);
}

StabilizerTableau switcher(const CodeSpec &from_code, const CodeSpec &to_code) {
    return couple(make_aux(from_code).with_side(Side::single_output),
                  make_aux(to_code).with_side(Side::single_input));
}

StabilizerTableau syndrome_readout(const CodeSpec &code) {
    return switcher(code, code);
}

StabilizerTableau repeater(size_t left_rounds, size_t right_rounds, Station station) {
    return swap_join(dejmps_tower(left_rounds, station), dejmps_tower(right_rounds, station));
}

namespace {

void require_complete(const AuxOps &aux, const char *who) {
    if (!aux.is_complete() || aux.k_set.empty() || aux.f_set.empty()) {
        throw std::invalid_argument(std::string(who) + ": description is not complete");
    }
}

PauliString pattern_pauli(const std::vector<BellOutcome> &outcomes) {
    BitVec x(outcomes.size());
    BitVec z(outcomes.size());
    for (size_t q = 0; q < outcomes.size(); q++) {
        x.set(q, outcomes[q].j);
        z.set(q, outcomes[q].i);
    }
    return PauliString(x, z, 0);
}

/// Logical class of a span member: X power from anticommutation with the
/// first K, Z power from anticommutation with the first F.
PauliString logical_class(const PauliString &member, const AuxOps &aux) {
    bool x_power = !commutes(member, aux.k_set.front());
    bool z_power = !commutes(member, aux.f_set.front());
    char letter = "IXZY"[size_t(x_power) + 2 * size_t(z_power)];
    PauliString out = PauliString::identity(1);
    out.set_letter(0, letter);
    return out;
}

bool in_span(const PauliString &candidate, const AuxOps &aux) {
    std::vector<PauliString> probe;
    probe.reserve(aux.total() + 1);
    probe.insert(probe.end(), aux.k_set.begin(), aux.k_set.end());
    probe.insert(probe.end(), aux.f_set.begin(), aux.f_set.end());
    probe.push_back(candidate);
    return !is_independent(probe);
}

}  // namespace

PauliString encode_correction(BellOutcome outcome, const AuxOps &aux) {
    if (aux.side != Side::single_input) {
        throw std::invalid_argument("encode_correction: wants a single-input description");
    }
    require_complete(aux, "encode_correction");
    if (!outcome.i && !outcome.j) {
        return PauliString::identity(aux.m_qubits);
    }
    if (!outcome.i) {
        return aux.f_set.front();
    }
    if (!outcome.j) {
        return aux.k_set.front();
    }
    return multiply(aux.f_set.front(), aux.k_set.front());
}

DecodeDecision decode_correction(const std::vector<BellOutcome> &outcomes, const AuxOps &aux) {
    if (aux.side != Side::single_output) {
        throw std::invalid_argument("decode_correction: wants a single-output description");
    }
    require_complete(aux, "decode_correction");
    if (outcomes.size() != aux.m_qubits) {
        throw std::invalid_argument("decode_correction: want one outcome per code qubit");
    }
    DecodeDecision decision;
    decision.correction = PauliString::identity(1);
    decision.detected_error = PauliString::identity(aux.m_qubits);
    PauliString pattern = pattern_pauli(outcomes);
    if (in_span(pattern, aux)) {
        decision.correction = logical_class(pattern, aux);
        return decision;
    }
    for (size_t q = 0; q < aux.m_qubits; q++) {
        for (char letter : {'X', 'Y', 'Z'}) {
            PauliString error = PauliString::single(aux.m_qubits, q, letter);
            PauliString moved = multiply(error, pattern);
            if (in_span(moved, aux)) {
                decision.correction = logical_class(moved, aux);
                decision.detected_error = error;
                decision.error_detected = true;
                return decision;
            }
        }
    }
    decision.uncorrectable = true;
    return decision;
}

PurificationDecision purification_decision(const std::vector<BellOutcome> &outcomes,
                                           const AuxOps &aux) {
    if (aux.side != Side::single_output) {
        throw std::invalid_argument("purification_decision: wants a single-output description");
    }
    require_complete(aux, "purification_decision");
    if (outcomes.size() != aux.m_qubits) {
        throw std::invalid_argument("purification_decision: want one outcome per input qubit");
    }
    PurificationDecision decision;
    decision.correction = PauliString::identity(1);
    PauliString pattern = pattern_pauli(outcomes);
    if (in_span(pattern, aux)) {
        decision.keep = true;
        decision.correction = logical_class(pattern, aux);
    }
    return decision;
}

PauliString propagate_byproduct(const StabilizerTableau &t, const PauliString &input_pauli) {
    const std::vector<size_t> inputs = t.qubits_with_role(QubitRole::input);
    const std::vector<size_t> outputs = t.qubits_with_role(QubitRole::output);
    if (input_pauli.num_qubits() != inputs.size()) {
        throw std::invalid_argument("propagate_byproduct: want one letter per input qubit");
    }
    const size_t width = 2 * inputs.size();
    auto input_row = [&](const PauliString &p) {
        BitVec row(width);
        for (size_t idx = 0; idx < inputs.size(); idx++) {
            row.set(idx, p.x_bit(inputs[idx]));
            row.set(inputs.size() + idx, p.z_bit(inputs[idx]));
        }
        return row;
    };
    // GF(2) elimination over the generators' input restrictions, tracking
    // which generators combine into each reduced row.
    std::vector<std::pair<BitVec, BitVec>> basis;  // (reduced row, generator combo)
    for (size_t g = 0; g < t.generators.size(); g++) {
        BitVec row = input_row(t.generators[g]);
        BitVec combo(t.generators.size());
        combo.set(g, true);
        for (const auto &[b_row, b_combo] : basis) {
            size_t pivot = b_row.lowest_set_bit();
            if (row.get(pivot)) {
                row ^= b_row;
                combo ^= b_combo;
            }
        }
        if (row.any()) {
            basis.emplace_back(std::move(row), std::move(combo));
        }
    }
    BitVec target(width);
    {
        BitVec bare_x = input_pauli.x_bits();
        BitVec bare_z = input_pauli.z_bits();
        for (size_t idx = 0; idx < inputs.size(); idx++) {
            target.set(idx, bare_x.get(idx));
            target.set(inputs.size() + idx, bare_z.get(idx));
        }
    }
    BitVec combo(t.generators.size());
    for (const auto &[b_row, b_combo] : basis) {
        size_t pivot = b_row.lowest_set_bit();
        if (target.get(pivot)) {
            target ^= b_row;
            combo ^= b_combo;
        }
    }
    if (target.any()) {
        throw std::invalid_argument(
            "propagate_byproduct: no stabilizer matches the input pattern " + input_pauli.str() +
            "; the byproduct is detectable, not propagable");
    }
    PauliString product = PauliString::identity(t.n_qubits);
    for (size_t g = 0; g < t.generators.size(); g++) {
        if (combo.get(g)) {
            product = multiply(product, t.generators[g]);
        }
    }
    // With S = i^s A(x)B split over inputs/outputs (bare per-qubit X-then-Z
    // factors split with no extra sign), S|psi> = |psi> gives
    // A|psi> = i^{-s} B^{-1}|psi> and B^{-1} = (-1)^{|x&z|} B.
    PauliString out_part = product.restricted_to(outputs);
    uint8_t overlap = uint8_t(out_part.x_bits().and_popcount(out_part.z_bits()) & 1);
    uint8_t phase =
        uint8_t((input_pauli.phase_exp() - product.phase_exp() + 2 * overlap) & 3);
    return PauliString(out_part.x_bits(), out_part.z_bits(), phase);
}

}  // namespace forge
