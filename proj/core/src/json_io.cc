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

#include "forge/json_io.h"

#include <stdexcept>

#include "json.hpp"

namespace forge {

namespace {

nlohmann::json parse_or_throw(const std::string &text, const char *what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string(what) + ": not valid JSON: " + e.what());
    }
}

const char *role_name(QubitRole role) {
    switch (role) {
        case QubitRole::input:
            return "input";
        case QubitRole::output:
            return "output";
        case QubitRole::virtual_link:
            return "virtual";
    }
    throw std::logic_error("unhandled role");
}

QubitRole role_from_name(const std::string &name) {
    if (name == "input") {
        return QubitRole::input;
    }
    if (name == "output") {
        return QubitRole::output;
    }
    if (name == "virtual") {
        return QubitRole::virtual_link;
    }
    throw std::invalid_argument("tableau: unknown role '" + name + "'");
}

std::vector<PauliString> paulis_from(const nlohmann::json &list, size_t want_width,
                                     const char *what) {
    std::vector<PauliString> out;
    for (const auto &item : list) {
        PauliString p = PauliString::from_text(item.get<std::string>());
        if (want_width != size_t(-1) && p.num_qubits() != want_width) {
            throw std::invalid_argument(std::string(what) + ": operator " + p.str() +
                                        " has the wrong width");
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::string tableau_to_json(const StabilizerTableau &t) {
    nlohmann::json j;
    j["n"] = t.n_qubits;
    j["roles"] = nlohmann::json::array();
    for (QubitRole role : t.roles) {
        j["roles"].push_back(role_name(role));
    }
    j["generators"] = nlohmann::json::array();
    for (const PauliString &g : t.generators) {
        j["generators"].push_back(g.str());
    }
    return j.dump(2);
}

StabilizerTableau tableau_from_json(const std::string &text) {
    nlohmann::json j = parse_or_throw(text, "tableau");
    if (!j.is_object() || !j.contains("n") || !j.contains("roles") || !j.contains("generators")) {
        throw std::invalid_argument("tableau: want an object with n, roles and generators");
    }
    StabilizerTableau t;
    t.n_qubits = j["n"].get<size_t>();
    for (const auto &role : j["roles"]) {
        t.roles.push_back(role_from_name(role.get<std::string>()));
    }
    if (t.roles.size() != t.n_qubits) {
        throw std::invalid_argument("tableau: want one role per qubit");
    }
    t.generators = paulis_from(j["generators"], t.n_qubits, "tableau");
    return t;
}

std::string aux_to_json(const AuxOps &aux) {
    nlohmann::json j;
    j["side"] = aux.side == Side::single_input ? "input" : "output";
    j["k_set"] = nlohmann::json::array();
    for (const PauliString &k : aux.k_set) {
        j["k_set"].push_back(k.str());
    }
    j["f_set"] = nlohmann::json::array();
    for (const PauliString &f : aux.f_set) {
        j["f_set"].push_back(f.str());
    }
    return j.dump(2);
}

AuxOps aux_from_json(const std::string &text) {
    nlohmann::json j = parse_or_throw(text, "operator sets");
    if (!j.is_object() || !j.contains("side") || !j.contains("k_set") || !j.contains("f_set")) {
        throw std::invalid_argument("operator sets: want an object with side, k_set and f_set");
    }
    AuxOps aux;
    std::string side = j["side"].get<std::string>();
    if (side == "input") {
        aux.side = Side::single_input;
    } else if (side == "output") {
        aux.side = Side::single_output;
    } else {
        throw std::invalid_argument("operator sets: unknown side '" + side + "'");
    }
    aux.k_set = paulis_from(j["k_set"], size_t(-1), "operator sets");
    aux.f_set = paulis_from(j["f_set"], size_t(-1), "operator sets");
    if (aux.k_set.empty() && aux.f_set.empty()) {
        throw std::invalid_argument("operator sets: both sets are empty");
    }
    aux.m_qubits = aux.k_set.empty() ? aux.f_set.front().num_qubits()
                                     : aux.k_set.front().num_qubits();
    for (const auto *set : {&aux.k_set, &aux.f_set}) {
        for (const PauliString &p : *set) {
            if (p.num_qubits() != aux.m_qubits) {
                throw std::invalid_argument("operator sets: operator " + p.str() +
                                            " has the wrong width");
            }
        }
    }
    return aux;
}

}  // namespace forge
