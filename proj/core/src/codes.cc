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

#include "forge/codes.h"

#include <charconv>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "forge/concat.h"
#include "forge/oracle.h"

namespace forge {

namespace {

PauliString uniform(size_t n, char letter) {
    PauliString p = PauliString::identity(n);
    for (size_t q = 0; q < n; q++) {
        p.set_letter(q, letter);
    }
    return p;
}

void require_repetition_length(size_t m, const char *family) {
    if (m < 2) {
        throw std::invalid_argument(std::string(family) +
                                    ": repetition length must be at least 2, got " +
                                    std::to_string(m));
    }
}

/// Flips candidate generator signs until each one stabilizes psi, then splits
/// the fitted tableau around qubit 0. The dense state is the authority on the
/// signs; a candidate that is no +/-1 eigenoperator at all is a logic error.
AuxOps fit_against_state(StabilizerTableau t, const DenseState &psi) {
    const DenseState reference = psi.normalized();
    for (PauliString &g : t.generators) {
        DenseState moved = reference;
        apply_pauli(g, moved);
        Amplitude overlap = 0;
        for (size_t idx = 0; idx < reference.amps.size(); idx++) {
            overlap += std::conj(reference.amps[idx]) * moved.amps[idx];
        }
        if (std::abs(overlap - Amplitude(1)) < 1e-9) {
            continue;
        }
        if (std::abs(overlap + Amplitude(1)) < 1e-9) {
            g.mul_phase(2);
            continue;
        }
        throw std::logic_error("fit_against_state: candidate " + g.str() +
                               " is not a sign eigenoperator of the reference state");
    }
    return from_stabilizers(t, 0);
}

}  // namespace

AuxOps bitflip(size_t m) {
    require_repetition_length(m, "bitflip");
    AuxOps out;
    out.side = Side::single_input;
    out.m_qubits = m;
    for (size_t q = 0; q < m; q++) {
        out.k_set.push_back(PauliString::single(m, q, 'Z'));
    }
    out.f_set.push_back(uniform(m, 'X'));
    return out;
}

AuxOps phaseflip(size_t m) {
    require_repetition_length(m, "phaseflip");
    AuxOps out;
    out.side = Side::single_input;
    out.m_qubits = m;
    for (size_t q = 0; q < m; q++) {
        out.k_set.push_back(PauliString::single(m, q, 'X'));
    }
    out.f_set.push_back(uniform(m, 'Z'));
    return out;
}

AuxOps generalized_shor(size_t m1, size_t m2) {
    if (m1 < 2 || m2 < 2) {
        throw std::invalid_argument("generalized_shor: block sizes must be at least 2, got " +
                                    std::to_string(m1) + "x" + std::to_string(m2));
    }
    const size_t n = m1 * m2;
    AuxOps out;
    out.side = Side::single_input;
    out.m_qubits = n;
    for (size_t b = 0; b < m1; b++) {
        PauliString row = PauliString::identity(n);
        for (size_t q = 0; q < m2; q++) {
            row.set_letter(b * m2 + q, 'X');
        }
        out.k_set.push_back(row);
    }
    // One Z per block; the full set is dependent, so keep the ladder subset:
    // the all-first-position row, then one block at a time (last block first)
    // moves its Z across the remaining positions.
    auto z_row = [&](size_t moved_block, size_t pos) {
        PauliString row = PauliString::identity(n);
        for (size_t b = 0; b < m1; b++) {
            row.set_letter(b * m2 + (b == moved_block ? pos : 0), 'Z');
        }
        return row;
    };
    out.f_set.push_back(z_row(0, 0));
    for (size_t b = m1; b-- > 0;) {
        for (size_t pos = 1; pos < m2; pos++) {
            out.f_set.push_back(z_row(b, pos));
        }
    }
    return out;
}

AuxOps cluster_ring() {
    StabilizerTableau t;
    t.n_qubits = 6;
    for (const char *row : {"ZXZIIZ", "ZZXZII", "ZIZXZI", "ZIIZXZ", "ZZIIZX", "XZZZZZ"}) {
        t.generators.push_back(PauliString::from_text(row));
    }
    t.roles.assign(6, QubitRole::output);
    t.roles[0] = QubitRole::input;
    return from_stabilizers(t, 0);
}

AuxOps dejmps(Station station) {
    AuxOps alice;
    alice.side = Side::single_output;
    alice.m_qubits = 2;
    alice.k_set = {PauliString::from_text("-YI"), PauliString::from_text("-IY")};
    alice.f_set = {PauliString::from_text("-ZZ")};
    if (station == Station::alice) {
        return alice;
    }
    // bob's state is alice's with the |G_0> branch negated, which is X on the
    // distinguished qubit up to a global phase. Recover the signs from the
    // dense state instead of adjusting them by hand.
    DenseState flipped = state_of(to_stabilizers(alice));
    apply_pauli(PauliString::single(3, 0, 'X'), flipped);
    return fit_against_state(to_stabilizers(alice), flipped);
}

AuxOps dfs() {
    DenseState psi = jamiolkowski(DenseState::basis(2, 0b01), DenseState::basis(2, 0b10));
    StabilizerTableau t;
    t.n_qubits = 3;
    t.generators = {PauliString::from_text("ZZI"), PauliString::from_text("ZIZ"),
                    PauliString::from_text("XXX")};
    t.roles = {QubitRole::input, QubitRole::output, QubitRole::output};
    return fit_against_state(std::move(t), psi);
}

AuxOps wire() {
    AuxOps out;
    out.side = Side::single_input;
    out.m_qubits = 1;
    out.k_set = {PauliString::from_text("Z")};
    out.f_set = {PauliString::from_text("X")};
    return out;
}

AuxOps concat_levels(const AuxOps &base, size_t levels) {
    if (levels == 0) {
        return wire().with_side(base.side);
    }
    AuxOps level = base;
    for (size_t l = 1; l < levels; l++) {
        level = build_next_level({base, level});
    }
    return level;
}

AuxOps make_aux(const CodeSpec &spec) {
    AuxOps base = [&] {
        switch (spec.kind) {
            case CodeKind::bitflip:
                return bitflip(spec.m1);
            case CodeKind::phaseflip:
                return phaseflip(spec.m1);
            case CodeKind::shor:
                return generalized_shor(spec.m1, spec.m2);
            case CodeKind::ring5:
                return cluster_ring();
            case CodeKind::dejmps:
                return dejmps(spec.station);
            case CodeKind::dfs:
                return dfs();
            case CodeKind::wire:
                return wire();
        }
        throw std::logic_error("make_aux: unhandled code kind");
    }();
    return concat_levels(base, spec.levels);
}

namespace {

size_t parse_count(std::string_view text, const char *what) {
    size_t value = 0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw std::invalid_argument(std::string("code spec: bad ") + what + " '" +
                                    std::string(text) + "'");
    }
    return value;
}

}  // namespace

CodeSpec parse_code_spec(std::string_view text) {
    CodeSpec spec;
    std::string_view head = text;
    if (size_t at = text.find('@'); at != std::string_view::npos) {
        head = text.substr(0, at);
        spec.levels = parse_count(text.substr(at + 1), "depth");
    }
    std::string_view name = head;
    std::string_view arg;
    if (size_t colon = head.find(':'); colon != std::string_view::npos) {
        name = head.substr(0, colon);
        arg = head.substr(colon + 1);
    }
    auto no_arg = [&](CodeKind kind) {
        if (name != head) {
            throw std::invalid_argument("code spec: '" + std::string(name) +
                                        "' takes no ':' argument");
        }
        spec.kind = kind;
    };
    if (name == "bitflip" || name == "phaseflip") {
        spec.kind = name == "bitflip" ? CodeKind::bitflip : CodeKind::phaseflip;
        spec.m1 = parse_count(arg, "repetition length");
        require_repetition_length(spec.m1, "code spec");
    } else if (name == "shor") {
        size_t cross = arg.find('x');
        if (cross == std::string_view::npos) {
            throw std::invalid_argument("code spec: shor wants m1xm2, got '" + std::string(arg) +
                                        "'");
        }
        spec.kind = CodeKind::shor;
        spec.m1 = parse_count(arg.substr(0, cross), "block size");
        spec.m2 = parse_count(arg.substr(cross + 1), "block size");
        if (spec.m1 < 2 || spec.m2 < 2) {
            throw std::invalid_argument("code spec: shor block sizes must be at least 2");
        }
    } else if (name == "dejmps") {
        spec.kind = CodeKind::dejmps;
        if (arg == "alice") {
            spec.station = Station::alice;
        } else if (arg == "bob") {
            spec.station = Station::bob;
        } else {
            throw std::invalid_argument("code spec: dejmps wants :alice or :bob, got '" +
                                        std::string(arg) + "'");
        }
    } else if (name == "ring5") {
        no_arg(CodeKind::ring5);
    } else if (name == "dfs") {
        no_arg(CodeKind::dfs);
    } else if (name == "wire") {
        no_arg(CodeKind::wire);
    } else {
        throw std::invalid_argument("code spec: unknown family '" + std::string(name) + "'");
    }
    return spec;
}

std::string to_text(const CodeSpec &spec) {
    std::string out;
    switch (spec.kind) {
        case CodeKind::bitflip:
            out = "bitflip:" + std::to_string(spec.m1);
            break;
        case CodeKind::phaseflip:
            out = "phaseflip:" + std::to_string(spec.m1);
            break;
        case CodeKind::shor:
            out = "shor:" + std::to_string(spec.m1) + "x" + std::to_string(spec.m2);
            break;
        case CodeKind::ring5:
            out = "ring5";
            break;
        case CodeKind::dejmps:
            out = spec.station == Station::alice ? "dejmps:alice" : "dejmps:bob";
            break;
        case CodeKind::dfs:
            out = "dfs";
            break;
        case CodeKind::wire:
            out = "wire";
            break;
    }
    if (spec.levels != 1) {
        out += "@" + std::to_string(spec.levels);
    }
    return out;
}

}  // namespace forge
