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

#include "forge/concat.h"

#include <stdexcept>
#include <string>

namespace forge {

namespace {

/// Incremental GF(2) row space; add() keeps a row echelon basis.
struct RowSpace {
    std::vector<std::pair<size_t, BitVec>> rows;

    bool add(BitVec v) {
        while (v.any()) {
            size_t pivot = v.lowest_set_bit();
            const BitVec *match = nullptr;
            for (const auto &[p, row] : rows) {
                if (p == pivot) {
                    match = &row;
                    break;
                }
            }
            if (match == nullptr) {
                rows.push_back({pivot, std::move(v)});
                return true;
            }
            v ^= *match;
        }
        return false;
    }
};

BitVec binary_row(const PauliString &p) {
    size_t n = p.num_qubits();
    BitVec row(2 * n);
    for (size_t q = 0; q < n; q++) {
        if (p.x_bit(q)) {
            row.set(q, true);
        }
        if (p.z_bit(q)) {
            row.set(n + q, true);
        }
    }
    return row;
}

/// The stabilizer a composed operator induces: Z tensor op for flip-type,
/// X tensor op for sign-type, distinguished qubit first. Only the bits matter
/// for rank tracking.
BitVec induced_row(const PauliString &op, bool f_type) {
    return binary_row(tensor(PauliString::single(1, 0, f_type ? 'X' : 'Z'), op));
}

size_t pick_at(const std::vector<size_t> &picks, size_t slot) {
    if (picks.empty()) {
        return 0;
    }
    if (slot >= picks.size()) {
        throw std::invalid_argument("Slot choice vector is shorter than the outer operator.");
    }
    return picks[slot];
}

PauliString extend_impl(const PauliString &outer_op, const AuxOps &inner, const SlotChoice &choose) {
    FactorDecomposition d = factor_decompose(outer_op);
    size_t w = inner.m_qubits;
    uint8_t c_exp = d.phase_exp;
    PauliString out = PauliString::identity(0);
    for (size_t l = 0; l < d.factors.size(); l++) {
        PauliFactor f = d.factors[l];
        if (f.i && f.j) {
            c_exp++;
        }
        PauliString block = PauliString::identity(w);
        if (f.i) {
            if (inner.k_set.empty()) {
                throw std::invalid_argument(
                    "Outer operator needs a flip-type inner operator but the inner k_set is empty.");
            }
            block = inner.k_set.at(pick_at(choose.k_pick, l));
        }
        if (f.j) {
            if (inner.f_set.empty()) {
                throw std::invalid_argument(
                    "Outer operator needs a sign-type inner operator but the inner f_set is empty.");
            }
            const PauliString &fr = inner.f_set.at(pick_at(choose.f_pick, l));
            block = f.i ? multiply(fr, block) : fr;
        }
        out = tensor(out, block);
    }
    out.mul_phase(c_exp & 3);
    return out;
}

/// All-zero picks, then one support slot at a time (last first) deviating
/// through every nonzero choice.
std::vector<std::vector<size_t>> support_staircase(const std::vector<size_t> &support, size_t n_choices, size_t m_slots) {
    std::vector<std::vector<size_t>> out;
    out.emplace_back(m_slots, 0);
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
        for (size_t e = 1; e < n_choices; e++) {
            std::vector<size_t> row(m_slots, 0);
            row[*it] = e;
            out.push_back(std::move(row));
        }
    }
    return out;
}

QubitRole leaf_role(Side side) {
    return side == Side::single_input ? QubitRole::output : QubitRole::input;
}

StabilizerTableau join_impl(const AuxOps &a, const AuxOps &b, const char *what) {
    if (!a.is_complete() || !b.is_complete()) {
        throw std::invalid_argument(std::string(what) + " needs complete descriptions on both sides.");
    }
    size_t n = a.m_qubits + b.m_qubits;
    RowSpace space;
    StabilizerTableau t;
    t.n_qubits = n;
    auto add_pairs = [&](const std::vector<PauliString> &left, const std::vector<PauliString> &right) {
        auto offer = [&](size_t i, size_t j) {
            PauliString g = tensor(left[i], right[j]);
            if (space.add(binary_row(g))) {
                t.generators.push_back(std::move(g));
            }
        };
        if (left.empty() || right.empty()) {
            return;
        }
        for (size_t j = 0; j < right.size(); j++) {
            offer(0, j);
        }
        for (size_t i = 1; i < left.size(); i++) {
            offer(i, 0);
        }
        // The staircase above suffices for well-formed inputs; the rest of the
        // grid is only a fallback against degenerate descriptions.
        for (size_t i = 1; i < left.size(); i++) {
            for (size_t j = 1; j < right.size(); j++) {
                if (t.generators.size() == n) {
                    return;
                }
                offer(i, j);
            }
        }
    };
    add_pairs(a.k_set, b.k_set);
    add_pairs(a.f_set, b.f_set);
    if (t.generators.size() != coupling_count(a.m_qubits, b.m_qubits)) {
        throw std::runtime_error(
            "Internal error: joining reached " + std::to_string(t.generators.size()) + " of " +
            std::to_string(coupling_count(a.m_qubits, b.m_qubits)) + " independent generators.");
    }
    t.roles.assign(a.m_qubits, leaf_role(a.side));
    t.roles.insert(t.roles.end(), b.m_qubits, leaf_role(b.side));
    validate(t);
    return t;
}

}  // namespace

PauliString extend_k(const PauliString &outer_k, const AuxOps &inner, const SlotChoice &choose) {
    return extend_impl(outer_k, inner, choose);
}

PauliString extend_f(const PauliString &outer_f, const AuxOps &inner, const SlotChoice &choose) {
    return extend_impl(outer_f, inner, choose);
}

AuxOps build_next_level(const RecurrenceInput &r) {
    const AuxOps &outer = r.outer;
    const AuxOps &inner = r.inner;
    if (!outer.is_complete() || !inner.is_complete()) {
        throw std::invalid_argument("build_next_level needs complete descriptions for both levels.");
    }
    if (outer.side != inner.side) {
        throw std::invalid_argument(
            "Composition levels must share a side: an input-rooted task composes with input-rooted blocks, "
            "an output-rooted task with output-rooted blocks.");
    }
    size_t m = outer.m_qubits;
    size_t w = inner.m_qubits;
    size_t target = level_count(m, w);

    AuxOps out;
    out.side = outer.side;
    out.m_qubits = m * w;
    RowSpace space;

    auto process = [&](const std::vector<PauliString> &outer_set, bool f_type) {
        for (const PauliString &op : outer_set) {
            FactorDecomposition d = factor_decompose(op);
            std::vector<size_t> k_support;
            std::vector<size_t> f_support;
            for (size_t l = 0; l < m; l++) {
                if (d.factors[l].i) {
                    k_support.push_back(l);
                }
                if (d.factors[l].j) {
                    f_support.push_back(l);
                }
            }
            auto k_variants = support_staircase(k_support, inner.k_set.size(), m);
            auto f_variants = support_staircase(f_support, inner.f_set.size(), m);
            for (const auto &k_pick : k_variants) {
                for (const auto &f_pick : f_variants) {
                    PauliString cand = extend_impl(op, inner, SlotChoice{k_pick, f_pick});
                    if (!cand.is_hermitian()) {
                        throw std::runtime_error(
                            "Internal error: composed operator " + cand.str() + " carries an imaginary sign.");
                    }
                    if (space.add(induced_row(cand, f_type))) {
                        (f_type ? out.f_set : out.k_set).push_back(std::move(cand));
                    }
                }
            }
        }
    };
    process(outer.k_set, false);
    process(outer.f_set, true);

    if (out.total() != target) {
        throw std::runtime_error(
            "Internal error: composed selection reached " + std::to_string(out.total()) + " of " +
            std::to_string(target) + " independent operators.");
    }

    // Canonical sign-type representatives: clear each sign-type operator's X
    // components against the flip-type set when the group allows. A pair of
    // flip-type operators acts trivially on the branch pair, so multiplying an
    // even number of them in keeps the operator sign-type (and Hermitian);
    // the purification families then show their customary all-Z form.
    {
        struct XRow {
            size_t pivot;
            BitVec x;
            BitVec combo;
        };
        std::vector<XRow> basis;
        auto reduce = [&](BitVec v, BitVec &combo) {
            while (v.any()) {
                size_t pivot = v.lowest_set_bit();
                const XRow *match = nullptr;
                for (const XRow &row : basis) {
                    if (row.pivot == pivot) {
                        match = &row;
                        break;
                    }
                }
                if (match == nullptr) {
                    break;
                }
                v ^= match->x;
                combo ^= match->combo;
            }
            return v;
        };
        for (size_t i = 0; i < out.k_set.size(); i++) {
            BitVec combo(out.k_set.size());
            combo.set(i, true);
            BitVec rest = reduce(out.k_set[i].x_bits(), combo);
            if (rest.any()) {
                basis.push_back({rest.lowest_set_bit(), std::move(rest), std::move(combo)});
            }
        }
        size_t zero_x_k = out.k_set.size();
        for (size_t i = 0; i < out.k_set.size(); i++) {
            if (!out.k_set[i].x_bits().any()) {
                zero_x_k = i;
                break;
            }
        }
        for (PauliString &f : out.f_set) {
            BitVec combo(out.k_set.size());
            if (reduce(f.x_bits(), combo).any()) {
                continue;  // X components not spanned; keep the operator as built.
            }
            if (combo.popcount() & 1) {
                if (zero_x_k == out.k_set.size()) {
                    continue;  // No even-parity combination clears the X components.
                }
                combo.flip(zero_x_k);
            }
            PauliString reduced = f;
            for (size_t i = 0; i < out.k_set.size(); i++) {
                if (combo.get(i)) {
                    reduced = multiply(reduced, out.k_set[i]);
                }
            }
            if (!reduced.is_hermitian()) {
                throw std::logic_error("Internal error: canonical sign-type reduction of " +
                                       f.str() + " lost Hermiticity.");
            }
            f = std::move(reduced);
        }
    }

    to_stabilizers(out);  // Full validation of the induced tableau.
    return out;
}

StabilizerTableau couple(const AuxOps &a, const AuxOps &b) {
    if (a.side != Side::single_output || b.side != Side::single_input) {
        throw std::invalid_argument(
            "couple joins a single-output description to a single-input one; got a mismatched pair.");
    }
    return join_impl(a, b, "couple");
}

StabilizerTableau swap_join(const AuxOps &a, const AuxOps &b) {
    if (a.side != Side::single_output || b.side != Side::single_output) {
        throw std::invalid_argument("swap_join needs two single-output descriptions.");
    }
    return join_impl(a, b, "swap_join");
}

StabilizerTableau single_projection(const StabilizerTableau &outer, size_t marked, const AuxOps &inner) {
    if (marked >= outer.n_qubits) {
        throw std::invalid_argument("Marked qubit is out of range.");
    }
    if (!outer.is_full_rank()) {
        throw std::invalid_argument("single_projection needs a full outer description.");
    }
    if (!inner.is_complete()) {
        throw std::invalid_argument("single_projection needs a complete inner description.");
    }
    size_t big_m = outer.n_qubits;
    size_t w = inner.m_qubits;
    size_t target = projection_count(big_m, w + 1);

    std::vector<size_t> others;
    for (size_t q = 0; q < big_m; q++) {
        if (q != marked) {
            others.push_back(q);
        }
    }

    // Splices `block` into `rest` at the marked position. Rewriting the bare
    // X^j Z^i letter into the inner block costs no phase; the stored exponents
    // of both parts just add.
    auto splice = [&](const PauliString &rest, const PauliString &block) {
        size_t n = rest.num_qubits() + block.num_qubits();
        BitVec x(n);
        BitVec z(n);
        for (size_t q = 0; q < marked; q++) {
            x.set(q, rest.x_bit(q));
            z.set(q, rest.z_bit(q));
        }
        for (size_t q = 0; q < block.num_qubits(); q++) {
            x.set(marked + q, block.x_bit(q));
            z.set(marked + q, block.z_bit(q));
        }
        for (size_t q = marked; q < rest.num_qubits(); q++) {
            x.set(q + block.num_qubits(), rest.x_bit(q));
            z.set(q + block.num_qubits(), rest.z_bit(q));
        }
        return PauliString(x, z, (rest.phase_exp() + block.phase_exp()) & 3);
    };

    StabilizerTableau t;
    t.n_qubits = big_m - 1 + w;
    RowSpace space;
    auto offer = [&](PauliString g) {
        if (space.add(binary_row(g))) {
            t.generators.push_back(std::move(g));
        }
    };
    for (const PauliString &g : outer.generators) {
        PauliFactor f{g.z_bit(marked), g.x_bit(marked)};
        PauliString rest = g.restricted_to(others);
        if (!f.i && !f.j) {
            offer(splice(rest, PauliString::identity(w)));
            continue;
        }
        if (f.i && inner.k_set.empty()) {
            throw std::invalid_argument("Marked letter needs a flip-type inner operator but the k_set is empty.");
        }
        if (f.j && inner.f_set.empty()) {
            throw std::invalid_argument("Marked letter needs a sign-type inner operator but the f_set is empty.");
        }
        size_t nk = f.i ? inner.k_set.size() : 1;
        size_t nf = f.j ? inner.f_set.size() : 1;
        for (size_t ki = 0; ki < nk; ki++) {
            for (size_t fi = 0; fi < nf; fi++) {
                PauliString block = PauliString::identity(w);
                if (f.i) {
                    block = inner.k_set[ki];
                }
                if (f.j) {
                    block = f.i ? multiply(inner.f_set[fi], block) : inner.f_set[fi];
                }
                offer(splice(rest, block));
            }
        }
    }
    if (t.generators.size() != target) {
        throw std::runtime_error(
            "Internal error: single projection reached " + std::to_string(t.generators.size()) + " of " +
            std::to_string(target) + " independent generators.");
    }
    t.roles.reserve(t.n_qubits);
    for (size_t q = 0; q < marked; q++) {
        t.roles.push_back(outer.roles[q]);
    }
    t.roles.insert(t.roles.end(), w, leaf_role(inner.side));
    for (size_t q = marked + 1; q < big_m; q++) {
        t.roles.push_back(outer.roles[q]);
    }
    validate(t);
    return t;
}

std::vector<std::vector<size_t>> staircase_rows(size_t n_choices, size_t m_slots) {
    if (n_choices == 0) {
        throw std::invalid_argument("staircase_rows needs at least one choice per slot.");
    }
    std::vector<size_t> all(m_slots);
    for (size_t s = 0; s < m_slots; s++) {
        all[s] = s;
    }
    return support_staircase(all, n_choices, m_slots);
}

size_t staircase_count(size_t n_choices, size_t m_slots) {
    return n_choices * m_slots - m_slots + 1;
}

size_t level_count(size_t outer_legs, size_t inner_width) {
    return outer_legs * inner_width + 1;
}

size_t coupling_count(size_t m_a, size_t m_b) {
    return m_a + m_b;
}

size_t projection_count(size_t m_state_qubits, size_t n_state_qubits) {
    return m_state_qubits + n_state_qubits - 2;
}

}  // namespace forge
