#include "simdiag/diagonalize.hpp"

#include <algorithm>
#include <stdexcept>

namespace simdiag {

namespace {

bool active_bit(std::uint64_t mask, int q) {
    return (mask >> q) & 1;
}

void replay_on(BinaryTableau& tab, const CliffordCircuit& circuit) {
    circuit.for_each_gate([&](char kind, int a, int b) {
        switch (kind) {
            case 'H': tab.apply_h(a); break;
            case 'S': tab.apply_s(a); break;
            case 'C': tab.apply_cnot(a, b); break;
            case 'Z': tab.apply_cz(a, b); break;
        }
    });
}

}  // namespace

std::vector<ColumnKind> classify_columns(const CommutingGroup& group) {
    std::uint64_t x_union = 0, z_union = 0;
    int n = 0;
    for (const auto& t : group.terms) {
        x_union |= t.pauli.x_mask();
        z_union |= t.pauli.z_mask();
        n = t.pauli.n_qubits();
    }
    std::vector<ColumnKind> kinds(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        const bool has_x = (x_union >> q) & 1;
        const bool has_z = (z_union >> q) & 1;
        if (has_x && has_z) {
            kinds[q] = ColumnKind::general;
        } else if (has_x) {
            kinds[q] = ColumnKind::flip_only;
        } else {
            kinds[q] = ColumnKind::diag_only;  // includes identity-only columns
        }
    }
    return kinds;
}

std::vector<int> maximize_x_rank(BinaryTableau& tab, std::uint64_t active) {
    std::vector<int> applied;
    int rank = tab.rank_x_block();
    // Scanned high-to-low: on the worked examples this keeps exactly the H
    // set the construction expects, while low-to-high grabs redundant ones.
    for (int i = tab.n_qubits() - 1; i >= 0; --i) {
        if (!active_bit(active, i)) continue;
        BinaryTableau trial = tab;
        trial.apply_h(i);
        const int trial_rank = trial.rank_x_block();
        if (trial_rank > rank) {
            tab = std::move(trial);
            rank = trial_rank;
            applied.push_back(i);
        }
    }
    return applied;
}

XSweep clear_upper_x(BinaryTableau& tab, std::uint64_t active) {
    XSweep sweep;
    const int n = tab.n_qubits();
    std::size_t cursor = 0;
    for (int c = 0; c < n && cursor < tab.row_count(); ++c) {
        if (!active_bit(active, c)) continue;
        if (!tab.x_bit(cursor, c)) {
            std::size_t found = tab.row_count();
            for (std::size_t j = cursor + 1; j < tab.row_count(); ++j) {
                if (tab.x_bit(j, c)) {
                    found = j;
                    break;
                }
            }
            if (found == tab.row_count()) continue;  // column has no pivot
            tab.swap_rows(cursor, found);
        }
        for (int t = c + 1; t < n; ++t) {
            if (active_bit(active, t) && tab.x_bit(cursor, t)) {
                tab.apply_cnot(c, t);
                sweep.cnots.emplace_back(c, t);
            }
        }
        sweep.pivots.emplace_back(cursor, c);
        ++cursor;
    }
    return sweep;
}

PhaseGates clear_z_block(BinaryTableau& tab, std::uint64_t active,
                         std::span<const std::pair<std::size_t, int>> pivots) {
    PhaseGates gates;
    const int n = tab.n_qubits();
    for (const auto& [row, c] : pivots) {
        for (int j = 0; j < n; ++j) {
            if (j == c || !active_bit(active, j)) continue;
            if (tab.z_bit(row, j)) {
                tab.apply_cz(c, j);
                gates.czs.emplace_back(c, j);
            }
        }
        if (tab.z_bit(row, c)) {
            tab.apply_s(c);
            gates.s_layer.push_back(c);
        }
    }
    return gates;
}

std::vector<int> x_to_z(BinaryTableau& tab) {
    std::vector<int> applied;
    const int n = tab.n_qubits();
    for (int i = 0; i < n; ++i) {
        bool column_has_x = false;
        for (std::size_t k = 0; k < tab.row_count() && !column_has_x; ++k) {
            column_has_x = tab.x_bit(k, i);
        }
        if (column_has_x) {
            tab.apply_h(i);
            applied.push_back(i);
        }
    }
    return applied;
}

CliffordCircuit find_clifford(const CommutingGroup& group) {
    if (group.terms.empty()) {
        throw std::invalid_argument("cannot diagonalize an empty group");
    }
    const int n = group.terms[0].pauli.n_qubits();

    const auto kinds = classify_columns(group);
    std::uint64_t active = 0;
    for (int q = 0; q < n; ++q) {
        if (kinds[q] == ColumnKind::general) active |= 1ull << q;
    }

    std::vector<PauliString> paulis;
    paulis.reserve(group.terms.size());
    for (const auto& t : group.terms) paulis.push_back(t.pauli);
    const auto indep = independent_subset(paulis);

    CliffordCircuit circuit;
    circuit.n_qubits = n;
    if (indep.empty()) {
        return circuit;  // identity-only group, already diagonal
    }

    std::vector<PauliString> basis;
    basis.reserve(indep.size());
    for (auto k : indep) basis.push_back(paulis[k]);
    BinaryTableau tab = BinaryTableau::from_terms(basis).padded_to_square();
    circuit.h_pre = maximize_x_rank(tab, active);
    XSweep sweep = clear_upper_x(tab, active);
    circuit.cnots = std::move(sweep.cnots);
    PhaseGates phase = clear_z_block(tab, active, sweep.pivots);
    circuit.czs = std::move(phase.czs);
    circuit.s_layer = std::move(phase.s_layer);
    circuit.h_post = x_to_z(tab);

    for (std::size_t k = 0; k < tab.row_count(); ++k) {
        if (tab.row(k).x != 0) {
            throw std::runtime_error(
                "clifford synthesis failed: X block not cleared on independent tableau");
        }
    }

    // Canonical layer ordering. H and S layers are sets; CZ pairs commute, so
    // sorting them (after normalizing pair order) preserves the unitary.
    std::sort(circuit.h_pre.begin(), circuit.h_pre.end());
    std::sort(circuit.s_layer.begin(), circuit.s_layer.end());
    std::sort(circuit.h_post.begin(), circuit.h_post.end());
    for (auto& [a, b] : circuit.czs) {
        if (a > b) std::swap(a, b);
    }
    std::sort(circuit.czs.begin(), circuit.czs.end());
    return circuit;
}

DiagonalGroup diagonalize_group(const CommutingGroup& group) {
    CliffordCircuit circuit = find_clifford(group);

    std::vector<PauliString> paulis;
    paulis.reserve(group.terms.size());
    for (const auto& t : group.terms) paulis.push_back(t.pauli);
    BinaryTableau full = BinaryTableau::from_terms(paulis);
    replay_on(full, circuit);

    DiagonalGroup out;
    out.group_index = group.group_index;
    out.circuit = std::move(circuit);
    out.z_masks.reserve(group.terms.size());
    out.signed_coeffs.reserve(group.terms.size());
    for (std::size_t k = 0; k < full.row_count(); ++k) {
        if (full.row(k).x != 0) {
            throw std::runtime_error("group not simultaneously diagonalized: term " +
                                     std::to_string(k) + " keeps an X component");
        }
        out.z_masks.push_back(full.row(k).z);
        out.signed_coeffs.push_back(full.row(k).sign ? -group.terms[k].coeff
                                                     : group.terms[k].coeff);
    }
    return out;
}

}  // namespace simdiag
