#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "simdiag/clifford_circuit.hpp"
#include "simdiag/hamiltonian.hpp"
#include "simdiag/tableau.hpp"

namespace simdiag {

/// Per-qubit classification over a group's terms. Qubits whose factors stay
/// within {Z,I} or {X,I} across the whole group need no synthesis work beyond
/// a single H for the {X,I} case, and are skipped by the elimination sweeps.
enum class ColumnKind { diag_only, flip_only, general };

std::vector<ColumnKind> classify_columns(const CommutingGroup& group);

/// Synthesis step (i): raise the GF(2) rank of the X block with H gates.
/// Scans qubits in `active` once, keeping H(i) only on strict rank increase.
/// Returns the H targets in application order.
std::vector<int> maximize_x_rank(BinaryTableau& tab, std::uint64_t active);

struct XSweep {
    std::vector<std::pair<int, int>> cnots;  // (control, target), application order
    /// (row, column) pivot pairs established by the sweep; on a full-rank
    /// square tableau with every qubit active this is the diagonal.
    std::vector<std::pair<std::size_t, int>> pivots;
};

/// Synthesis step (ii): zero each pivot row's trailing X entries with CNOTs,
/// using row swaps (bookkeeping only) to pull a pivot up for each active
/// column. The row cursor advances only when a pivot is found, so padding
/// rows and pivot-less columns are skipped rather than misaligned.
XSweep clear_upper_x(BinaryTableau& tab, std::uint64_t active);

struct PhaseGates {
    std::vector<std::pair<int, int>> czs;
    std::vector<int> s_layer;
};

/// Synthesis step (iii): zero the pivot rows' Z entries in active columns;
/// CZ from the pivot column clears the off-pivot entries, S clears the one on
/// the pivot column itself. Gates returned in application order.
PhaseGates clear_z_block(BinaryTableau& tab, std::uint64_t active,
                         std::span<const std::pair<std::size_t, int>> pivots);

/// Synthesis step (iv): H on every qubit whose X column still has support.
std::vector<int> x_to_z(BinaryTableau& tab);

/// Synthesizes the Clifford circuit that maps every member of the group to a
/// signed Z/I product. Runs steps (i)-(iv) on the padded independent-subset
/// tableau; throws if the X block is not zero afterwards.
CliffordCircuit find_clifford(const CommutingGroup& group);

/// find_clifford plus a replay of the resulting circuit over a tableau of all
/// group terms, yielding per-term z-masks and signed coefficients.
/// Throws if any term keeps an X component (non-commuting input or bug).
DiagonalGroup diagonalize_group(const CommutingGroup& group);

}  // namespace simdiag
