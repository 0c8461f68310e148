#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simdiag/pauli.hpp"

namespace simdiag {

/// One tableau row: the symplectic encoding of i^s * prod X^x Z^z together
/// with the sign bit r accumulated under Clifford conjugation. The row with
/// sign r represents (-1)^r times the canonical Hermitian Pauli of (x, z).
struct TableauRow {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    bool sign = false;
};

/// Binary symplectic tableau over a set of Pauli terms.
///
/// Convention: after applying gate U via one of the apply_* ops, each row
/// encodes U P U^dagger for its original P, so after a full circuit C the row
/// is C P C^dagger. Rows may be all-zero (padding).
class BinaryTableau {
  public:
    BinaryTableau(int n_qubits, std::size_t row_count);

    /// Row k holds term k's masks; all sign bits start at zero.
    /// Throws on empty input or mixed qubit counts.
    static BinaryTableau from_terms(std::span<const PauliString> terms);

    int n_qubits() const { return n_qubits_; }
    std::size_t row_count() const { return rows_.size(); }
    const TableauRow& row(std::size_t k) const { return rows_[k]; }
    TableauRow& row(std::size_t k) { return rows_[k]; }

    bool x_bit(std::size_t k, int qubit) const { return (rows_[k].x >> qubit) & 1; }
    bool z_bit(std::size_t k, int qubit) const { return (rows_[k].z >> qubit) & 1; }

    // Elementary Clifford updates; sign rule first, then the bit rule.
    void apply_h(int t);
    void apply_s(int t);
    void apply_cnot(int c, int t);
    void apply_cz(int c, int t);

    void swap_rows(std::size_t i, std::size_t j);

    /// GF(2) rank of the X block, computed on scratch state.
    int rank_x_block() const;

    /// Copy padded with all-zero rows to exactly n_qubits rows.
    /// Throws if the tableau already has more than n_qubits rows.
    BinaryTableau padded_to_square() const;

    /// Debug dump, one row per line as `x-bits|z-bits|r` (qubit 0 leftmost).
    std::string str() const;

  private:
    void check_qubit(int q) const;

    int n_qubits_ = 0;
    std::vector<TableauRow> rows_;
};

/// Indices (into `terms`) of a maximal linearly independent subset of the
/// terms' 2n-bit symplectic rows, found by the row-swap + XOR-elimination
/// sweep over columns x_0..x_{n-1}, z_0..z_{n-1}. Indices are returned in
/// final row order and refer to the original terms.
std::vector<std::size_t> independent_subset(std::span<const PauliString> terms);

}  // namespace simdiag
