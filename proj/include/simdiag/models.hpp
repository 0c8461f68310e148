#pragma once

#include <cstdint>

#include "simdiag/hamiltonian.hpp"

namespace simdiag {

/// Fully connected transverse-field Ising model: sum_{i<j} J_ij Z_i Z_j +
/// sum_i h_i X_i with all couplings iid Uniform(-1, 1), keyed by (seed, i, j)
/// so the seed fully determines the output. m = n(n-1)/2 + n.
Hamiltonian gen_tfim(int n_qubits, std::uint64_t seed);

/// Jordan-Wigner Majorana operator for mode m in [0, 2n):
/// even m -> Z_0..Z_{q-1} X_q, odd m -> Z_0..Z_{q-1} Y_q with q = m/2.
PauliString majorana(int n_qubits, int mode);

struct SykInfo {
    std::size_t candidate_quadruples = 0;  // C(2n, 4)
    std::size_t merge_collisions = 0;      // distinct quadruples mapping to one Pauli
};

/// SYK quartic Majorana model over 2n modes: one real Gaussian coupling per
/// strictly ordered quadruple i<j<k<l (variance 6/(2n)^3, the standard SYK
/// normalization; any other scale only rescales time). The four-Majorana
/// product is reduced to a Pauli string; a non-real reduced coefficient
/// signals a phase-bookkeeping bug and raises an error.
Hamiltonian gen_syk(int n_qubits, std::uint64_t seed, SykInfo* info = nullptr);

}  // namespace simdiag
