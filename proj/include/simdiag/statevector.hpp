#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "simdiag/clifford_circuit.hpp"
#include "simdiag/pauli.hpp"

namespace simdiag {

using Amplitude = std::complex<double>;
/// Row-major 2x2 / 4x4 complex matrices for generic gate application.
using Mat2 = std::array<Amplitude, 4>;
using Mat4 = std::array<Amplitude, 16>;

/// Amplitude-traffic counters, accumulated per kernel invocation. Each kernel
/// adds the exact number of amplitude loads/stores its single sweep performs,
/// so the counters expose how many passes over the state a call costs.
struct KernelStats {
    std::uint64_t amp_reads = 0;
    std::uint64_t amp_writes = 0;
    std::uint64_t kernel_calls = 0;
};

/// Dense 2^n-amplitude state vector with fused update kernels.
///
/// Qubit t owns bit t of the basis index. All mutating ops are unitary and
/// data-parallel over disjoint index ranges; results are bit-identical for
/// any worker count.
class StateVector {
  public:
    /// |0...0>.
    explicit StateVector(int n_qubits);

    static StateVector zero_state(int n_qubits);
    /// Uniform superposition |+>^n.
    static StateVector plus_state(int n_qubits);
    /// Haar-ish random state: iid complex gaussian amplitudes, normalized.
    /// Fully determined by the seed.
    static StateVector random_state(int n_qubits, std::uint64_t seed);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t(1) << n_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude& operator[](std::uint64_t i) { return amps_[i]; }
    const Amplitude& operator[](std::uint64_t i) const { return amps_[i]; }

    /// Generic single-qubit gate; U must be unitary within 1e-10.
    void apply_single_qubit(const Mat2& u, int target);
    /// Generic two-qubit gate; the local index is 2*bit(q1) + bit(q2).
    void apply_two_qubit(const Mat4& u, int q1, int q2);
    /// Specialized H (used for circuit H layers).
    void apply_hadamard(int target);

    /// All CNOTs sharing one control in a single half-state swap pass.
    /// `targets` is the OR-mask of target bits; control must not overlap.
    void apply_batched_cnot(int control, std::uint64_t targets);

    /// One pass applying every S (i per set target bit) and CZ (-1 per 11
    /// pair) simultaneously. dagger inverts the S part (CZ is self-inverse).
    void apply_phase_layer(std::uint64_t s_mask,
                           std::span<const std::pair<int, int>> cz_pairs,
                           bool dagger = false);

    /// exp(-i dt sum_k coeffs[k] * Z-product(z_masks[k])) in one pass;
    /// the inner loop runs over the group's terms per basis state.
    void apply_diagonal_exp(std::span<const std::uint64_t> z_masks,
                            std::span<const double> coeffs, double dt);
    void apply_diagonal_exp(const DiagonalGroup& group, double dt);

    /// exp(-i coeff dt P) for a Hermitian Pauli term (baseline path).
    void apply_pauli_rotation(const WeightedTerm& term, double dt);

    /// Layered circuit: h_pre qubit-by-qubit, one batched-CNOT pass per
    /// distinct control, one phase-layer pass for all CZ+S, then h_post.
    void apply_clifford(const CliffordCircuit& c);
    /// Inverse circuit without re-synthesis: layers reversed, S -> S dagger.
    void apply_clifford_inverse(const CliffordCircuit& c);

    /// Raw little-endian dump: 2^n (re, im) double pairs, index = basis.
    void save_raw(std::ostream& out) const;
    static StateVector load_raw(std::istream& in);

    const KernelStats& stats() const { return stats_; }
    void reset_stats() { stats_ = {}; }

  private:
    void check_qubit(int q) const;

    int n_qubits_ = 0;
    std::vector<Amplitude> amps_;
    KernelStats stats_;
};

double norm(const StateVector& a);
/// |<a|b>|; insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace simdiag
