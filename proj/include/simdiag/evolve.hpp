#pragma once

#include <span>

#include "simdiag/clifford_circuit.hpp"
#include "simdiag/hamiltonian.hpp"
#include "simdiag/statevector.hpp"

namespace simdiag {

enum class Method { baseline, grouped };
enum class TermOrder { input, group_major };

/// Trotterized evolution over total_time split into n_steps equal steps.
struct EvolutionPlan {
    double total_time = 0.0;
    int n_steps = 1;
    Method method = Method::baseline;
    TermOrder term_order = TermOrder::input;

    double dt() const { return total_time / n_steps; }
    void validate() const;
};

/// Baseline driver: one Pauli-rotation pass per term, in Hamiltonian order,
/// n_steps times.
void evolve_baseline(const Hamiltonian& h, StateVector& psi, const EvolutionPlan& plan);

/// Baseline driver with group-major term order (groups flattened in order).
void evolve_baseline(std::span<const CommutingGroup> groups, StateVector& psi,
                     const EvolutionPlan& plan);

/// Grouped driver: per step and group, C_j then exp(-i Lambda_j dt) then
/// C_j^dagger.
void evolve_grouped(std::span<const DiagonalGroup> groups, StateVector& psi,
                    const EvolutionPlan& plan);

/// Maximum qubit count accepted by the dense oracle.
inline constexpr int kExactEvolveMaxQubits = 12;

/// Dense oracle: psi' = expm(-iHt) psi via Hermitian eigendecomposition.
/// Refuses n > kExactEvolveMaxQubits.
StateVector exact_evolve(const Hamiltonian& h, const StateVector& psi, double t);

/// <psi|H|psi>. Returns the real part; the imaginary residue (should vanish
/// for Hermitian H) is stored in *imag_residue when given.
double expectation(const Hamiltonian& h, const StateVector& psi,
                   double* imag_residue = nullptr);

}  // namespace simdiag
