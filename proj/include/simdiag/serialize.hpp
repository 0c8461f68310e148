#pragma once

#include <span>

#include <json.hpp>

#include "simdiag/clifford_circuit.hpp"
#include "simdiag/hamiltonian.hpp"

namespace simdiag {

/// Circuit layers as arrays of 0-based qubit indices / index pairs, in
/// application order h_pre, cnot, cz, s, h_post.
nlohmann::json circuit_to_json(const CliffordCircuit& c);
CliffordCircuit circuit_from_json(const nlohmann::json& j);

/// One diagonalized group: circuit, z-masks (hex strings), signed coeffs.
nlohmann::json diagonal_group_to_json(const DiagonalGroup& g);

/// Full `diag` document for a partitioned Hamiltonian.
nlohmann::json diag_document(int n_qubits, std::span<const DiagonalGroup> groups);

}  // namespace simdiag
