#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace simdiag {

/// Layered Clifford circuit, applied in layer order: h_pre, cnots, czs,
/// s_layer, h_post. H and S layers hold distinct qubits; cnots and czs are
/// sorted ascending by (control, target) / (low, high). All diagonal-layer
/// gates (CZ, S) mutually commute, so sorted storage is canonical.
struct CliffordCircuit {
    int n_qubits = 0;
    std::vector<int> h_pre;
    std::vector<std::pair<int, int>> cnots;
    std::vector<std::pair<int, int>> czs;
    std::vector<int> s_layer;
    std::vector<int> h_post;

    bool empty() const {
        return h_pre.empty() && cnots.empty() && czs.empty() && s_layer.empty() &&
               h_post.empty();
    }
    std::size_t gate_count() const {
        return h_pre.size() + cnots.size() + czs.size() + s_layer.size() + h_post.size();
    }

    /// Visits every gate in application order. The visitor receives
    /// (kind, a, b) with kind one of 'H','C','Z','S' ('C' = CNOT(a,b),
    /// 'Z' = CZ(a,b); b is -1 for single-qubit gates).
    template <typename F>
    void for_each_gate(F&& visit) const {
        for (int t : h_pre) visit('H', t, -1);
        for (auto [c, t] : cnots) visit('C', c, t);
        for (auto [a, b] : czs) visit('Z', a, b);
        for (int t : s_layer) visit('S', t, -1);
        for (int t : h_post) visit('H', t, -1);
    }

    friend bool operator==(const CliffordCircuit&, const CliffordCircuit&) = default;
};

/// A commuting group after diagonalization: term k of the source group maps
/// to signed_coeffs[k] times the Z-product with mask z_masks[k], conjugated
/// by `circuit` (term = C^dagger diag C). Order matches the source group.
struct DiagonalGroup {
    int group_index = 0;
    CliffordCircuit circuit;
    std::vector<std::uint64_t> z_masks;
    std::vector<double> signed_coeffs;
};

}  // namespace simdiag
