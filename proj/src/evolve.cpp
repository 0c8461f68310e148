#include "simdiag/evolve.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace simdiag {

void EvolutionPlan::validate() const {
    if (n_steps < 0) {
        throw std::invalid_argument("plan needs n_steps >= 0");
    }
    if (!std::isfinite(total_time)) {
        throw std::invalid_argument("plan needs finite total_time");
    }
}

void evolve_baseline(const Hamiltonian& h, StateVector& psi, const EvolutionPlan& plan) {
    plan.validate();
    if (h.n_qubits() != psi.n_qubits()) {
        throw std::invalid_argument("hamiltonian/state qubit counts differ");
    }
    const double dt = plan.n_steps > 0 ? plan.dt() : 0.0;
    for (int step = 0; step < plan.n_steps; ++step) {
        for (const auto& term : h.terms()) {
            psi.apply_pauli_rotation(term, dt);
        }
    }
}

void evolve_baseline(std::span<const CommutingGroup> groups, StateVector& psi,
                     const EvolutionPlan& plan) {
    plan.validate();
    const double dt = plan.n_steps > 0 ? plan.dt() : 0.0;
    for (int step = 0; step < plan.n_steps; ++step) {
        for (const auto& g : groups) {
            for (const auto& term : g.terms) {
                psi.apply_pauli_rotation(term, dt);
            }
        }
    }
}

void evolve_grouped(std::span<const DiagonalGroup> groups, StateVector& psi,
                    const EvolutionPlan& plan) {
    plan.validate();
    const double dt = plan.n_steps > 0 ? plan.dt() : 0.0;
    for (int step = 0; step < plan.n_steps; ++step) {
        for (const auto& g : groups) {
            psi.apply_clifford(g.circuit);
            psi.apply_diagonal_exp(g, dt);
            psi.apply_clifford_inverse(g.circuit);
        }
    }
}

StateVector exact_evolve(const Hamiltonian& h, const StateVector& psi, double t) {
    const int n = h.n_qubits();
    if (n != psi.n_qubits()) {
        throw std::invalid_argument("hamiltonian/state qubit counts differ");
    }
    if (n > kExactEvolveMaxQubits) {
        throw std::invalid_argument("exact_evolve limited to n <= " +
                                    std::to_string(kExactEvolveMaxQubits) + " qubits");
    }
    const std::uint64_t dim = std::uint64_t(1) << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    // Each Pauli has one nonzero per column: P|b> = i^s (-1)^{<z,b>} |b^x>.
    const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto& term : h.terms()) {
        const std::uint64_t x = term.pauli.x_mask();
        const std::uint64_t z = term.pauli.z_mask();
        const std::complex<double> base = term.coeff * i_pow[term.pauli.phase_exp()];
        for (std::uint64_t b = 0; b < dim; ++b) {
            const bool parity = std::popcount(b & z) & 1;
            m(b ^ x, b) += parity ? -base : base;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    Eigen::VectorXcd v(dim);
    for (std::uint64_t b = 0; b < dim; ++b) v(b) = psi[b];
    Eigen::VectorXcd w = solver.eigenvectors().adjoint() * v;
    for (std::uint64_t k = 0; k < dim; ++k) {
        const double lambda = solver.eigenvalues()(k);
        w(k) *= std::complex<double>(std::cos(lambda * t), -std::sin(lambda * t));
    }
    v = solver.eigenvectors() * w;
    StateVector out(n);
    for (std::uint64_t b = 0; b < dim; ++b) out[b] = v(b);
    return out;
}

double expectation(const Hamiltonian& h, const StateVector& psi, double* imag_residue) {
    if (h.n_qubits() != psi.n_qubits()) {
        throw std::invalid_argument("hamiltonian/state qubit counts differ");
    }
    const std::uint64_t dim = psi.dim();
    const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> total = 0.0;
    for (const auto& term : h.terms()) {
        const std::uint64_t x = term.pauli.x_mask();
        const std::uint64_t z = term.pauli.z_mask();
        const std::complex<double> base = i_pow[term.pauli.phase_exp()];
        // Fixed chunk decomposition keeps the reduction order independent of
        // the worker count.
        constexpr int kChunks = 256;
        std::complex<double> partial[kChunks] = {};
        const std::uint64_t chunk_len = (dim + kChunks - 1) / kChunks;
#pragma omp parallel for schedule(static) if (dim >= (std::uint64_t(1) << 16))
        for (int c = 0; c < kChunks; ++c) {
            const std::uint64_t begin = c * chunk_len;
            const std::uint64_t end = std::min(dim, begin + chunk_len);
            std::complex<double> acc = 0.0;
            for (std::uint64_t b = begin; b < end; ++b) {
                const bool parity = std::popcount((b ^ x) & z) & 1;
                const std::complex<double> ph = parity ? -base : base;
                acc += std::conj(psi[b]) * ph * psi[b ^ x];
            }
            partial[c] = acc;
        }
        std::complex<double> sum = 0.0;
        for (int c = 0; c < kChunks; ++c) sum += partial[c];
        total += term.coeff * sum;
    }
    if (imag_residue != nullptr) {
        *imag_residue = std::abs(total.imag());
    }
    return total.real();
}

}  // namespace simdiag
