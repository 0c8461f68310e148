#include "simdiag/models.hpp"

#include <cmath>
#include <stdexcept>

#include "simdiag/rng.hpp"

namespace simdiag {

namespace {
constexpr std::uint64_t kTagIsingZZ = 0x7a7a;
constexpr std::uint64_t kTagIsingX = 0x7878;
constexpr std::uint64_t kTagSykRe = 0x5e;
constexpr std::uint64_t kTagSykIm = 0x51;
}  // namespace

Hamiltonian gen_tfim(int n_qubits, std::uint64_t seed) {
    if (n_qubits < 2 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("tfim requires 2 <= n <= 64");
    }
    std::vector<WeightedTerm> terms;
    terms.reserve(static_cast<std::size_t>(n_qubits) * (n_qubits + 1) / 2);
    for (int i = 0; i < n_qubits; ++i) {
        for (int j = i + 1; j < n_qubits; ++j) {
            const double coupling = rng::uniform_pm1(rng::hash(seed, kTagIsingZZ, i, j));
            const std::uint64_t z = (std::uint64_t(1) << i) | (std::uint64_t(1) << j);
            terms.push_back({coupling, PauliString::from_masks(n_qubits, 0, z)});
        }
    }
    for (int i = 0; i < n_qubits; ++i) {
        const double field = rng::uniform_pm1(rng::hash(seed, kTagIsingX, i));
        terms.push_back({field, PauliString::from_masks(n_qubits, std::uint64_t(1) << i, 0)});
    }
    return Hamiltonian::from_terms(n_qubits, std::move(terms));
}

PauliString majorana(int n_qubits, int mode) {
    if (mode < 0 || mode >= 2 * n_qubits) {
        throw std::invalid_argument("majorana mode out of range");
    }
    const int q = mode / 2;
    const std::uint64_t z_prefix = (std::uint64_t(1) << q) - 1;
    const std::uint64_t x = std::uint64_t(1) << q;
    const std::uint64_t z = (mode % 2 == 0) ? z_prefix : z_prefix | x;
    return PauliString::from_masks(n_qubits, x, z);
}

Hamiltonian gen_syk(int n_qubits, std::uint64_t seed, SykInfo* info) {
    if (n_qubits < 2 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("syk requires 2 <= n <= 64");
    }
    const int modes = 2 * n_qubits;
    const double sigma =
        std::sqrt(6.0 / (static_cast<double>(modes) * modes * modes));

    std::vector<WeightedTerm> terms;
    std::size_t quadruples = 0;
    for (int i = 0; i < modes; ++i) {
        for (int j = i + 1; j < modes; ++j) {
            const PauliProduct cij = multiply(majorana(n_qubits, i), majorana(n_qubits, j));
            for (int k = j + 1; k < modes; ++k) {
                const PauliProduct cijk = multiply(cij.pauli, majorana(n_qubits, k));
                for (int l = k + 1; l < modes; ++l) {
                    ++quadruples;
                    // Complex Gaussian coupling; summing the quadruple with
                    // its antisymmetry/conjugation partners leaves the real
                    // part times the ordered product.
                    const double j_re =
                        sigma * rng::gaussian(rng::hash(seed, kTagSykRe, i, j, k, l));
                    (void)rng::hash(seed, kTagSykIm, i, j, k, l);
                    const PauliProduct full = multiply(cijk.pauli, majorana(n_qubits, l));
                    const int phase = (cij.i_power + cijk.i_power + full.i_power) & 3;
                    if (phase & 1) {
                        throw std::runtime_error(
                            "syk generation: quadruple product is not Hermitian "
                            "(phase bookkeeping bug)");
                    }
                    const double coeff = (phase == 2) ? -j_re : j_re;
                    terms.push_back({coeff, full.pauli});
                }
            }
        }
    }
    std::size_t collisions = 0;
    Hamiltonian h = Hamiltonian::from_terms(n_qubits, std::move(terms), kDropTolerance,
                                            &collisions);
    if (info != nullptr) {
        info->candidate_quadruples = quadruples;
        info->merge_collisions = collisions;
    }
    return h;
}

}  // namespace simdiag
