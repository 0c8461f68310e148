#include "simdiag/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace simdiag {

namespace {

void check_qubit_count(int n) {
    if (n < 0 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [0, " + std::to_string(kMaxQubits) +
                                    "], got " + std::to_string(n));
    }
}

std::uint64_t mask_bits(int n) {
    return n >= 64 ? ~0ull : ((1ull << n) - 1);
}

}  // namespace

PauliString PauliString::identity(int n_qubits) {
    check_qubit_count(n_qubits);
    return PauliString(n_qubits, 0, 0);
}

PauliString PauliString::from_masks(int n_qubits, std::uint64_t x, std::uint64_t z) {
    check_qubit_count(n_qubits);
    const std::uint64_t allowed = mask_bits(n_qubits);
    if ((x & ~allowed) || (z & ~allowed)) {
        throw std::invalid_argument("mask has bits beyond qubit count");
    }
    return PauliString(n_qubits, x, z);
}

PauliString PauliString::parse(std::string_view text) {
    return parse(text, static_cast<int>(text.size()));
}

PauliString PauliString::parse(std::string_view text, int n_qubits) {
    check_qubit_count(n_qubits);
    if (static_cast<int>(text.size()) != n_qubits) {
        throw std::invalid_argument("pauli string length " + std::to_string(text.size()) +
                                    " does not match qubit count " + std::to_string(n_qubits));
    }
    std::uint64_t x = 0, z = 0;
    for (int i = 0; i < n_qubits; ++i) {
        const std::uint64_t bit = 1ull << i;
        switch (text[i]) {
            case 'I': break;
            case 'X': x |= bit; break;
            case 'Y': x |= bit; z |= bit; break;
            case 'Z': z |= bit; break;
            default:
                throw std::invalid_argument("invalid pauli character '" +
                                            std::string(1, text[i]) + "' at position " +
                                            std::to_string(i + 1));
        }
    }
    return PauliString(n_qubits, x, z);
}

int PauliString::phase_exp() const {
    return std::popcount(x_ & z_) & 3;
}

char PauliString::factor(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    const bool x = (x_ >> qubit) & 1;
    const bool z = (z_ >> qubit) & 1;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

int PauliString::weight() const {
    return std::popcount(x_ | z_);
}

std::string PauliString::str() const {
    std::string s(static_cast<size_t>(n_qubits_), 'I');
    for (int i = 0; i < n_qubits_; ++i) {
        s[i] = factor(i);
    }
    return s;
}

bool commutes(const PauliString& a, const PauliString& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("commutes: qubit counts differ");
    }
    const int p = std::popcount(a.x_mask() & b.z_mask()) ^ std::popcount(a.z_mask() & b.x_mask());
    return (p & 1) == 0;
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("multiply: qubit counts differ");
    }
    // Per qubit, X^xa Z^za X^xb Z^zb = (-1)^(za*xb) X^(xa^xb) Z^(za^zb).
    const std::uint64_t x = a.x_mask() ^ b.x_mask();
    const std::uint64_t z = a.z_mask() ^ b.z_mask();
    PauliString prod = PauliString::from_masks(a.n_qubits(), x, z);
    int power = a.phase_exp() + b.phase_exp() + 2 * std::popcount(a.z_mask() & b.x_mask()) -
                prod.phase_exp();
    return {prod, ((power % 4) + 4) % 4};
}

}  // namespace simdiag
