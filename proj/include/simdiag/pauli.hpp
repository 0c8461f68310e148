#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace simdiag {

/// Hard cap on qubit count: masks are packed into single machine words so
/// AND/XOR/popcount run in O(1).
inline constexpr int kMaxQubits = 64;

/// An n-qubit Pauli operator in binary symplectic form.
///
/// Bit l of x_mask/z_mask describes qubit l (0-based): X has x=1, Z has z=1,
/// Y has both, I has neither. In the text format qubit 0 is the leftmost
/// character, and qubit l owns bit l of a basis-state index.
///
/// Stored operators are kept Hermitian: the operator equals the literal
/// tensor product of {I,X,Y,Z} factors, so phase_exp is pinned to the number
/// of Y factors mod 4 (from Y = iXZ). Sign tracking under Clifford
/// conjugation is the tableau's job, not this type's.
class PauliString {
  public:
    PauliString() = default;

    static PauliString identity(int n_qubits);

    /// Builds the canonical (Hermitian) Pauli with the given masks.
    static PauliString from_masks(int n_qubits, std::uint64_t x, std::uint64_t z);

    /// Parses a string over {I,X,Y,Z}; qubit 0 is the leftmost character.
    static PauliString parse(std::string_view text);
    /// Same, but requires the text length to equal n.
    static PauliString parse(std::string_view text, int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    /// Power of i in the i^s * prod X^x Z^z form; equals (#Y) mod 4.
    int phase_exp() const;

    /// Single-qubit factor, one of 'I','X','Y','Z'.
    char factor(int qubit) const;
    /// Number of non-identity factors.
    int weight() const;
    bool is_identity() const { return x_ == 0 && z_ == 0; }
    /// True when the operator is a tensor product of Z and I only.
    bool is_diagonal() const { return x_ == 0; }

    std::string str() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;

  private:
    PauliString(int n, std::uint64_t x, std::uint64_t z) : n_qubits_(n), x_(x), z_(z) {}

    int n_qubits_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// Symplectic commutation test: parity of <a.x,b.z> xor <a.z,b.x>.
/// Throws on mismatched qubit counts.
bool commutes(const PauliString& a, const PauliString& b);

/// Product a*b expressed as i^{i_power} * pauli with pauli canonical Hermitian.
struct PauliProduct {
    PauliString pauli;
    int i_power = 0;  // mod 4
};

PauliProduct multiply(const PauliString& a, const PauliString& b);

/// A Hamiltonian summand c * P with real finite c.
struct WeightedTerm {
    double coeff = 0.0;
    PauliString pauli;
};

}  // namespace simdiag
